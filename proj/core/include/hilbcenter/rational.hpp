#pragma once

#include <gmpxx.h>

#include <string>

namespace hilbcenter {

/// Arbitrary-precision integer.  All counting and character values use this;
/// no fixed-width arithmetic appears anywhere in the algebra.
using Int = mpz_class;

/// Exact rational, kept canonicalized (coprime, positive denominator).
using Rat = mpq_class;

Int factorial(unsigned long n);
Int int_pow(const Int& base, unsigned long exp);

/// Builds a canonicalized rational from a possibly non-reduced pair.
Rat make_rat(const Int& num, const Int& den);

/// Parses "p" or "p/q" with optional sign.  Throws InputError on anything
/// else (including q == 0).
Rat rat_from_string(const std::string& s);

/// Canonical decimal form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& q);

}  // namespace hilbcenter

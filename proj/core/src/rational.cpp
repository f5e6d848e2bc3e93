#include "hilbcenter/rational.hpp"

#include <cctype>

#include "hilbcenter/errors.hpp"

namespace hilbcenter {

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw InputError("not a rational: '" + s + "'");
  Int n(num), d(den);
  return make_rat(n, d);
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace hilbcenter

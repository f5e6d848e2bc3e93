#pragma once

// Independent reference computations for the test suite.  These deliberately
// do not call into the library's combinatorics: partition counting goes
// through the pentagonal-number recurrence, symmetric-function identities
// through literal polynomial expansion in finitely many variables, and the
// two-variable generating series by direct truncated multiplication.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include <hilbcenter/partition.hpp>
#include <hilbcenter/rational.hpp>

namespace oracles {

using hilbcenter::Int;
using hilbcenter::Partition;

/// p(n) by Euler's pentagonal recurrence.
inline Int pentagonal_count(int n) {
  std::vector<Int> p(n + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Int total = 0;
    for (int k = 1;; ++k) {
      long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
      long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      int sign = (k % 2) ? 1 : -1;
      if (g1 <= m) total += sign * p[m - g1];
      if (g2 <= m) total += sign * p[m - g2];
    }
    p[m] = total;
  }
  return p[n];
}

/// A symmetric polynomial in a fixed number of variables, stored by sorted
/// exponent vector.  Enough machinery to expand m_lambda and p_i literally
/// and multiply them, so transition-matrix claims can be checked against
/// honest polynomial arithmetic.
class SymPoly {
 public:
  using Expo = std::vector<int>;  // descending, padded with zeros
  std::map<Expo, Int, std::greater<Expo>> terms;
  int vars = 0;

  explicit SymPoly(int vars) : vars(vars) {}

  static SymPoly monomial_function(const Partition& lambda, int vars) {
    SymPoly out(vars);
    Expo e(vars, 0);
    for (int i = 0; i < lambda.length(); ++i) e[i] = lambda.parts()[i];
    // sum over all distinct permutations of the exponent vector
    std::sort(e.begin(), e.end());
    do {
      out.add_term(e, 1);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
  }

  static SymPoly power_function(int i, int vars) {
    SymPoly out(vars);
    for (int v = 0; v < vars; ++v) {
      Expo e(vars, 0);
      e[v] = i;
      out.add_term(e, 1);
    }
    return out;
  }

  void add_term(Expo e, const Int& coeff) {
    // store unsorted exponent vectors as-is: terms are over the full
    // polynomial ring, and symmetry emerges from the construction
    terms[e] += coeff;
    if (terms[e] == 0) terms.erase(e);
  }

  SymPoly operator*(const SymPoly& other) const {
    SymPoly out(vars);
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : other.terms) {
        Expo e(vars);
        for (int v = 0; v < vars; ++v) e[v] = e1[v] + e2[v];
        out.add_term(e, c1 * c2);
      }
    return out;
  }

  /// Coefficient of the monomial-function m_lambda, read off as the
  /// coefficient of the dominant exponent vector.
  Int monomial_coefficient(const Partition& lambda) const {
    Expo e(vars, 0);
    for (int i = 0; i < lambda.length(); ++i) e[i] = lambda.parts()[i];
    auto it = terms.find(e);
    return it == terms.end() ? Int(0) : it->second;
  }
};

/// Coefficients of prod_{i>=1} (1 - t^i q^{i-1})^{-1} up to t-degree cap:
/// result[n][k] is the coefficient of t^n q^k.
inline std::vector<std::vector<Int>> euler_product_table(int cap) {
  std::vector<std::vector<Int>> coef(cap + 1,
                                     std::vector<Int>(cap + 1, Int(0)));
  coef[0][0] = 1;
  for (int i = 1; i <= cap; ++i) {
    std::vector<std::vector<Int>> next(cap + 1,
                                       std::vector<Int>(cap + 1, Int(0)));
    for (int n = 0; n <= cap; ++n)
      for (int k = 0; k <= cap; ++k) {
        if (coef[n][k] == 0) continue;
        for (int m = 0; n + i * m <= cap; ++m) {
          int kk = k + (i - 1) * m;
          if (kk > cap) break;
          next[n + i * m][kk] += coef[n][k];
        }
      }
    coef.swap(next);
  }
  return coef;
}

}  // namespace oracles

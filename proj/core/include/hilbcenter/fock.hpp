#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilbcenter/center.hpp"

namespace hilbcenter {

/// An element of the truncated Fock space F = (+)_{n <= cap} Z_n.  Each
/// degree component is stored in the c basis.  Operations that would push
/// weight past the cap fail fast with TruncationError instead of silently
/// dropping terms.
class FockElement {
 public:
  explicit FockElement(int cap);

  int cap() const { return cap_; }
  const std::map<int, CenterElement>& components() const { return comps_; }

  /// Component in degree n (a zero element when absent).
  CenterElement component(int n) const;
  bool is_zero() const { return comps_.empty(); }

  /// Highest degree carrying a nonzero component, -1 for the zero element.
  int top_degree() const;

  /// Inserts the c-basis element `x` as the degree-|x| component (replacing
  /// it).  Throws TruncationError when the degree exceeds the cap.
  void set_component(const CenterElement& x);
  void add_component(const CenterElement& x);

  FockElement& operator+=(const FockElement& other);
  FockElement& operator-=(const FockElement& other);
  FockElement& operator*=(const Rat& scalar);

  bool operator==(const FockElement& other) const = default;
  Json to_json() const;

 private:
  int cap_ = 0;
  std::map<int, CenterElement> comps_;
};

/// Result of checking one Heisenberg relation family on every basis vector
/// of the truncated Fock space.
struct RelationCheck {
  std::string name;
  int degrees_checked = 0;
  int vectors_checked = 0;
  bool passed = true;
  std::string failure;  ///< first counterexample, empty when passed

  Json to_json() const;
};

struct CommutatorReport {
  int cap = 0;
  int i = 0, j = 0;
  std::vector<RelationCheck> checks;
  bool passed() const;
  Json to_json() const;
};

/// The Heisenberg operator calculus on the truncated Fock space.
///
/// create(i) adjoins a part i: P_i c_lambda = c_{lambda + part i}.
/// annihilate(i) removes one: P*_i c_lambda = (-1)^i * i * m_i(lambda) *
/// c_{lambda - part i}, where m_i is the multiplicity of i; on elements with
/// no part i it gives zero.  The operators satisfy
/// [P_i, P*_j] = delta_{ij} * i * (-1)^{i-1} * id, all other commutators
/// vanish.
class FockSpace {
 public:
  FockSpace(const CenterAlgebra& algebra, int cap);

  int cap() const { return cap_; }
  const CenterAlgebra& algebra() const { return algebra_; }

  FockElement zero() const { return FockElement(cap_); }
  FockElement vacuum() const;
  FockElement from_center(const CenterElement& x) const;

  FockElement create(int i, const FockElement& x) const;
  FockElement annihilate(int i, const FockElement& x) const;

  /// Applies the creation operators of the parts of lambda to the vacuum.
  /// Equals c_lambda exactly.
  FockElement vacuum_build(const Partition& lambda) const;

  /// The pairing sum_n (-1)^n (x_n | y_n): creation and annihilation are
  /// mutually adjoint for it.  (Under the plain positive pairing the adjoint
  /// of creation is the unsigned removal operator instead.)
  Rat twisted_form(const FockElement& x, const FockElement& y) const;

  /// Plain positive pairing sum_n (x_n | y_n), exposed so tests can isolate
  /// where the sign twist matters.
  Rat positive_form(const FockElement& x, const FockElement& y) const;

  /// Verifies the three commutator families for the pair (i, j) on every
  /// c-basis vector whose degree keeps both sides inside the cap.
  CommutatorReport commutator_check(int i, int j) const;

 private:
  const CenterAlgebra& algebra_;
  int cap_;
};

}  // namespace hilbcenter

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hilbcenter/characters.hpp"
#include "hilbcenter/partition.hpp"

namespace hilbcenter {

/// Coordinate systems for the center Z_n of the rational symmetric-group
/// algebra, identified with symmetric functions of degree n:
///
///   c  scaled class sums c_lambda = z_lambda * (sum over the class);
///      these correspond to the power sums p_lambda
///   s  Schur direction: c_mu = sum_lambda chi^lambda(mu) s_lambda
///   h  complete homogeneous functions
///   m  monomial functions
enum class Basis : char { c = 'c', s = 's', h = 'h', m = 'm' };

char basis_letter(Basis b);
Basis basis_from_letter(char ch);  // throws InputError

/// An element of Z_n expressed in one named basis: a sparse rational
/// coordinate vector over the partitions of n.  Zero coordinates are never
/// stored, so equality of maps is equality of elements (within one basis).
class CenterElement {
 public:
  using Coords = std::map<Partition, Rat, Partition::CanonicalLess>;

  CenterElement() = default;  // degree 0, zero element, c basis
  CenterElement(int degree, Basis basis);

  static CenterElement basis_vector(Basis basis, const Partition& p,
                                    const Rat& coeff = 1);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const Coords& coords() const { return coords_; }

  bool is_zero() const { return coords_.empty(); }
  Rat coeff(const Partition& p) const;

  /// Adds `value` at `p` (weight must equal the degree), dropping the entry
  /// if the sum cancels.
  void add_coeff(const Partition& p, const Rat& value);
  void set_coeff(const Partition& p, const Rat& value);

  /// Same degree and same basis required; use CenterAlgebra::add to combine
  /// elements living in different bases.
  CenterElement& operator+=(const CenterElement& other);
  CenterElement& operator-=(const CenterElement& other);
  CenterElement& operator*=(const Rat& scalar);
  friend CenterElement operator*(const Rat& scalar, CenterElement x) {
    x *= scalar;
    return x;
  }

  bool operator==(const CenterElement& other) const = default;

  Json to_json() const;  ///< {"degree":n,"basis":"c","coords":{"[2,1]":"1/2",...}}
  std::string to_text() const;

 private:
  int degree_ = 0;
  Basis basis_ = Basis::c;
  Coords coords_;
};

/// Operations on the centers Z_n for all n at once.  Holds the character
/// table store plus per-degree transition data (power sum -> monomial matrix
/// and its inverse), built lazily and cached.  All arithmetic is exact.
class CenterAlgebra {
 public:
  explicit CenterAlgebra(TableStore& tables);

  const TableStore& tables() const { return tables_; }

  /// Canonical partition list of n, cached.
  const std::vector<Partition>& partitions_of(int n) const;

  /// Change of coordinates; exact, and a round trip is the identity.
  CenterElement to_basis(const CenterElement& x, Basis target) const;

  /// Sum; `y` is converted to the basis of `x` first.
  CenterElement add(const CenterElement& x, const CenterElement& y) const;

  /// Induction product (degree-additive): on class sums, induce from the
  /// Young subgroup S_a x S_b to S_{a+b}; on symmetric functions this is the
  /// ordinary product, so c_lambda * c_mu = c_{lambda union mu}.  The result
  /// is returned in the basis of `x`.
  CenterElement induction_product(const CenterElement& x,
                                  const CenterElement& y) const;

  /// Convolution product of Z_n (same degree both sides): multiplication in
  /// the group algebra.  Diagonal in the s basis with eigenvalue the hook
  /// product.  Returned in the basis of `x`.
  CenterElement convolution_product(const CenterElement& x,
                                    const CenterElement& y) const;

  /// Scalar product with (c_lambda | c_mu) = delta * z_lambda, equivalently
  /// (s_lambda | s_mu) = delta.
  Rat scalar_product(const CenterElement& x, const CenterElement& y) const;

  /// Reference implementation of the convolution product by direct
  /// enumeration of S_n inside the group algebra.  Exponential; refuses
  /// degrees above `max_brute_degree` with CapError.  Result in the c basis.
  CenterElement brute_force_convolution(const CenterElement& x,
                                        const CenterElement& y) const;

  static constexpr int max_brute_degree = 7;

  /// Transition matrix row data for degree n, exposed for tests and the
  /// graded-ring builder: power_to_monomial[i][j] is the coefficient of
  /// m_{mu_j} in p_{lambda_i} (integers, lower triangular in canonical
  /// order), monomial_to_power is its exact inverse.
  struct DegreeData {
    std::vector<Partition> partitions;
    std::vector<std::vector<Int>> power_to_monomial;
    std::vector<std::vector<Rat>> monomial_to_power;
  };
  const DegreeData& degree_data(int n) const;

 private:
  CenterElement to_class_sums(const CenterElement& x) const;
  CenterElement from_class_sums(const CenterElement& x, Basis target) const;

  TableStore& tables_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<DegreeData>> degree_data_;
  mutable std::map<int, std::vector<Partition>> partition_lists_;
};

}  // namespace hilbcenter

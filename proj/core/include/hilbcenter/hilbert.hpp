#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilbcenter/cache.hpp"
#include "hilbcenter/center.hpp"

namespace hilbcenter {

/// Cohomological model of the Hilbert scheme of n points on the plane: the
/// cup product on H*(X_n) is the top-filtration-degree part of the
/// convolution product on Z_n, where the filtration degree of c_lambda is
/// n - l(lambda) (half the cohomological degree).

/// Filtration degree |lambda| - l(lambda).
int filtration_degree(const Partition& lambda);

/// b[k] = number of partitions of n with filtration degree k, i.e. the
/// (2k)-th Betti number of the Hilbert scheme; odd cohomology vanishes.
std::vector<long long> betti_numbers(int n);

/// The convolution product (cup product model before passing to the graded
/// ring).  Alias kept so call sites can name the geometric operation.
CenterElement star_product(const CenterAlgebra& algebra,
                           const CenterElement& x, const CenterElement& y);

/// A finite-dimensional graded commutative ring given by structure
/// constants over a labelled basis.  Shared by the Hilbert scheme model
/// (labels = partitions) and the quotient-singularity class algebras
/// (labels = conjugacy classes).
class GradedRing {
 public:
  GradedRing() = default;
  GradedRing(std::vector<std::string> labels, std::vector<int> degrees);

  std::size_t dimension() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// degree -> number of basis labels in that degree (absent degrees have
  /// dimension 0).
  std::map<int, long long> graded_dimensions() const;

  void set_constant(std::size_t i, std::size_t j, std::size_t k,
                    const Rat& value);
  const std::vector<std::pair<std::size_t, Rat>>& product_terms(
      std::size_t i, std::size_t j) const;

  /// Multiplies two coordinate vectors (dense, length = dimension()).
  std::vector<Rat> multiply(const std::vector<Rat>& a,
                            const std::vector<Rat>& b) const;

  /// All stored constants as (i, j, k, value), ordered.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rat>>
  nonzero_constants() const;

  Json to_json() const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::map<std::pair<std::size_t, std::size_t>,
           std::vector<std::pair<std::size_t, Rat>>>
      constants_;
  static const std::vector<std::pair<std::size_t, Rat>> empty_terms_;
};

/// Builds the associated graded ring of Z_n for the length filtration: basis
/// c_lambda with degree n - l(lambda), structure constants the top-degree
/// part of the convolution product.  Every convolution is checked to respect
/// the filtration; a violation is an InvariantViolation (it would falsify
/// the model, not just this run).
///
/// Labels are the partition key strings ("[2,1]").  Pass a DiskCache to
/// reuse results across runs ("gradedring_<n>.json", checksummed); `jobs`
/// parallelizes the pair loop deterministically.
GradedRing hilbert_graded_ring(const CenterAlgebra& algebra, int n,
                               const DiskCache* cache = nullptr, int jobs = 1);

/// Torus fixed-point data attached to a partition of n: hook lengths give
/// the tangent weights {h(s), -h(s)}, the equivariant Euler class is
/// (-1)^n * (hook product)^2.
struct LocalizationRow {
  Partition lambda;
  std::vector<int> tangent_weights;  ///< sorted descending, closed under negation
  Int hook_product;
  Int euler_class;
};

/// Rows for all partitions of n in canonical order.  Construction verifies,
/// exactly, that the Schur vectors are orthonormal for the scalar product
/// and that the Euler class matches the sign times the squared hook product;
/// failure throws InvariantViolation.
std::vector<LocalizationRow> localization_data(const CenterAlgebra& algebra,
                                               int n);

Json localization_to_json(const std::vector<LocalizationRow>& rows);

}  // namespace hilbcenter

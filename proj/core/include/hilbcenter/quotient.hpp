#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hilbcenter/config.hpp"
#include "hilbcenter/hilbert.hpp"
#include "hilbcenter/linalg.hpp"
#include "hilbcenter/permutation.hpp"

namespace hilbcenter {

/// Finite groups acting symplectically: either a permutation group (acting
/// on C^{2m} as the doubled permutation representation, which preserves the
/// standard form) or an explicit matrix group with a user-supplied
/// invariant antisymmetric form.  The class function
///   w(g) = rank(g - id)
/// is the model's cohomological degree on the quotient singularity C^{2m}/G:
/// it is even, vanishes only at the identity, is subadditive under
/// multiplication, and equals twice the age of g.
enum class GroupKind { Permutation, Matrix };

struct GroupSpec {
  GroupKind kind = GroupKind::Permutation;
  std::string name;
  int degree = 0;     ///< permutation kind: number of points m
  int dimension = 0;  ///< matrix kind: size of the matrices (even)
  std::vector<Perm> perm_generators;  ///< 0-based images
  std::vector<QMatrix> matrix_generators;
  QMatrix symplectic_form;  ///< matrix kind only

  /// Parses and validates the JSON group format (see README): checks image
  /// ranges, dimensions, that the form is antisymmetric and invertible, and
  /// that every generator preserves it exactly.  Throws InputError.
  static GroupSpec from_json(const Json& j);
  Json to_json() const;
};

/// Convenience builder: S_m as a permutation group spec (generators: the
/// transposition (1 2) and the m-cycle).
GroupSpec symmetric_group_spec(int m, const std::string& name = "");

struct ConjugacyClass {
  std::size_t representative = 0;  ///< element index of the minimal member
  std::vector<std::size_t> elements;
  Int element_order;
  int w = 0;
  std::optional<Rat> age;  ///< permutation kind only
};

/// A fully enumerated finite group with conjugacy data.  Element 0 is the
/// identity; elements are indexed in breadth-first discovery order, so the
/// layout is deterministic for a fixed spec.
class FiniteGroup {
 public:
  static FiniteGroup enumerate(const GroupSpec& spec, const RunConfig& config);

  const GroupSpec& spec() const { return spec_; }
  GroupKind kind() const { return spec_.kind; }
  std::size_t order() const;

  /// Dimension of the symplectic space the group acts on (2m for the
  /// permutation kind).
  int symplectic_dimension() const;

  std::size_t identity() const { return 0; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }

  /// w of a single element (by its class).
  int w_of(std::size_t element) const;

  const Perm& perm_element(std::size_t i) const;
  const QMatrix& matrix_element(std::size_t i) const;

  /// Matrix form of an element: the element itself for the matrix kind, the
  /// doubled permutation matrix for the permutation kind.
  QMatrix symplectic_matrix(std::size_t i) const;

  Json class_list_json() const;

 private:
  FiniteGroup() = default;
  void classify(const RunConfig& config);

  GroupSpec spec_;
  std::vector<Perm> perm_elems_;
  std::vector<QMatrix> mat_elems_;
  std::unordered_map<std::string, std::size_t> index_;  ///< element key -> idx
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> class_of_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint32_t> mult_table_;  ///< row-major, built when order^2 fits
  std::size_t order_ = 0;
};

/// w profile: graded dimensions of the class algebra, i.e. degree w -> number
/// of conjugacy classes with that w.
std::map<int, long long> class_w_profile(const FiniteGroup& group);

/// The associated graded ring of the center of C[G] for the w filtration:
/// basis = class sums (labels "C0", "C1", ... in class order), degree = w,
/// structure constants = the w-additive part of class sum products.  Every
/// product is checked against subadditivity during construction; violations
/// throw InvariantViolation.
GradedRing filtered_class_algebra(const FiniteGroup& group, int jobs = 1);

struct SubadditivityReport {
  bool exhaustive = true;
  std::uint64_t pairs_checked = 0;
  bool passed = true;
  std::string failure;
  Json to_json() const;
};

/// Checks w(gh) <= w(g) + w(h).  Exhaustive over all ordered pairs when
/// |G| <= config.subadditivity_cap, otherwise a deterministic sample of
/// `sample_pairs` pairs drawn from mt19937_64(config.seed).
SubadditivityReport subadditivity_check(const FiniteGroup& group,
                                        const RunConfig& config,
                                        std::uint64_t sample_pairs = 200000);

struct AgeReport {
  bool passed = true;
  std::string failure;
  Json to_json() const;
};

/// Permutation kind only: recomputes the age of every class from the
/// eigenvalue angles of the doubled action (exact rational arithmetic),
/// asserts it is an integer, and compares w == 2 * age.
AgeReport age_consistency_check(const FiniteGroup& group);

struct ReferenceComparison {
  std::string name;
  std::vector<long long> reference_betti;  ///< b[k] = expected dim in degree 2k
  std::vector<long long> computed;
  bool matches = false;
  Json to_json() const;
};

/// Compares the w profile against a named entry of the reference Betti table
/// (data/reference_betti.json).  Throws InputError when the name is unknown.
ReferenceComparison compare_with_reference(const FiniteGroup& group,
                                           const std::string& name,
                                           const std::filesystem::path& file);

}  // namespace hilbcenter

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hilbcenter/json.hpp"
#include "hilbcenter/rational.hpp"

namespace hilbcenter {

/// An integer partition: a weakly decreasing list of positive parts.
///
/// The empty partition (weight 0) is a first-class value; it labels the unit
/// of the induction product and the vacuum vector.  Instances are immutable
/// after construction and always validated, so downstream code can assume
/// well-formedness.
class Partition {
 public:
  /// The empty partition.
  Partition() = default;

  /// Validates that `parts` is weakly decreasing with positive entries.
  /// Throws InputError otherwise.
  explicit Partition(std::vector<int> parts);

  /// Weight |lambda|: the sum of the parts.
  int weight() const { return weight_; }

  /// Number of parts l(lambda).
  int length() const { return static_cast<int>(parts_.size()); }

  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  /// Multiplicity of the part value `v` (0 when absent or v < 1).
  int multiplicity(int v) const;

  /// Largest part, or 0 for the empty partition.
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

  Partition with_part_added(int v) const;

  /// Removes one copy of `v`; throws InputError if `v` is not a part.
  Partition with_part_removed(int v) const;

  /// Multiset union of the parts.
  Partition merged_with(const Partition& other) const;

  Partition conjugate() const;

  /// All hook lengths of the Young diagram, sorted descending.
  std::vector<int> hook_lengths() const;

  /// Product of all hook lengths (1 for the empty partition).
  Int hook_product() const;

  /// Order of the centralizer of a permutation with this cycle type:
  /// prod_v v^{m_v} m_v!  where m_v is the multiplicity of v.
  Int centralizer_order() const;

  /// Parts joined by '+', e.g. "3+1+1"; "0" for the empty partition.
  std::string to_text() const;

  bool operator==(const Partition& other) const = default;

  /// Strict order underlying the canonical enumeration: by weight first,
  /// then reverse-lexicographic on parts, so within one weight the order is
  /// (n), (n-1,1), ..., (1,...,1).
  struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const {
      if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
      return a.parts_ > b.parts_;
    }
  };

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n in canonical (reverse-lexicographic) order.
/// enumerate_partitions(0) == {Partition{}}.
std::vector<Partition> enumerate_partitions(int n);

/// Number of partitions of n (length of the list above).
Int partition_count(int n);

/// Dominance order on partitions of equal weight: mu <= lambda iff every
/// prefix sum of mu is <= the corresponding prefix sum of lambda.  Throws
/// InputError when the weights differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// Position of `p` in enumerate_partitions(p.weight()); the list must be the
/// canonical one.  Throws InputError when absent.
std::size_t partition_index(const std::vector<Partition>& canonical,
                            const Partition& p);

/// One term of the expansion of p_i * m_lambda in the monomial basis:
/// mu arises from lambda by removing one part k (k = 0 means no removal) and
/// inserting a part k + i; the coefficient is the multiplicity of k + i in mu.
struct MonomialGrowthTerm {
  Partition mu;
  int moved_part = 0;  ///< the removed part k, 0 when a fresh part was added
  int coeff = 0;
};

/// Expands p_i * m_lambda (i >= 1).  The produced partitions are pairwise
/// distinct; the library verifies this and throws InvariantViolation if two
/// different k ever collide.  Terms come back sorted by canonical order of mu.
std::vector<MonomialGrowthTerm> monomial_growth_terms(const Partition& lambda,
                                                      int i);

void to_json(Json& j, const Partition& p);
void from_json(const Json& j, Partition& p);

/// Compact key form used in JSON maps and checksums, e.g. "[2,1]", "[]".
std::string partition_key(const Partition& p);
Partition partition_from_key(const std::string& key);

}  // namespace hilbcenter

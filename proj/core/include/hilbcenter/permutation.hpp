#pragma once

#include <vector>

#include "hilbcenter/partition.hpp"

namespace hilbcenter {

/// A permutation of {0, ..., m-1} in one-line image form: p[i] is the image
/// of i.  (The JSON interchange format uses 1-based images; conversion
/// happens at the parsing boundary.)
using Perm = std::vector<int>;

Perm perm_identity(int m);
bool is_permutation(const Perm& p);

/// Composition acting left to right on values: (a*b)(i) = a[b[i]].
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);

int perm_cycle_count(const Perm& p);

/// Cycle lengths as a partition of m.
Partition cycle_type(const Perm& p);

/// All m! permutations in lexicographic one-line order.  Throws CapError when
/// m! would exceed `cap` (0 disables the check).
std::vector<Perm> symmetric_group_elements(int m, std::size_t cap = 0);

}  // namespace hilbcenter

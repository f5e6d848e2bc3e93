#include "hilbcenter/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "hilbcenter/errors.hpp"

namespace hilbcenter {

Perm perm_identity(int m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x])
      return false;
    seen[x] = true;
  }
  return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size())
    throw InputError("composing permutations of different degree");
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm perm_inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

int perm_cycle_count(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return cycles;
}

Partition cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition(lengths);
}

std::vector<Perm> symmetric_group_elements(int m, std::size_t cap) {
  if (m < 0) throw InputError("negative permutation degree");
  std::size_t size = 1;
  for (int k = 2; k <= m; ++k) {
    size *= k;
    if (cap && size > cap)
      throw CapError("S_" + std::to_string(m) +
                     " exceeds the enumeration cap of " + std::to_string(cap));
  }
  std::vector<Perm> out;
  out.reserve(size);
  Perm p = perm_identity(m);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace hilbcenter

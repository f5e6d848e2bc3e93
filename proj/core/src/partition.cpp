#include "hilbcenter/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hilbcenter/errors.hpp"

namespace hilbcenter {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InputError("partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

int Partition::multiplicity(int v) const {
  if (v < 1) return 0;
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

Partition Partition::with_part_added(int v) const {
  if (v < 1) throw InputError("part must be positive");
  std::vector<int> p = parts_;
  p.insert(std::upper_bound(p.begin(), p.end(), v, std::greater<int>()), v);
  Partition out;
  out.parts_ = std::move(p);
  out.weight_ = weight_ + v;
  return out;
}

Partition Partition::with_part_removed(int v) const {
  auto it = std::find(parts_.begin(), parts_.end(), v);
  if (it == parts_.end())
    throw InputError("partition " + to_text() + " has no part " +
                     std::to_string(v));
  Partition out;
  out.parts_ = parts_;
  out.parts_.erase(out.parts_.begin() + (it - parts_.begin()));
  out.weight_ = weight_ - v;
  return out;
}

Partition Partition::merged_with(const Partition& other) const {
  std::vector<int> p;
  p.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(),
             other.parts_.end(), std::back_inserter(p), std::greater<int>());
  Partition out;
  out.parts_ = std::move(p);
  out.weight_ = weight_ + other.weight_;
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  conj.reserve(max_part());
  for (int c = 0; c < max_part(); ++c) {
    int col = 0;
    for (int p : parts_)
      if (p > c) ++col;
    conj.push_back(col);
  }
  Partition out;
  out.parts_ = std::move(conj);
  out.weight_ = weight_;
  return out;
}

std::vector<int> Partition::hook_lengths() const {
  Partition conj = conjugate();
  std::vector<int> hooks;
  hooks.reserve(weight_);
  for (int r = 0; r < length(); ++r)
    for (int c = 0; c < parts_[r]; ++c)
      hooks.push_back((parts_[r] - c) + (conj.parts_[c] - r) - 1);
  std::sort(hooks.begin(), hooks.end(), std::greater<int>());
  return hooks;
}

Int Partition::hook_product() const {
  Int prod = 1;
  for (int h : hook_lengths()) prod *= h;
  return prod;
}

Int Partition::centralizer_order() const {
  Int z = 1;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    unsigned long mult = j - i;
    z *= int_pow(parts_[i], mult) * factorial(mult);
    i = j;
  }
  return z;
}

std::string Partition::to_text() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << '+';
    os << parts_[i];
  }
  return os.str();
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& stack,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(stack));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    stack.push_back(p);
    enumerate_rec(remaining - p, p, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw InputError("cannot enumerate partitions of a negative n");
  std::vector<Partition> out;
  std::vector<int> stack;
  enumerate_rec(n, n, stack, out);
  return out;
}

Int partition_count(int n) {
  if (n < 0) throw InputError("cannot count partitions of a negative n");
  // Direct count by the same recursion shape as the enumeration, with a
  // small memo; cheap at the sizes this project handles.
  std::map<std::pair<int, int>, Int> memo;
  auto count = [&](auto&& self, int remaining, int max_part) -> Int {
    if (remaining == 0) return 1;
    auto key = std::make_pair(remaining, std::min(remaining, max_part));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = 0;
    for (int p = key.second; p >= 1; --p) total += self(self, remaining - p, p);
    memo.emplace(key, total);
    return total;
  };
  return count(count, n, n);
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw InputError("dominance compares partitions of equal weight, got " +
                     mu.to_text() + " and " + lambda.to_text());
  long long sum_mu = 0, sum_la = 0;
  int rows = std::max(mu.length(), lambda.length());
  for (int k = 0; k < rows; ++k) {
    sum_mu += k < mu.length() ? mu.parts()[k] : 0;
    sum_la += k < lambda.length() ? lambda.parts()[k] : 0;
    if (sum_mu > sum_la) return false;
  }
  return true;
}

std::size_t partition_index(const std::vector<Partition>& canonical,
                            const Partition& p) {
  auto it = std::lower_bound(canonical.begin(), canonical.end(), p,
                             Partition::CanonicalLess{});
  if (it == canonical.end() || !(*it == p))
    throw InputError("partition " + p.to_text() + " not in canonical list");
  return static_cast<std::size_t>(it - canonical.begin());
}

std::vector<MonomialGrowthTerm> monomial_growth_terms(const Partition& lambda,
                                                      int i) {
  if (i < 1) throw InputError("monomial growth needs a positive part size");
  std::vector<int> candidates{0};
  for (int p : std::set<int>(lambda.parts().begin(), lambda.parts().end()))
    candidates.push_back(p);

  std::map<Partition, MonomialGrowthTerm, Partition::CanonicalLess> terms;
  for (int k : candidates) {
    Partition mu = k == 0 ? lambda.with_part_added(i)
                          : lambda.with_part_removed(k).with_part_added(k + i);
    MonomialGrowthTerm term{mu, k, mu.multiplicity(k + i)};
    if (!terms.emplace(mu, term).second)
      throw InvariantViolation(
          "monomial growth produced " + mu.to_text() +
          " from two different parts of " + lambda.to_text() +
          "; the moved part is supposed to be recoverable from the result");
  }
  std::vector<MonomialGrowthTerm> out;
  out.reserve(terms.size());
  for (auto& [mu, term] : terms) out.push_back(term);
  return out;
}

void to_json(Json& j, const Partition& p) { j = p.parts(); }

void from_json(const Json& j, Partition& p) {
  if (!j.is_array()) throw InputError("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw InputError("partition parts must be integers");
    parts.push_back(e.get<int>());
  }
  p = Partition(std::move(parts));
}

std::string partition_key(const Partition& p) {
  Json j = p.parts();
  return j.dump();
}

Partition partition_from_key(const std::string& key) {
  Json j;
  try {
    j = Json::parse(key);
  } catch (const Json::parse_error&) {
    throw InputError("not a partition key: '" + key + "'");
  }
  Partition p;
  from_json(j, p);
  return p;
}

}  // namespace hilbcenter

#include "hilbcenter/characters.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "hilbcenter/errors.hpp"

namespace hilbcenter {

namespace {

// Murnaghan-Nakayama with shapes encoded as beta sets (first-column hook
// lengths).  Removing a border strip of size t is moving one beta number b
// down to b - t, allowed when b - t is free; the strip height is the number
// of beta numbers strictly between the two, which gives the sign.  This
// keeps the recursion purely arithmetic: no diagram surgery.
class MnEvaluator {
 public:
  // shape and suffix are both weakly decreasing part lists; suffix is what
  // remains of the cycle type.  One evaluator is shared across a whole
  // character table, so the memo sees every (subshape, remaining type) pair
  // only once.
  Int eval(const std::vector<int>& shape, const std::vector<int>& suffix,
           std::size_t suffix_from) {
    if (suffix_from == suffix.size())
      return shape.empty() ? Int(1) : Int(0);

    Key key = make_key(shape, suffix, suffix_from);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int t = suffix[suffix_from];
    std::size_t l = shape.size();
    std::vector<int> beta(l);
    for (std::size_t i = 0; i < l; ++i)
      beta[i] = shape[i] + static_cast<int>(l - 1 - i);  // strictly decreasing

    Int total = 0;
    for (std::size_t i = 0; i < l; ++i) {
      int target = beta[i] - t;
      if (target < 0) continue;
      if (std::binary_search(beta.rbegin(), beta.rend(), target)) continue;
      int height = 0;
      for (int b : beta)
        if (target < b && b < beta[i]) ++height;

      std::vector<int> nb = beta;
      nb[i] = target;
      std::sort(nb.begin(), nb.end(), std::greater<int>());
      std::vector<int> sub;
      sub.reserve(l);
      for (std::size_t r = 0; r < l; ++r) {
        int part = nb[r] - static_cast<int>(l - 1 - r);
        if (part > 0) sub.push_back(part);
      }
      Int child = eval(sub, suffix, suffix_from + 1);
      if (height % 2)
        total -= child;
      else
        total += child;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  using Key = std::vector<int>;

  static Key make_key(const std::vector<int>& shape,
                      const std::vector<int>& suffix, std::size_t from) {
    Key key;
    key.reserve(shape.size() + (suffix.size() - from) + 1);
    key.insert(key.end(), shape.begin(), shape.end());
    key.push_back(-1);
    key.insert(key.end(), suffix.begin() + from, suffix.end());
    return key;
  }

  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 0xcbf29ce484222325ull;
      for (int v : k) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 0x100000001b3ull;
      }
      return h;
    }
  };

  std::unordered_map<Key, Int, KeyHash> memo_;
};

}  // namespace

Int mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw InputError("character arguments must have equal weight, got " +
                     lambda.to_text() + " and " + mu.to_text());
  MnEvaluator ev;
  return ev.eval(lambda.parts(), mu.parts(), 0);
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  return partition_index(labels, p);
}

const Int& CharacterTable::value(const Partition& lambda,
                                 const Partition& mu) const {
  return values[index_of(lambda)][index_of(mu)];
}

namespace {

std::string canonical_payload(const CharacterTable& t) {
  std::ostringstream os;
  os << "hilbcenter.chartable|1|" << t.n;
  for (const Partition& p : t.labels) os << '|' << partition_key(p);
  for (const auto& row : t.values) {
    os << '|';
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ',';
      os << row[j].get_str();
    }
  }
  return os.str();
}

}  // namespace

std::string CharacterTable::checksum() const {
  return fnv1a64_hex(canonical_payload(*this));
}

Json CharacterTable::to_json() const {
  Json j;
  j["format"] = "hilbcenter.chartable";
  j["version"] = 1;
  j["n"] = n;
  Json labels_json = Json::array();
  for (const Partition& p : labels) {
    Json pj;
    hilbcenter::to_json(pj, p);
    labels_json.push_back(std::move(pj));
  }
  j["partitions"] = std::move(labels_json);
  Json rows = Json::array();
  for (const auto& row : values) {
    Json r = Json::array();
    for (const Int& v : row) r.push_back(v.get_str());
    rows.push_back(std::move(r));
  }
  j["values"] = std::move(rows);
  j["checksum"] = checksum();
  return j;
}

CharacterTable CharacterTable::from_json(const Json& j) {
  try {
    if (j.at("format").get<std::string>() != "hilbcenter.chartable")
      throw CacheError("wrong format tag in character table document");
    if (j.at("version").get<int>() != 1)
      throw CacheError("unsupported character table version");
    CharacterTable t;
    t.n = j.at("n").get<int>();
    if (t.n < 0) throw CacheError("negative n in character table document");
    std::vector<Partition> expect = enumerate_partitions(t.n);
    const Json& labels = j.at("partitions");
    if (labels.size() != expect.size())
      throw CacheError("character table has the wrong number of partitions");
    for (std::size_t i = 0; i < expect.size(); ++i) {
      Partition p;
      hilbcenter::from_json(labels[i], p);
      if (!(p == expect[i]))
        throw CacheError("character table partitions are not canonical");
    }
    t.labels = std::move(expect);
    const Json& rows = j.at("values");
    if (rows.size() != t.labels.size())
      throw CacheError("character table has the wrong number of rows");
    for (const auto& row : rows) {
      if (row.size() != t.labels.size())
        throw CacheError("character table row has the wrong length");
      std::vector<Int> r;
      for (const auto& cell : row) {
        std::string s = cell.get<std::string>();
        if (s.empty() ||
            s.find_first_not_of("-0123456789") != std::string::npos)
          throw CacheError("character table entry is not an integer: '" + s +
                           "'");
        r.emplace_back(s);
      }
      t.values.push_back(std::move(r));
    }
    std::string declared = j.at("checksum").get<std::string>();
    if (declared != t.checksum())
      throw CacheError("character table checksum mismatch");
    return t;
  } catch (const Json::exception& e) {
    throw CacheError(std::string("malformed character table document: ") +
                     e.what());
  } catch (const InputError& e) {
    throw CacheError(std::string("malformed character table document: ") +
                     e.what());
  }
}

CharacterTable compute_character_table(int n) {
  if (n < 0) throw InputError("character table needs n >= 0");
  CharacterTable t;
  t.n = n;
  t.labels = enumerate_partitions(n);
  std::size_t count = t.labels.size();
  t.values.assign(count, std::vector<Int>(count));
  MnEvaluator ev;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      t.values[i][j] = ev.eval(t.labels[i].parts(), t.labels[j].parts(), 0);
  return t;
}

TableStore::TableStore(int max_n) : max_n_(max_n) {}

TableStore::TableStore(std::filesystem::path cache_dir, int max_n,
                       bool use_disk)
    : disk_(DiskCache(std::move(cache_dir))),
      use_disk_(use_disk),
      max_n_(max_n) {}

std::string TableStore::cache_name(int n) {
  return "chartable_" + std::to_string(n) + ".json";
}

const CharacterTable& TableStore::get(int n) {
  if (n < 0) throw InputError("character table needs n >= 0");
  if (n > max_n_)
    throw CapError("character table for n = " + std::to_string(n) +
                   " exceeds the configured maximum of " +
                   std::to_string(max_n_) + " (raise --max-n)");
  std::lock_guard<std::mutex> lock(mutex_);
  if (auto it = memory_.find(n); it != memory_.end()) return *it->second;

  if (disk_enabled()) {
    if (auto doc = disk_->load(cache_name(n))) {
      // A file that exists but does not validate is a corruption report,
      // not a recompute trigger; from_json throws CacheError.
      auto table = std::make_unique<CharacterTable>(
          CharacterTable::from_json(*doc));
      if (table->n != n)
        throw CacheError("cache file " +
                         disk_->path_for(cache_name(n)).string() +
                         " holds the table for a different n");
      auto [it, inserted] = memory_.emplace(n, std::move(table));
      return *it->second;
    }
  }

  auto table = std::make_unique<CharacterTable>(compute_character_table(n));
  if (disk_enabled()) disk_->store(cache_name(n), table->to_json());
  auto [it, inserted] = memory_.emplace(n, std::move(table));
  return *it->second;
}

}  // namespace hilbcenter

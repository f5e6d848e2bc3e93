#include "hilbcenter/quotient.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>

#include "hilbcenter/errors.hpp"
#include "hilbcenter/parallel.hpp"

namespace hilbcenter {

namespace {

Perm perm_from_json_images(const Json& j, int degree) {
  if (!j.is_array() || static_cast<int>(j.size()) != degree)
    throw InputError("permutation generator must list exactly " +
                     std::to_string(degree) + " images");
  Perm p;
  p.reserve(degree);
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw InputError("permutation images must be integers");
    p.push_back(e.get<int>() - 1);  // file format is 1-based
  }
  if (!is_permutation(p))
    throw InputError("permutation images are not a bijection of 1..=" +
                     std::to_string(degree));
  return p;
}

Json perm_to_json_images(const Perm& p) {
  Json j = Json::array();
  for (int x : p) j.push_back(x + 1);
  return j;
}

}  // namespace

GroupSpec GroupSpec::from_json(const Json& j) {
  GroupSpec spec;
  try {
    std::string kind = j.at("kind").get<std::string>();
    spec.name = j.value("name", std::string());
    if (kind == "permutation") {
      spec.kind = GroupKind::Permutation;
      spec.degree = j.at("degree").get<int>();
      if (spec.degree < 1)
        throw InputError("permutation group degree must be >= 1");
      for (const auto& g : j.value("generators", Json::array()))
        spec.perm_generators.push_back(perm_from_json_images(g, spec.degree));
    } else if (kind == "matrix") {
      spec.kind = GroupKind::Matrix;
      spec.dimension = j.at("dimension").get<int>();
      if (spec.dimension < 2 || spec.dimension % 2 != 0)
        throw InputError("matrix group dimension must be even and >= 2");
      std::size_t dim = static_cast<std::size_t>(spec.dimension);
      spec.symplectic_form = QMatrix::from_json(j.at("symplectic_form"));
      if (spec.symplectic_form.rows() != dim ||
          spec.symplectic_form.cols() != dim)
        throw InputError("symplectic form has the wrong dimension");
      if (!(spec.symplectic_form.transpose() ==
            spec.symplectic_form.negated()))
        throw InputError("symplectic form must be antisymmetric");
      spec.symplectic_form.inverse();  // throws when degenerate
      for (const auto& g : j.value("generators", Json::array())) {
        QMatrix m = QMatrix::from_json(g);
        if (m.rows() != dim || m.cols() != dim)
          throw InputError("matrix generator has the wrong dimension");
        if (!(m.transpose() * spec.symplectic_form * m ==
              spec.symplectic_form))
          throw InputError(
              "matrix generator does not preserve the symplectic form");
        spec.matrix_generators.push_back(std::move(m));
      }
    } else {
      throw InputError("group kind must be 'permutation' or 'matrix', got '" +
                       kind + "'");
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed group spec: ") + e.what());
  }
  return spec;
}

Json GroupSpec::to_json() const {
  Json j;
  j["kind"] = kind == GroupKind::Permutation ? "permutation" : "matrix";
  if (!name.empty()) j["name"] = name;
  if (kind == GroupKind::Permutation) {
    j["degree"] = degree;
    Json gens = Json::array();
    for (const Perm& p : perm_generators)
      gens.push_back(perm_to_json_images(p));
    j["generators"] = std::move(gens);
  } else {
    j["dimension"] = dimension;
    Json gens = Json::array();
    for (const QMatrix& m : matrix_generators) gens.push_back(m.to_json());
    j["generators"] = std::move(gens);
    j["symplectic_form"] = symplectic_form.to_json();
  }
  return j;
}

GroupSpec symmetric_group_spec(int m, const std::string& name) {
  if (m < 1) throw InputError("symmetric group spec needs m >= 1");
  GroupSpec spec;
  spec.kind = GroupKind::Permutation;
  spec.name = name.empty() ? "S" + std::to_string(m) : name;
  spec.degree = m;
  if (m >= 2) {
    Perm swap01 = perm_identity(m);
    std::swap(swap01[0], swap01[1]);
    spec.perm_generators.push_back(swap01);
    if (m >= 3) {
      Perm cycle(m);
      for (int i = 0; i < m; ++i) cycle[i] = (i + 1) % m;
      spec.perm_generators.push_back(cycle);
    }
  }
  return spec;
}

std::size_t FiniteGroup::order() const { return order_; }

int FiniteGroup::symplectic_dimension() const {
  return spec_.kind == GroupKind::Permutation ? 2 * spec_.degree
                                              : spec_.dimension;
}

const Perm& FiniteGroup::perm_element(std::size_t i) const {
  if (spec_.kind != GroupKind::Permutation)
    throw InputError("not a permutation group");
  return perm_elems_[i];
}

const QMatrix& FiniteGroup::matrix_element(std::size_t i) const {
  if (spec_.kind != GroupKind::Matrix)
    throw InputError("not a matrix group");
  return mat_elems_[i];
}

QMatrix FiniteGroup::symplectic_matrix(std::size_t i) const {
  if (spec_.kind == GroupKind::Matrix) return mat_elems_[i];
  // Doubled permutation action on C^m (+) C^m; it preserves the standard
  // form [[0, I], [-I, 0]] because both blocks carry the same permutation.
  const Perm& p = perm_elems_[i];
  std::size_t m = p.size();
  QMatrix out(2 * m, 2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    out.at(static_cast<std::size_t>(p[k]), k) = 1;
    out.at(m + static_cast<std::size_t>(p[k]), m + k) = 1;
  }
  return out;
}

namespace {

std::string perm_key(const Perm& p) {
  std::string s;
  s.reserve(p.size() * 3);
  for (int x : p) {
    s += std::to_string(x);
    s += ',';
  }
  return s;
}

}  // namespace

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
  if (!mult_table_.empty()) return mult_table_[a * order_ + b];
  std::string key = spec_.kind == GroupKind::Permutation
                        ? perm_key(perm_compose(perm_elems_[a],
                                                perm_elems_[b]))
                        : (mat_elems_[a] * mat_elems_[b]).key();
  auto it = index_.find(key);
  if (it == index_.end())
    throw InvariantViolation("group is not closed under multiplication");
  return it->second;
}

std::size_t FiniteGroup::inverse(std::size_t a) const { return inverse_[a]; }

int FiniteGroup::w_of(std::size_t element) const {
  return classes_[class_of_[element]].w;
}

FiniteGroup FiniteGroup::enumerate(const GroupSpec& spec,
                                   const RunConfig& config) {
  FiniteGroup g;
  g.spec_ = spec;

  std::uint64_t cap = spec.kind == GroupKind::Permutation
                          ? config.permutation_group_cap
                          : config.matrix_group_cap;

  // Breadth-first closure from the identity, multiplying by generators on
  // the right.  Element order is discovery order, which is deterministic
  // for a fixed spec, so every downstream report is reproducible.
  if (spec.kind == GroupKind::Permutation) {
    std::deque<std::size_t> queue;
    Perm id = perm_identity(spec.degree);
    g.perm_elems_.push_back(id);
    g.index_.emplace(perm_key(id), 0);
    queue.push_back(0);
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (const Perm& gen : spec.perm_generators) {
        Perm next = perm_compose(g.perm_elems_[cur], gen);
        std::string key = perm_key(next);
        if (g.index_.contains(key)) continue;
        if (g.perm_elems_.size() >= cap)
          throw CapError("permutation group exceeds the enumeration cap of " +
                         std::to_string(cap));
        std::size_t idx = g.perm_elems_.size();
        g.perm_elems_.push_back(std::move(next));
        g.index_.emplace(std::move(key), idx);
        queue.push_back(idx);
      }
    }
    g.order_ = g.perm_elems_.size();
  } else {
    std::deque<std::size_t> queue;
    QMatrix id = QMatrix::identity(spec.dimension);
    g.mat_elems_.push_back(id);
    g.index_.emplace(id.key(), 0);
    queue.push_back(0);
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (const QMatrix& gen : spec.matrix_generators) {
        QMatrix next = g.mat_elems_[cur] * gen;
        std::string key = next.key();
        if (g.index_.contains(key)) continue;
        if (g.mat_elems_.size() >= cap)
          throw CapError("matrix group exceeds the enumeration cap of " +
                         std::to_string(cap));
        std::size_t idx = g.mat_elems_.size();
        g.mat_elems_.push_back(std::move(next));
        g.index_.emplace(std::move(key), idx);
        queue.push_back(idx);
      }
    }
    g.order_ = g.mat_elems_.size();
  }

  // Multiplication table for small groups; it turns every later walk
  // (conjugation, class products, subadditivity) into a pure lookup.
  // Larger groups fall back to compose-and-hash through index_.
  if (g.order_ <= 4096) {
    g.mult_table_.assign(g.order_ * g.order_, 0);
    for (std::size_t a = 0; a < g.order_; ++a)
      for (std::size_t b = 0; b < g.order_; ++b) {
        std::string key =
            spec.kind == GroupKind::Permutation
                ? perm_key(perm_compose(g.perm_elems_[a], g.perm_elems_[b]))
                : (g.mat_elems_[a] * g.mat_elems_[b]).key();
        auto it = g.index_.find(key);
        if (it == g.index_.end())
          throw InvariantViolation("group is not closed under products");
        g.mult_table_[a * g.order_ + b] =
            static_cast<std::uint32_t>(it->second);
      }
  }

  g.inverse_.assign(g.order_, 0);
  for (std::size_t a = 0; a < g.order_; ++a) {
    std::string key = spec.kind == GroupKind::Permutation
                          ? perm_key(perm_inverse(g.perm_elems_[a]))
                          : g.mat_elems_[a].inverse().key();
    auto it = g.index_.find(key);
    if (it == g.index_.end())
      throw InvariantViolation("group element has no inverse in the closure");
    g.inverse_[a] = it->second;
  }

  g.classify(config);
  return g;
}

void FiniteGroup::classify(const RunConfig&) {
  // Conjugacy classes as orbits of conjugation by generators.  Conjugating
  // by generators suffices: conjugation by a word is the composite of
  // conjugations by its letters.
  std::vector<std::size_t> generator_idx;
  if (spec_.kind == GroupKind::Permutation) {
    for (const Perm& gen : spec_.perm_generators)
      for (std::size_t i = 0; i < order_; ++i)
        if (perm_elems_[i] == gen) {
          generator_idx.push_back(i);
          break;
        }
  } else {
    for (const QMatrix& gen : spec_.matrix_generators)
      for (std::size_t i = 0; i < order_; ++i)
        if (mat_elems_[i] == gen) {
          generator_idx.push_back(i);
          break;
        }
  }

  class_of_.assign(order_, order_);
  std::vector<std::vector<std::size_t>> raw_classes;
  for (std::size_t e = 0; e < order_; ++e) {
    if (class_of_[e] != order_) continue;
    std::size_t cls = raw_classes.size();
    std::vector<std::size_t> members;
    std::deque<std::size_t> queue{e};
    class_of_[e] = cls;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      members.push_back(cur);
      for (std::size_t gidx : generator_idx) {
        std::size_t conj = multiply(multiply(gidx, cur), inverse_[gidx]);
        if (class_of_[conj] != order_) continue;
        class_of_[conj] = cls;
        queue.push_back(conj);
      }
    }
    std::sort(members.begin(), members.end());
    raw_classes.push_back(std::move(members));
  }

  // w(g) = rank(g - id) on the symplectic space, computed from the matrix
  // form; for permutations additionally cross-checked against the cycle
  // count formula w = 2(m - number of cycles).
  QMatrix id = QMatrix::identity(symplectic_dimension());
  std::vector<ConjugacyClass> built;
  built.reserve(raw_classes.size());
  for (auto& members : raw_classes) {
    ConjugacyClass c;
    c.representative = members.front();
    c.w = static_cast<int>(exact_rank(symplectic_matrix(c.representative) -
                                      id));
    if (spec_.kind == GroupKind::Permutation) {
      const Perm& p = perm_elems_[c.representative];
      int by_cycles =
          2 * (static_cast<int>(p.size()) - perm_cycle_count(p));
      if (c.w != by_cycles)
        throw InvariantViolation(
            "rank formula and cycle formula for w disagree on a class");
      // age from the eigenvalue angles of the doubled action: each cycle of
      // length c contributes the angles j/c, each twice.
      Rat age = 0;
      Partition type = cycle_type(p);
      for (int len : type.parts())
        for (int j = 1; j < len; ++j) age += 2 * make_rat(j, len);
      c.age = age;
    }
    // element order by repeated multiplication
    Int order_count = 1;
    std::size_t cur = c.representative;
    while (cur != 0) {
      cur = multiply(cur, c.representative);
      ++order_count;
    }
    c.element_order = order_count;
    c.elements = std::move(members);
    built.push_back(std::move(c));
  }

  // Deterministic report order: by w, then by the smallest member index.
  std::vector<std::size_t> order_map(built.size());
  std::vector<std::size_t> perm_sort(built.size());
  for (std::size_t i = 0; i < built.size(); ++i) perm_sort[i] = i;
  std::sort(perm_sort.begin(), perm_sort.end(),
            [&](std::size_t a, std::size_t b) {
              if (built[a].w != built[b].w) return built[a].w < built[b].w;
              return built[a].representative < built[b].representative;
            });
  classes_.clear();
  classes_.reserve(built.size());
  for (std::size_t rank = 0; rank < perm_sort.size(); ++rank) {
    order_map[perm_sort[rank]] = rank;
    classes_.push_back(std::move(built[perm_sort[rank]]));
  }
  for (std::size_t e = 0; e < order_; ++e)
    class_of_[e] = order_map[class_of_[e]];

  // Basic sanity on the profile: w vanishes exactly at the identity and is
  // even everywhere.
  for (const ConjugacyClass& c : classes_) {
    if (c.w % 2 != 0)
      throw InvariantViolation("odd w on a symplectic group element");
    bool is_identity_class =
        c.elements.size() == 1 && c.elements.front() == 0;
    if ((c.w == 0) != is_identity_class)
      throw InvariantViolation(
          "w vanishes away from the identity (or not on it)");
  }
}

Json FiniteGroup::class_list_json() const {
  Json out = Json::array();
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const ConjugacyClass& c = classes_[i];
    Json j;
    j["index"] = i;
    j["size"] = c.elements.size();
    j["element_order"] = c.element_order.get_str();
    j["w"] = c.w;
    j["filtration_step"] = c.w / 2;  // same grading in halved units
    if (c.age) j["age"] = rat_to_string(*c.age);
    if (spec_.kind == GroupKind::Permutation) {
      j["representative"] = perm_to_json_images(perm_elems_[c.representative]);
      Json ct;
      to_json(ct, cycle_type(perm_elems_[c.representative]));
      j["cycle_type"] = std::move(ct);
    } else {
      j["representative"] = mat_elems_[c.representative].to_json();
    }
    out.push_back(std::move(j));
  }
  return out;
}

std::map<int, long long> class_w_profile(const FiniteGroup& group) {
  std::map<int, long long> dims;
  for (const ConjugacyClass& c : group.classes()) ++dims[c.w];
  return dims;
}

GradedRing filtered_class_algebra(const FiniteGroup& group, int jobs) {
  const auto& classes = group.classes();
  std::size_t count = classes.size();
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < count; ++i) {
    labels.push_back("C" + std::to_string(i));
    degrees.push_back(classes[i].w);
  }
  GradedRing ring(std::move(labels), std::move(degrees));

  // Structure constants of class sums: the coefficient of the class of z in
  // (sum of class a)(sum of class b) is #{x in a : x^{-1} z in b}.  For each
  // pair of classes (a, target) one sweep over the members of a tallies the
  // counts for every b at once.
  std::vector<std::vector<std::vector<long long>>> counts(
      count, std::vector<std::vector<long long>>(count));
  parallel_for(jobs, count, [&](std::size_t target) {
    std::size_t z = classes[target].representative;
    for (std::size_t a = 0; a < count; ++a) {
      std::vector<long long> tally(count, 0);
      for (std::size_t x : classes[a].elements)
        ++tally[group.class_of(group.multiply(group.inverse(x), z))];
      counts[a][target] = std::move(tally);
    }
  });

  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      for (std::size_t target = 0; target < count; ++target) {
        long long cnt = counts[a][target][b];
        if (cnt == 0) continue;
        int excess = classes[a].w + classes[b].w - classes[target].w;
        if (excess < 0)
          throw InvariantViolation(
              "class sum product leaves the filtration: classes " +
              std::to_string(a) + " * " + std::to_string(b) +
              " produced a class of larger w");
        if (excess == 0)
          ring.set_constant(a, b, target, Rat(static_cast<long>(cnt)));
      }
  return ring;
}

Json SubadditivityReport::to_json() const {
  Json j;
  j["mode"] = exhaustive ? "exhaustive" : "sampled";
  j["pairs_checked"] = pairs_checked;
  j["status"] = passed ? "pass" : "fail";
  if (!passed) j["failure"] = failure;
  return j;
}

SubadditivityReport subadditivity_check(const FiniteGroup& group,
                                        const RunConfig& config,
                                        std::uint64_t sample_pairs) {
  SubadditivityReport report;
  std::size_t n = group.order();
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = group.w_of(i);

  auto check_pair = [&](std::size_t a, std::size_t b) {
    ++report.pairs_checked;
    if (w[group.multiply(a, b)] > w[a] + w[b]) {
      report.passed = false;
      report.failure = "w(g*h) > w(g) + w(h) for elements " +
                       std::to_string(a) + ", " + std::to_string(b);
      return false;
    }
    return true;
  };

  if (static_cast<std::uint64_t>(n) <= config.subadditivity_cap) {
    report.exhaustive = true;
    for (std::size_t a = 0; a < n && report.passed; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!check_pair(a, b)) break;
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t k = 0; k < sample_pairs && report.passed; ++k)
      check_pair(pick(rng), pick(rng));
  }
  return report;
}

Json AgeReport::to_json() const {
  Json j;
  j["status"] = passed ? "pass" : "fail";
  if (!passed) j["failure"] = failure;
  return j;
}

AgeReport age_consistency_check(const FiniteGroup& group) {
  if (group.kind() != GroupKind::Permutation)
    throw InputError("age check applies to permutation groups");
  AgeReport report;
  for (std::size_t i = 0; i < group.classes().size(); ++i) {
    const ConjugacyClass& c = group.classes()[i];
    const Rat& age = *c.age;
    if (age.get_den() != 1) {
      report.passed = false;
      report.failure = "age of class " + std::to_string(i) +
                       " is not an integer: " + rat_to_string(age);
      return report;
    }
    if (Rat(c.w) != 2 * age) {
      report.passed = false;
      report.failure = "w != 2 * age on class " + std::to_string(i) + ": w = " +
                       std::to_string(c.w) + ", age = " + rat_to_string(age);
      return report;
    }
  }
  return report;
}

Json ReferenceComparison::to_json() const {
  Json j;
  j["name"] = name;
  j["reference_betti"] = reference_betti;
  j["computed"] = computed;
  j["matches"] = matches;
  return j;
}

ReferenceComparison compare_with_reference(const FiniteGroup& group,
                                           const std::string& name,
                                           const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in)
    throw InputError("cannot read reference data file " + file.string());
  Json doc;
  try {
    in >> doc;
  } catch (const Json::parse_error& e) {
    throw InputError("reference data file is not valid JSON: " +
                     file.string() + " (" + e.what() + ")");
  }

  ReferenceComparison cmp;
  cmp.name = name;
  try {
    const Json& entry = doc.at("entries").at(name);
    for (const auto& b : entry.at("betti"))
      cmp.reference_betti.push_back(b.get<long long>());
  } catch (const Json::exception&) {
    throw InputError("reference data has no entry named '" + name + "' in " +
                     file.string());
  }

  std::map<int, long long> profile = class_w_profile(group);
  int top = profile.empty() ? 0 : profile.rbegin()->first;
  cmp.computed.assign(top / 2 + 1, 0);
  for (const auto& [w, count] : profile) cmp.computed[w / 2] = count;
  cmp.matches = cmp.computed == cmp.reference_betti;
  return cmp;
}

}  // namespace hilbcenter

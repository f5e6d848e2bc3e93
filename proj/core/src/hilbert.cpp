#include "hilbcenter/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "hilbcenter/errors.hpp"
#include "hilbcenter/parallel.hpp"

namespace hilbcenter {

int filtration_degree(const Partition& lambda) {
  return lambda.weight() - lambda.length();
}

std::vector<long long> betti_numbers(int n) {
  if (n < 0) throw InputError("Betti numbers need n >= 0");
  std::vector<long long> b(n == 0 ? 1 : n, 0);
  for (const Partition& p : enumerate_partitions(n))
    ++b[filtration_degree(p)];
  return b;
}

CenterElement star_product(const CenterAlgebra& algebra,
                           const CenterElement& x, const CenterElement& y) {
  return algebra.convolution_product(x, y);
}

const std::vector<std::pair<std::size_t, Rat>> GradedRing::empty_terms_;

GradedRing::GradedRing(std::vector<std::string> labels,
                       std::vector<int> degrees)
    : labels_(std::move(labels)), degrees_(std::move(degrees)) {
  if (labels_.size() != degrees_.size())
    throw InputError("graded ring labels and degrees differ in length");
}

std::map<int, long long> GradedRing::graded_dimensions() const {
  std::map<int, long long> dims;
  for (int d : degrees_) ++dims[d];
  return dims;
}

void GradedRing::set_constant(std::size_t i, std::size_t j, std::size_t k,
                              const Rat& value) {
  if (value == 0) return;
  constants_[{i, j}].emplace_back(k, value);
}

const std::vector<std::pair<std::size_t, Rat>>& GradedRing::product_terms(
    std::size_t i, std::size_t j) const {
  auto it = constants_.find({i, j});
  return it == constants_.end() ? empty_terms_ : it->second;
}

std::vector<Rat> GradedRing::multiply(const std::vector<Rat>& a,
                                      const std::vector<Rat>& b) const {
  if (a.size() != dimension() || b.size() != dimension())
    throw InputError("graded ring vectors must have the basis dimension");
  std::vector<Rat> out(dimension());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      for (const auto& [k, c] : product_terms(i, j)) out[k] += a[i] * b[j] * c;
    }
  }
  return out;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rat>>
GradedRing::nonzero_constants() const {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rat>> out;
  for (const auto& [ij, terms] : constants_)
    for (const auto& [k, c] : terms)
      out.emplace_back(ij.first, ij.second, k, c);
  return out;
}

Json GradedRing::to_json() const {
  Json j;
  j["labels"] = labels_;
  j["degrees"] = degrees_;
  Json dims = Json::array();
  for (const auto& [d, count] : graded_dimensions())
    dims.push_back(Json::array({d, count}));
  j["graded_dimensions"] = std::move(dims);
  Json constants = Json::array();
  for (const auto& [i, jj, k, c] : nonzero_constants())
    constants.push_back(Json::array({i, jj, k, rat_to_string(c)}));
  j["constants"] = std::move(constants);
  return j;
}

namespace {

constexpr const char* kGradedRingFormat = "hilbcenter.gradedring";

std::string graded_ring_cache_name(int n) {
  return "gradedring_" + std::to_string(n) + ".json";
}

std::string graded_ring_payload(int n, const std::vector<Partition>& parts,
                                const std::vector<std::vector<std::pair<
                                    std::size_t, Rat>>>& upper_products) {
  std::ostringstream os;
  os << kGradedRingFormat << "|1|" << n;
  for (const Partition& p : parts) os << '|' << partition_key(p);
  for (std::size_t idx = 0; idx < upper_products.size(); ++idx) {
    os << '|';
    for (const auto& [k, c] : upper_products[idx])
      os << k << ':' << rat_to_string(c) << ';';
  }
  return os.str();
}

}  // namespace

GradedRing hilbert_graded_ring(const CenterAlgebra& algebra, int n,
                               const DiskCache* cache, int jobs) {
  if (n < 0) throw InputError("graded ring needs n >= 0");
  const std::vector<Partition>& parts = algebra.partitions_of(n);
  std::size_t count = parts.size();

  std::vector<std::string> labels;
  std::vector<int> degrees;
  labels.reserve(count);
  degrees.reserve(count);
  for (const Partition& p : parts) {
    labels.push_back(partition_key(p));
    degrees.push_back(filtration_degree(p));
  }

  // Products for the ordered pairs i <= j, flattened row by row.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i; j < count; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<std::pair<std::size_t, Rat>>> products(pairs.size());

  if (cache) {
    if (auto doc = cache->load(graded_ring_cache_name(n))) {
      try {
        if (doc->at("format").get<std::string>() != kGradedRingFormat)
          throw CacheError("wrong format tag in graded ring document");
        if (doc->at("version").get<int>() != 1)
          throw CacheError("unsupported graded ring version");
        if (doc->at("n").get<int>() != n)
          throw CacheError("graded ring document holds a different n");
        const Json& labels_json = doc->at("partitions");
        if (labels_json.size() != count)
          throw CacheError("graded ring document has wrong basis size");
        for (std::size_t i = 0; i < count; ++i) {
          Partition p;
          from_json(labels_json[i], p);
          if (!(p == parts[i]))
            throw CacheError("graded ring partitions are not canonical");
        }
        for (const auto& entry : doc->at("constants")) {
          std::size_t i = entry.at(0).get<std::size_t>();
          std::size_t j = entry.at(1).get<std::size_t>();
          std::size_t k = entry.at(2).get<std::size_t>();
          if (i >= count || j >= count || k >= count || j < i)
            throw CacheError("graded ring constant indices out of range");
          Rat c = rat_from_string(entry.at(3).get<std::string>());
          std::size_t flat = i * count - i * (i - 1) / 2 + (j - i);
          products[flat].emplace_back(k, c);
        }
        std::string declared = doc->at("checksum").get<std::string>();
        if (declared != fnv1a64_hex(graded_ring_payload(n, parts, products)))
          throw CacheError("graded ring checksum mismatch");
        GradedRing ring(labels, degrees);
        for (std::size_t idx = 0; idx < pairs.size(); ++idx)
          for (const auto& [k, c] : products[idx]) {
            ring.set_constant(pairs[idx].first, pairs[idx].second, k, c);
            if (pairs[idx].first != pairs[idx].second)
              ring.set_constant(pairs[idx].second, pairs[idx].first, k, c);
          }
        return ring;
      } catch (const Json::exception& e) {
        throw CacheError(std::string("malformed graded ring document ") +
                         cache->path_for(graded_ring_cache_name(n)).string() +
                         ": " + e.what());
      } catch (const InputError& e) {
        throw CacheError(std::string("malformed graded ring document ") +
                         cache->path_for(graded_ring_cache_name(n)).string() +
                         ": " + e.what());
      }
    }
  }

  // Warm the shared caches (partition list, transition data, character
  // table) before the parallel loop so workers only read them.
  algebra.partitions_of(n);
  algebra.degree_data(n);
  algebra.to_basis(CenterElement::basis_vector(Basis::c, parts.front()),
                   Basis::s);

  parallel_for(jobs, pairs.size(), [&](std::size_t idx) {
    auto [i, j] = pairs[idx];
    CenterElement prod = algebra.convolution_product(
        CenterElement::basis_vector(Basis::c, parts[i]),
        CenterElement::basis_vector(Basis::c, parts[j]));
    int bound = degrees[i] + degrees[j];
    for (const auto& [nu, coeff] : prod.coords()) {
      int d = filtration_degree(nu);
      if (d > bound)
        throw InvariantViolation(
            "filtration violated: c[" + parts[i].to_text() + "] * c[" +
            parts[j].to_text() + "] contains " + nu.to_text() +
            " of filtration degree " + std::to_string(d) + " > " +
            std::to_string(bound));
      if (d == bound)
        products[idx].emplace_back(partition_index(parts, nu), coeff);
    }
  });

  if (cache) {
    Json doc;
    doc["format"] = kGradedRingFormat;
    doc["version"] = 1;
    doc["n"] = n;
    Json labels_json = Json::array();
    for (const Partition& p : parts) {
      Json pj;
      to_json(pj, p);
      labels_json.push_back(std::move(pj));
    }
    doc["partitions"] = std::move(labels_json);
    Json constants = Json::array();
    for (std::size_t idx = 0; idx < pairs.size(); ++idx)
      for (const auto& [k, c] : products[idx])
        constants.push_back(Json::array(
            {pairs[idx].first, pairs[idx].second, k, rat_to_string(c)}));
    doc["constants"] = std::move(constants);
    doc["checksum"] = fnv1a64_hex(graded_ring_payload(n, parts, products));
    cache->store(graded_ring_cache_name(n), doc);
  }

  GradedRing ring(labels, degrees);
  for (std::size_t idx = 0; idx < pairs.size(); ++idx)
    for (const auto& [k, c] : products[idx]) {
      ring.set_constant(pairs[idx].first, pairs[idx].second, k, c);
      if (pairs[idx].first != pairs[idx].second)
        ring.set_constant(pairs[idx].second, pairs[idx].first, k, c);
    }
  return ring;
}

std::vector<LocalizationRow> localization_data(const CenterAlgebra& algebra,
                                               int n) {
  if (n < 0) throw InputError("localization data needs n >= 0");
  const std::vector<Partition>& parts = algebra.partitions_of(n);

  std::vector<LocalizationRow> rows;
  rows.reserve(parts.size());
  for (const Partition& p : parts) {
    LocalizationRow row;
    row.lambda = p;
    std::vector<int> hooks = p.hook_lengths();
    row.tangent_weights.reserve(2 * hooks.size());
    for (int h : hooks) row.tangent_weights.push_back(h);
    for (auto it = hooks.rbegin(); it != hooks.rend(); ++it)
      row.tangent_weights.push_back(-*it);
    row.hook_product = p.hook_product();

    // Euler class as the product of the tangent weights; it must equal
    // (-1)^n times the squared hook product, which the sign count makes
    // automatic here but is still asserted below as the identity the model
    // rests on.
    Int euler = 1;
    for (int w : row.tangent_weights) euler *= w;
    row.euler_class = euler;
    Int expected = row.hook_product * row.hook_product;
    if (n % 2) expected = -expected;
    if (row.euler_class != expected)
      throw InvariantViolation("Euler class of " + p.to_text() +
                               " is not the signed squared hook product");
    rows.push_back(std::move(row));
  }

  // The fixed-point basis diagonalizes the pairing: Schur vectors are
  // orthonormal.  Checked exactly over all pairs.
  for (const Partition& a : parts)
    for (const Partition& b : parts) {
      Rat got = algebra.scalar_product(
          CenterElement::basis_vector(Basis::s, a),
          CenterElement::basis_vector(Basis::s, b));
      Rat want = a == b ? 1 : 0;
      if (got != want)
        throw InvariantViolation("Schur vectors " + a.to_text() + ", " +
                                 b.to_text() +
                                 " are not orthonormal: pairing is " +
                                 rat_to_string(got));
    }
  return rows;
}

Json localization_to_json(const std::vector<LocalizationRow>& rows) {
  Json j = Json::array();
  for (const LocalizationRow& row : rows) {
    Json r;
    Json pj;
    to_json(pj, row.lambda);
    r["partition"] = std::move(pj);
    r["tangent_weights"] = row.tangent_weights;
    r["hook_product"] = row.hook_product.get_str();
    r["euler_class"] = row.euler_class.get_str();
    j.push_back(std::move(r));
  }
  return j;
}

}  // namespace hilbcenter

#include "hilbcenter/center.hpp"

#include <sstream>

#include "hilbcenter/errors.hpp"
#include "hilbcenter/permutation.hpp"

namespace hilbcenter {

char basis_letter(Basis b) { return static_cast<char>(b); }

Basis basis_from_letter(char ch) {
  switch (ch) {
    case 'c':
      return Basis::c;
    case 's':
      return Basis::s;
    case 'h':
      return Basis::h;
    case 'm':
      return Basis::m;
    default:
      throw InputError(std::string("unknown basis '") + ch +
                       "' (expected one of c, s, h, m)");
  }
}

CenterElement::CenterElement(int degree, Basis basis)
    : degree_(degree), basis_(basis) {
  if (degree < 0) throw InputError("center elements live in degree >= 0");
}

CenterElement CenterElement::basis_vector(Basis basis, const Partition& p,
                                          const Rat& coeff) {
  CenterElement x(p.weight(), basis);
  x.set_coeff(p, coeff);
  return x;
}

Rat CenterElement::coeff(const Partition& p) const {
  auto it = coords_.find(p);
  return it == coords_.end() ? Rat(0) : it->second;
}

void CenterElement::add_coeff(const Partition& p, const Rat& value) {
  if (p.weight() != degree_)
    throw InputError("coordinate partition " + p.to_text() +
                     " does not match element degree " +
                     std::to_string(degree_));
  auto [it, inserted] = coords_.emplace(p, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coords_.erase(it);
  } else if (it->second == 0) {
    coords_.erase(it);
  }
}

void CenterElement::set_coeff(const Partition& p, const Rat& value) {
  if (p.weight() != degree_)
    throw InputError("coordinate partition " + p.to_text() +
                     " does not match element degree " +
                     std::to_string(degree_));
  if (value == 0)
    coords_.erase(p);
  else
    coords_[p] = value;
}

CenterElement& CenterElement::operator+=(const CenterElement& other) {
  if (other.degree_ != degree_ || other.basis_ != basis_)
    throw InputError("adding center elements of different degree or basis");
  for (const auto& [p, v] : other.coords_) add_coeff(p, v);
  return *this;
}

CenterElement& CenterElement::operator-=(const CenterElement& other) {
  if (other.degree_ != degree_ || other.basis_ != basis_)
    throw InputError(
        "subtracting center elements of different degree or basis");
  for (const auto& [p, v] : other.coords_) add_coeff(p, -v);
  return *this;
}

CenterElement& CenterElement::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [p, v] : coords_) v *= scalar;
  return *this;
}

Json CenterElement::to_json() const {
  Json j;
  j["degree"] = degree_;
  j["basis"] = std::string(1, basis_letter(basis_));
  Json coords = Json::object();
  for (const auto& [p, v] : coords_) coords[partition_key(p)] = rat_to_string(v);
  j["coords"] = std::move(coords);
  return j;
}

std::string CenterElement::to_text() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, v] : coords_) {
    Rat av = v < 0 ? Rat(-v) : v;
    if (first) {
      if (v < 0) os << '-';
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (av != 1) os << rat_to_string(av) << "*";
    os << basis_letter(basis_) << '[';
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
      if (i) os << ',';
      os << p.parts()[i];
    }
    os << ']';
  }
  return os.str();
}

CenterAlgebra::CenterAlgebra(TableStore& tables) : tables_(tables) {}

const std::vector<Partition>& CenterAlgebra::partitions_of(int n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = partition_lists_.find(n);
  if (it == partition_lists_.end())
    it = partition_lists_.emplace(n, enumerate_partitions(n)).first;
  return it->second;
}

const CenterAlgebra::DegreeData& CenterAlgebra::degree_data(int n) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = degree_data_.find(n); it != degree_data_.end())
      return *it->second;
  }

  auto data = std::make_unique<DegreeData>();
  data->partitions = enumerate_partitions(n);
  const auto& parts = data->partitions;
  std::size_t count = parts.size();

  // Expand each power sum p_lambda in the monomial basis by repeatedly
  // multiplying with p_i via the growth rule.  The resulting matrix is lower
  // triangular for the canonical order (the expansion of p_lambda is
  // supported on partitions dominating lambda) with diagonal entry
  // prod_v (multiplicity of v)!.  Both facts are asserted: they are what the
  // triangular inversion below relies on.
  data->power_to_monomial.assign(count, std::vector<Int>(count));
  using IntCoords = std::map<Partition, Int, Partition::CanonicalLess>;
  for (std::size_t r = 0; r < count; ++r) {
    IntCoords acc{{Partition{}, Int(1)}};
    for (int part : parts[r].parts()) {
      IntCoords next;
      for (const auto& [nu, c] : acc)
        for (const auto& term : monomial_growth_terms(nu, part))
          next[term.mu] += c * term.coeff;
      acc.swap(next);
    }
    Int diagonal_expected = 1;
    for (int v = 1; v <= parts[r].max_part(); ++v)
      diagonal_expected *= factorial(parts[r].multiplicity(v));
    for (const auto& [mu, c] : acc) {
      if (c == 0) continue;
      std::size_t col = partition_index(parts, mu);
      if (col > r)
        throw InvariantViolation(
            "power sum expansion of " + parts[r].to_text() +
            " hit the non-dominating partition " + mu.to_text());
      data->power_to_monomial[r][col] = c;
    }
    if (data->power_to_monomial[r][r] != diagonal_expected)
      throw InvariantViolation("power sum diagonal coefficient for " +
                               parts[r].to_text() + " is off");
  }

  // Exact inverse of a lower triangular integer matrix, by forward
  // substitution column by column.
  data->monomial_to_power.assign(count, std::vector<Rat>(count));
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t i = j; i < count; ++i) {
      if (i == j) {
        data->monomial_to_power[i][j] =
            make_rat(1, data->power_to_monomial[i][i]);
        continue;
      }
      Rat sum = 0;
      for (std::size_t k = j; k < i; ++k) {
        if (data->power_to_monomial[i][k] == 0) continue;
        sum += Rat(data->power_to_monomial[i][k]) *
               data->monomial_to_power[k][j];
      }
      if (sum == 0) continue;
      data->monomial_to_power[i][j] =
          -sum / Rat(data->power_to_monomial[i][i]);
    }
  }

  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = degree_data_.emplace(n, std::move(data));
  return *it->second;
}

CenterElement CenterAlgebra::to_class_sums(const CenterElement& x) const {
  if (x.basis() == Basis::c) return x;
  int n = x.degree();
  CenterElement out(n, Basis::c);

  switch (x.basis()) {
    case Basis::s: {
      // c_mu coordinate of s_lambda is chi^lambda(mu) / z_mu.
      const CharacterTable& table = tables_.get(n);
      for (const auto& [lambda, b] : x.coords()) {
        std::size_t row = table.index_of(lambda);
        for (std::size_t j = 0; j < table.labels.size(); ++j) {
          const Int& chi = table.values[row][j];
          if (chi == 0) continue;
          out.add_coeff(table.labels[j],
                        b * make_rat(chi, table.labels[j].centralizer_order()));
        }
      }
      break;
    }
    case Basis::h: {
      // h_k = sum over partitions mu of k of c_mu / z_mu; h_lambda is the
      // product of its parts, and the product of class sums across degrees
      // is concatenation of partitions.
      for (const auto& [lambda, b] : x.coords()) {
        std::map<Partition, Rat, Partition::CanonicalLess> acc{
            {Partition{}, b}};
        for (int k : lambda.parts()) {
          std::map<Partition, Rat, Partition::CanonicalLess> next;
          for (const auto& [nu, c] : acc)
            for (const Partition& mu : partitions_of(k))
              next[nu.merged_with(mu)] +=
                  c * make_rat(1, mu.centralizer_order());
          acc.swap(next);
        }
        for (const auto& [mu, c] : acc) out.add_coeff(mu, c);
      }
      break;
    }
    case Basis::m: {
      const DegreeData& data = degree_data(n);
      for (const auto& [mu, v] : x.coords()) {
        std::size_t row = partition_index(data.partitions, mu);
        for (std::size_t j = 0; j <= row; ++j) {
          const Rat& entry = data.monomial_to_power[row][j];
          if (entry == 0) continue;
          out.add_coeff(data.partitions[j], v * entry);
        }
      }
      break;
    }
    case Basis::c:
      break;
  }
  return out;
}

CenterElement CenterAlgebra::from_class_sums(const CenterElement& x,
                                             Basis target) const {
  if (target == Basis::c) return x;
  int n = x.degree();
  CenterElement out(n, target);

  switch (target) {
    case Basis::s: {
      // s coordinate at lambda: sum_mu a_mu chi^lambda(mu).
      const CharacterTable& table = tables_.get(n);
      for (std::size_t i = 0; i < table.labels.size(); ++i) {
        Rat b = 0;
        for (const auto& [mu, a] : x.coords())
          b += a * Rat(table.values[i][table.index_of(mu)]);
        out.set_coeff(table.labels[i], b);
      }
      break;
    }
    case Basis::m: {
      const DegreeData& data = degree_data(n);
      for (const auto& [lambda, a] : x.coords()) {
        std::size_t row = partition_index(data.partitions, lambda);
        for (std::size_t j = 0; j <= row; ++j) {
          const Int& entry = data.power_to_monomial[row][j];
          if (entry == 0) continue;
          out.add_coeff(data.partitions[j], a * Rat(entry));
        }
      }
      break;
    }
    case Basis::h: {
      // The h coordinates of x are the (m_mu | x) pairings; expanding m_mu
      // through the inverse transition matrix gives
      // b_mu = sum_alpha a_alpha z_alpha (monomial_to_power)[mu][alpha].
      const DegreeData& data = degree_data(n);
      for (const auto& [alpha, a] : x.coords()) {
        std::size_t col = partition_index(data.partitions, alpha);
        Rat scaled = a * Rat(alpha.centralizer_order());
        for (std::size_t i = col; i < data.partitions.size(); ++i) {
          const Rat& entry = data.monomial_to_power[i][col];
          if (entry == 0) continue;
          out.add_coeff(data.partitions[i], scaled * entry);
        }
      }
      break;
    }
    case Basis::c:
      break;
  }
  return out;
}

CenterElement CenterAlgebra::to_basis(const CenterElement& x,
                                      Basis target) const {
  if (x.basis() == target) return x;
  return from_class_sums(to_class_sums(x), target);
}

CenterElement CenterAlgebra::add(const CenterElement& x,
                                 const CenterElement& y) const {
  if (x.degree() != y.degree())
    throw InputError("adding center elements of degrees " +
                     std::to_string(x.degree()) + " and " +
                     std::to_string(y.degree()));
  CenterElement out = x;
  out += to_basis(y, x.basis());
  return out;
}

CenterElement CenterAlgebra::induction_product(const CenterElement& x,
                                               const CenterElement& y) const {
  CenterElement xc = to_class_sums(x);
  CenterElement yc = to_class_sums(y);
  CenterElement out(x.degree() + y.degree(), Basis::c);
  for (const auto& [a, va] : xc.coords())
    for (const auto& [b, vb] : yc.coords())
      out.add_coeff(a.merged_with(b), va * vb);
  return from_class_sums(out, x.basis());
}

CenterElement CenterAlgebra::convolution_product(const CenterElement& x,
                                                 const CenterElement& y) const {
  if (x.degree() != y.degree())
    throw InputError("convolution needs equal degrees, got " +
                     std::to_string(x.degree()) + " and " +
                     std::to_string(y.degree()));
  CenterElement xs = to_basis(x, Basis::s);
  CenterElement ys = to_basis(y, Basis::s);
  CenterElement out(x.degree(), Basis::s);
  // Diagonal in the Schur direction: s_lambda acts with eigenvalue the hook
  // product of lambda.
  for (const auto& [lambda, a] : xs.coords()) {
    Rat b = ys.coeff(lambda);
    if (b == 0) continue;
    out.set_coeff(lambda, a * b * Rat(lambda.hook_product()));
  }
  return to_basis(out, x.basis());
}

Rat CenterAlgebra::scalar_product(const CenterElement& x,
                                  const CenterElement& y) const {
  if (x.degree() != y.degree())
    throw InputError("scalar product needs equal degrees, got " +
                     std::to_string(x.degree()) + " and " +
                     std::to_string(y.degree()));
  CenterElement xc = to_class_sums(x);
  CenterElement yc = to_class_sums(y);
  Rat total = 0;
  for (const auto& [p, a] : xc.coords()) {
    Rat b = yc.coeff(p);
    if (b == 0) continue;
    total += a * b * Rat(p.centralizer_order());
  }
  return total;
}

CenterElement CenterAlgebra::brute_force_convolution(
    const CenterElement& x, const CenterElement& y) const {
  if (x.degree() != y.degree())
    throw InputError("convolution needs equal degrees, got " +
                     std::to_string(x.degree()) + " and " +
                     std::to_string(y.degree()));
  int n = x.degree();
  if (n > max_brute_degree)
    throw CapError("brute-force convolution is capped at degree " +
                   std::to_string(max_brute_degree) + ", got " +
                   std::to_string(n));

  CenterElement xc = to_class_sums(x);
  CenterElement yc = to_class_sums(y);
  const std::vector<Partition>& types = partitions_of(n);

  std::vector<Perm> group = symmetric_group_elements(n);
  std::vector<std::vector<std::size_t>> classes(types.size());
  for (std::size_t g = 0; g < group.size(); ++g)
    classes[partition_index(types, cycle_type(group[g]))].push_back(g);

  // Coefficient of the class of z in (class sum of a)(class sum of b) counts
  // the x in class a with x^{-1} z in class b.  Scale by z_a z_b / z_nu to
  // express everything through the normalized vectors c = z * class sum.
  CenterElement out(n, Basis::c);
  for (const auto& [a, va] : xc.coords()) {
    std::size_t ai = partition_index(types, a);
    for (const auto& [b, vb] : yc.coords()) {
      std::size_t bi = partition_index(types, b);
      for (std::size_t ni = 0; ni < types.size(); ++ni) {
        const Perm& rep = group[classes[ni].front()];
        long count = 0;
        for (std::size_t g : classes[ai]) {
          Perm t = perm_compose(perm_inverse(group[g]), rep);
          if (partition_index(types, cycle_type(t)) == bi) ++count;
        }
        if (count == 0) continue;
        Rat coeff = va * vb *
                    make_rat(a.centralizer_order() * b.centralizer_order() *
                                 Int(count),
                             types[ni].centralizer_order());
        out.add_coeff(types[ni], coeff);
      }
    }
  }
  return out;
}

}  // namespace hilbcenter

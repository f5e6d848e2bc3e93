#include "hilbcenter/fock.hpp"

#include <sstream>

#include "hilbcenter/errors.hpp"

namespace hilbcenter {

FockElement::FockElement(int cap) : cap_(cap) {
  if (cap < 0) throw InputError("Fock truncation cap must be >= 0");
}

CenterElement FockElement::component(int n) const {
  auto it = comps_.find(n);
  return it == comps_.end() ? CenterElement(n, Basis::c) : it->second;
}

int FockElement::top_degree() const {
  return comps_.empty() ? -1 : comps_.rbegin()->first;
}

void FockElement::set_component(const CenterElement& x) {
  if (x.basis() != Basis::c)
    throw InputError("Fock components are stored in the c basis");
  if (x.degree() > cap_)
    throw TruncationError("degree " + std::to_string(x.degree()) +
                          " component does not fit under the cap " +
                          std::to_string(cap_));
  if (x.is_zero())
    comps_.erase(x.degree());
  else
    comps_[x.degree()] = x;
}

void FockElement::add_component(const CenterElement& x) {
  if (x.basis() != Basis::c)
    throw InputError("Fock components are stored in the c basis");
  if (x.degree() > cap_)
    throw TruncationError("degree " + std::to_string(x.degree()) +
                          " component does not fit under the cap " +
                          std::to_string(cap_));
  auto it = comps_.find(x.degree());
  if (it == comps_.end()) {
    if (!x.is_zero()) comps_.emplace(x.degree(), x);
    return;
  }
  it->second += x;
  if (it->second.is_zero()) comps_.erase(it);
}

FockElement& FockElement::operator+=(const FockElement& other) {
  if (other.cap_ != cap_)
    throw InputError("combining Fock elements with different caps");
  for (const auto& [n, comp] : other.comps_) add_component(comp);
  return *this;
}

FockElement& FockElement::operator-=(const FockElement& other) {
  if (other.cap_ != cap_)
    throw InputError("combining Fock elements with different caps");
  for (const auto& [n, comp] : other.comps_) {
    CenterElement neg = comp;
    neg *= Rat(-1);
    add_component(neg);
  }
  return *this;
}

FockElement& FockElement::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    comps_.clear();
    return *this;
  }
  for (auto& [n, comp] : comps_) comp *= scalar;
  return *this;
}

Json FockElement::to_json() const {
  Json j;
  j["cap"] = cap_;
  Json comps = Json::object();
  for (const auto& [n, comp] : comps_)
    comps[std::to_string(n)] = comp.to_json();
  j["components"] = std::move(comps);
  return j;
}

Json RelationCheck::to_json() const {
  Json j;
  j["name"] = name;
  j["degrees_checked"] = degrees_checked;
  j["vectors_checked"] = vectors_checked;
  j["status"] = passed ? "pass" : "fail";
  if (!passed) j["failure"] = failure;
  return j;
}

bool CommutatorReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Json CommutatorReport::to_json() const {
  Json out;
  out["i"] = i;
  out["j"] = j;
  out["cap"] = cap;
  Json checks_json = Json::array();
  for (const auto& c : checks) checks_json.push_back(c.to_json());
  out["checks"] = std::move(checks_json);
  out["status"] = passed() ? "pass" : "fail";
  return out;
}

FockSpace::FockSpace(const CenterAlgebra& algebra, int cap)
    : algebra_(algebra), cap_(cap) {
  if (cap < 0) throw InputError("Fock truncation cap must be >= 0");
}

FockElement FockSpace::vacuum() const {
  FockElement v(cap_);
  v.set_component(CenterElement::basis_vector(Basis::c, Partition{}));
  return v;
}

FockElement FockSpace::from_center(const CenterElement& x) const {
  FockElement v(cap_);
  v.set_component(algebra_.to_basis(x, Basis::c));
  return v;
}

FockElement FockSpace::create(int i, const FockElement& x) const {
  if (i < 1) throw InputError("creation index must be >= 1");
  FockElement out(cap_);
  for (const auto& [n, comp] : x.components()) {
    if (n + i > cap_)
      throw TruncationError(
          "creation operator " + std::to_string(i) + " pushes degree " +
          std::to_string(n) + " past the cap " + std::to_string(cap_) +
          "; raise the cap instead of silently dropping terms");
    CenterElement lifted(n + i, Basis::c);
    for (const auto& [p, v] : comp.coords())
      lifted.add_coeff(p.with_part_added(i), v);
    out.add_component(lifted);
  }
  return out;
}

FockElement FockSpace::annihilate(int i, const FockElement& x) const {
  if (i < 1) throw InputError("annihilation index must be >= 1");
  FockElement out(cap_);
  for (const auto& [n, comp] : x.components()) {
    if (n < i) continue;  // no part of size i can exist below degree i
    CenterElement lowered(n - i, Basis::c);
    for (const auto& [p, v] : comp.coords()) {
      int mult = p.multiplicity(i);
      if (mult == 0) continue;
      Rat factor = Rat(i * mult);
      if (i % 2) factor = -factor;  // the (-1)^i twist
      lowered.add_coeff(p.with_part_removed(i), v * factor);
    }
    out.add_component(lowered);
  }
  return out;
}

FockElement FockSpace::vacuum_build(const Partition& lambda) const {
  if (lambda.weight() > cap_)
    throw TruncationError("vacuum build of " + lambda.to_text() +
                          " does not fit under the cap " +
                          std::to_string(cap_));
  FockElement v = vacuum();
  // Apply the creation operators smallest part first; the order does not
  // matter since they commute, which the commutator check verifies.
  const auto& parts = lambda.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it)
    v = create(*it, v);
  return v;
}

Rat FockSpace::twisted_form(const FockElement& x, const FockElement& y) const {
  Rat total = 0;
  for (const auto& [n, comp] : x.components()) {
    CenterElement other = y.component(n);
    if (other.is_zero()) continue;
    Rat term = algebra_.scalar_product(comp, other);
    if (n % 2)
      total -= term;
    else
      total += term;
  }
  return total;
}

Rat FockSpace::positive_form(const FockElement& x, const FockElement& y) const {
  Rat total = 0;
  for (const auto& [n, comp] : x.components()) {
    CenterElement other = y.component(n);
    if (other.is_zero()) continue;
    total += algebra_.scalar_product(comp, other);
  }
  return total;
}

namespace {

std::string describe_failure(const Partition& p, const FockElement& got,
                             const FockElement& expected) {
  std::ostringstream os;
  os << "on c[" << p.to_text() << "]: got "
     << got.to_json()["components"].dump() << ", expected "
     << expected.to_json()["components"].dump();
  return os.str();
}

}  // namespace

CommutatorReport FockSpace::commutator_check(int i, int j) const {
  if (i < 1 || j < 1) throw InputError("operator indices must be >= 1");
  CommutatorReport report;
  report.cap = cap_;
  report.i = i;
  report.j = j;

  auto run_family = [&](const std::string& name, int max_degree,
                        auto&& lhs_fn, auto&& rhs_fn) {
    RelationCheck check;
    check.name = name;
    for (int n = 0; n <= max_degree && check.passed; ++n) {
      ++check.degrees_checked;
      for (const Partition& p : algebra_.partitions_of(n)) {
        FockElement v = from_center(CenterElement::basis_vector(Basis::c, p));
        FockElement lhs = lhs_fn(v);
        FockElement rhs = rhs_fn(v);
        ++check.vectors_checked;
        if (!(lhs == rhs)) {
          check.passed = false;
          check.failure = describe_failure(p, lhs, rhs);
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  };

  // [P_i, P_j] = 0, on degrees where both application orders stay capped.
  run_family(
      "create_create_commute", cap_ - i - j,
      [&](const FockElement& v) { return create(i, create(j, v)); },
      [&](const FockElement& v) { return create(j, create(i, v)); });

  // [P*_i, P*_j] = 0; annihilation never raises degree.
  run_family(
      "annihilate_annihilate_commute", cap_,
      [&](const FockElement& v) { return annihilate(i, annihilate(j, v)); },
      [&](const FockElement& v) { return annihilate(j, annihilate(i, v)); });

  // [P_i, P*_j] = delta_ij * i * (-1)^{i-1} * id.
  Rat scalar = 0;
  if (i == j) scalar = (i % 2) ? Rat(i) : Rat(-i);
  run_family(
      "create_annihilate_mixed", cap_ - std::max(i, j),
      [&](const FockElement& v) {
        FockElement lhs = create(i, annihilate(j, v));
        lhs -= annihilate(j, create(i, v));
        return lhs;
      },
      [&](const FockElement& v) {
        FockElement rhs = v;
        rhs *= scalar;
        return rhs;
      });

  return report;
}

}  // namespace hilbcenter

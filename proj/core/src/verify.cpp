#include "hilbcenter/verify.hpp"

#include <sstream>

#include "hilbcenter/errors.hpp"
#include "hilbcenter/fock.hpp"
#include "hilbcenter/hilbert.hpp"
#include "hilbcenter/quotient.hpp"

namespace hilbcenter {

bool VerifyReport::all_passed() const {
  for (const CheckResult& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

namespace {

const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skip:
      return "skip";
  }
  return "?";
}

// Pentagonal-number recurrence for the partition counting function; an
// arithmetic route independent of the enumerator it is checked against.
Int pentagonal_partition_count(int n) {
  std::vector<Int> p(n + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Int total = 0;
    for (int k = 1;; ++k) {
      long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
      long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      int sign = (k % 2) ? 1 : -1;
      if (g1 <= m) total += sign * p[m - g1];
      if (g2 <= m) total += sign * p[m - g2];
    }
    p[m] = total;
  }
  return p[n];
}

}  // namespace

Json VerifyReport::to_json() const {
  Json j;
  j["n"] = n;
  Json list = Json::array();
  for (const CheckResult& c : checks) {
    Json cj;
    cj["name"] = c.name;
    cj["status"] = status_word(c.status);
    if (!c.detail.empty()) cj["detail"] = c.detail;
    list.push_back(std::move(cj));
  }
  j["checks"] = std::move(list);
  j["status"] = all_passed() ? "pass" : "fail";
  return j;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const CheckResult& c : checks) {
    os << '[' << status_word(c.status) << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << (all_passed() ? "all checks passed" : "CHECKS FAILED") << '\n';
  return os.str();
}

VerifyReport run_verify(const CenterAlgebra& algebra, int n,
                        const RunConfig& config) {
  VerifyReport report;
  report.n = n;

  auto add = [&](const std::string& name, CheckStatus status,
                 const std::string& detail = "") {
    report.checks.push_back({name, status, detail});
  };
  auto run = [&](const std::string& name, auto&& body) {
    try {
      std::string detail = body();
      add(name, CheckStatus::Pass, detail);
    } catch (const Error& e) {
      add(name, CheckStatus::Fail, e.what());
    }
  };

  const std::vector<Partition>& parts = algebra.partitions_of(n);

  run("partition count matches the pentagonal recurrence", [&] {
    Int expected = pentagonal_partition_count(n);
    if (Int(static_cast<unsigned long>(parts.size())) != expected)
      throw InvariantViolation("enumerated " + std::to_string(parts.size()) +
                               ", recurrence says " + expected.get_str());
    return "p(" + std::to_string(n) + ") = " + expected.get_str();
  });

  run("hook products divide n!", [&] {
    Int nf = factorial(n);
    for (const Partition& p : parts)
      if (nf % p.hook_product() != 0)
        throw InvariantViolation("hook product of " + p.to_text() +
                                 " does not divide n!");
    return std::string();
  });

  run("squared hook dimensions sum to n!", [&] {
    Int nf = factorial(n);
    Int sum = 0;
    for (const Partition& p : parts) {
      Int dim = nf / p.hook_product();
      sum += dim * dim;
    }
    if (sum != nf)
      throw InvariantViolation("sum is " + sum.get_str() + ", n! is " +
                               nf.get_str());
    return std::string();
  });

  run("centralizer orders sum to n! harmonically", [&] {
    Rat sum = 0;
    for (const Partition& p : parts)
      sum += make_rat(1, p.centralizer_order());
    if (sum != 1)
      throw InvariantViolation("sum of 1/z is " + rat_to_string(sum));
    return std::string();
  });

  run("character rows and columns are orthogonal", [&] {
    const CharacterTable table = compute_character_table(n);
    std::size_t count = table.labels.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) {
        Rat row = 0;
        for (std::size_t k = 0; k < count; ++k)
          row += make_rat(table.values[i][k] * table.values[j][k],
                          table.labels[k].centralizer_order());
        if (row != (i == j ? 1 : 0))
          throw InvariantViolation("row orthogonality fails at " +
                                   table.labels[i].to_text() + ", " +
                                   table.labels[j].to_text());
      }
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b) {
        Int col = 0;
        for (std::size_t k = 0; k < count; ++k)
          col += table.values[k][a] * table.values[k][b];
        Int want = a == b ? table.labels[a].centralizer_order() : Int(0);
        if (col != want)
          throw InvariantViolation("column orthogonality fails at " +
                                   table.labels[a].to_text() + ", " +
                                   table.labels[b].to_text());
      }
    return std::to_string(count) + " rows";
  });

  run("hook dimension formula matches the trivial-class character", [&] {
    Int nf = factorial(n);
    Partition ones(std::vector<int>(n, 1));
    for (const Partition& p : parts) {
      Int dim = nf / p.hook_product();
      if (mn_character(p, ones) != dim)
        throw InvariantViolation("dimension of " + p.to_text() + " is off");
    }
    return std::string();
  });

  run("basis round trips are exact", [&] {
    for (const Partition& p : parts) {
      for (Basis from : {Basis::c, Basis::s, Basis::h, Basis::m}) {
        CenterElement x = CenterElement::basis_vector(from, p);
        for (Basis to : {Basis::c, Basis::s, Basis::h, Basis::m}) {
          CenterElement there = algebra.to_basis(x, to);
          if (!(algebra.to_basis(there, from) == x))
            throw InvariantViolation("round trip " +
                                     std::string(1, basis_letter(from)) +
                                     " -> " + std::string(1, basis_letter(to)) +
                                     " -> back fails on " + p.to_text());
        }
      }
    }
    return std::string();
  });

  run("power sums pair as diag(z)", [&] {
    for (const Partition& a : parts)
      for (const Partition& b : parts) {
        Rat got = algebra.scalar_product(
            CenterElement::basis_vector(Basis::c, a),
            CenterElement::basis_vector(Basis::c, b));
        Rat want = a == b ? Rat(a.centralizer_order()) : Rat(0);
        if (got != want)
          throw InvariantViolation("pairing off at " + a.to_text() + ", " +
                                   b.to_text());
      }
    return std::string();
  });

  run("growth rule: adding one part, coefficient = new multiplicity", [&] {
    // c[i] * m_lambda with |lambda| + i = n, all (lambda, i).
    for (int i = 1; i <= n; ++i) {
      for (const Partition& lambda : algebra.partitions_of(n - i)) {
        CenterElement left = CenterElement::basis_vector(Basis::c,
                                                         Partition({i}));
        CenterElement right = CenterElement::basis_vector(Basis::m, lambda);
        CenterElement got =
            algebra.to_basis(algebra.induction_product(left, right), Basis::m);
        CenterElement want(n, Basis::m);
        for (const auto& term : monomial_growth_terms(lambda, i))
          want.add_coeff(term.mu, Rat(term.coeff));
        if (!(got == want))
          throw InvariantViolation("growth expansion off for p_" +
                                   std::to_string(i) + " * m_" +
                                   lambda.to_text());
      }
    }
    return std::string();
  });

  if (n > CenterAlgebra::max_brute_degree) {
    add("convolution agrees with the group-algebra reference",
        CheckStatus::Skip,
        "degree above the brute-force cap of " +
            std::to_string(CenterAlgebra::max_brute_degree));
  } else {
    run("convolution agrees with the group-algebra reference", [&] {
      for (const Partition& a : parts)
        for (const Partition& b : parts) {
          CenterElement fast = algebra.convolution_product(
              CenterElement::basis_vector(Basis::c, a),
              CenterElement::basis_vector(Basis::c, b));
          CenterElement brute = algebra.brute_force_convolution(
              CenterElement::basis_vector(Basis::c, a),
              CenterElement::basis_vector(Basis::c, b));
          if (!(fast == brute))
            throw InvariantViolation("products differ at " + a.to_text() +
                                     " . " + b.to_text());
        }
      return std::to_string(parts.size() * parts.size()) + " pairs";
    });
  }

  run("Heisenberg commutators hold under the cap", [&] {
    FockSpace fock(algebra, n);
    int max_index = std::min(n, 3);
    for (int i = 1; i <= max_index; ++i)
      for (int j = 1; j <= max_index; ++j) {
        CommutatorReport r = fock.commutator_check(i, j);
        if (!r.passed())
          throw InvariantViolation("commutator failure at i=" +
                                   std::to_string(i) + ", j=" +
                                   std::to_string(j));
      }
    return n >= 1 ? "indices up to " + std::to_string(max_index)
                  : std::string("trivial at n = 0");
  });

  run("creation words reproduce the class vectors", [&] {
    FockSpace fock(algebra, n);
    for (const Partition& p : parts) {
      FockElement built = fock.vacuum_build(p);
      FockElement expect =
          fock.from_center(CenterElement::basis_vector(Basis::c, p));
      if (!(built == expect))
        throw InvariantViolation("vacuum build of " + p.to_text() +
                                 " is not c_" + p.to_text());
    }
    return std::string();
  });

  run("graded ring dimensions match the Betti numbers", [&] {
    GradedRing ring = hilbert_graded_ring(algebra, n);
    std::vector<long long> betti = betti_numbers(n);
    std::map<int, long long> dims = ring.graded_dimensions();
    for (int k = 0; k < static_cast<int>(betti.size()); ++k) {
      long long dim = dims.contains(k) ? dims[k] : 0;
      if (dim != betti[k])
        throw InvariantViolation("dimension in degree " + std::to_string(k) +
                                 " is " + std::to_string(dim) +
                                 ", Betti number is " +
                                 std::to_string(betti[k]));
    }
    if (n >= 1 && dims[n - 1] != 1)
      throw InvariantViolation("top degree is not one-dimensional");
    return std::string();
  });

  if (n > 7) {
    add("graded ring is commutative and associative", CheckStatus::Skip,
        "exhaustive triple loop capped at n = 7");
  } else {
    run("graded ring is commutative and associative", [&] {
      GradedRing ring = hilbert_graded_ring(algebra, n);
      std::size_t dim = ring.dimension();
      auto unit_vec = [&](std::size_t i) {
        std::vector<Rat> v(dim);
        v[i] = 1;
        return v;
      };
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j)
          if (ring.multiply(unit_vec(i), unit_vec(j)) !=
              ring.multiply(unit_vec(j), unit_vec(i)))
            throw InvariantViolation("not commutative");
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          for (std::size_t k = 0; k < dim; ++k) {
            auto left = ring.multiply(
                ring.multiply(unit_vec(i), unit_vec(j)), unit_vec(k));
            auto right = ring.multiply(
                unit_vec(i), ring.multiply(unit_vec(j), unit_vec(k)));
            if (left != right) throw InvariantViolation("not associative");
          }
      return std::to_string(dim) + " basis classes";
    });
  }

  run("localization rows validate", [&] {
    localization_data(algebra, n);
    return std::string();
  });

  if (n < 1 || n > 6) {
    add("symmetric group quotient matches the length filtration",
        CheckStatus::Skip, "group cross-check runs for 1 <= n <= 6");
  } else {
    run("symmetric group quotient matches the length filtration", [&] {
      FiniteGroup group =
          FiniteGroup::enumerate(symmetric_group_spec(n), config);
      // classes correspond to cycle types; w = 2 (n - number of cycles)
      // = 2 * filtration degree of the type.
      std::map<int, long long> dims = class_w_profile(group);
      std::vector<long long> betti = betti_numbers(n);
      for (int k = 0; k < static_cast<int>(betti.size()); ++k) {
        long long dim = dims.contains(2 * k) ? dims[2 * k] : 0;
        if (dim != betti[k])
          throw InvariantViolation("class count in w = " +
                                   std::to_string(2 * k) +
                                   " does not match the Betti number");
      }
      SubadditivityReport sub = subadditivity_check(group, config);
      if (!sub.passed) throw InvariantViolation(sub.failure);
      AgeReport age = age_consistency_check(group);
      if (!age.passed) throw InvariantViolation(age.failure);
      return "order " + std::to_string(group.order());
    });
  }

  return report;
}

}  // namespace hilbcenter

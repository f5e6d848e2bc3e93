#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>

#include <hilbcenter/errors.hpp>
#include <hilbcenter/hilbert.hpp>

#include "oracles.hpp"

using namespace hilbcenter;

namespace {

struct Fixture {
  TableStore tables{16};
  CenterAlgebra algebra{tables};
};

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("hilbcenter-hilb-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::vector<Rat> unit_vector(const GradedRing& ring, std::size_t idx) {
  std::vector<Rat> v(ring.dimension(), Rat(0));
  v[idx] = 1;
  return v;
}

}  // namespace

TEST_CASE("filtration degree is weight minus length") {
  CHECK(filtration_degree(Partition{}) == 0);
  CHECK(filtration_degree(Partition({1, 1, 1})) == 0);
  CHECK(filtration_degree(Partition({3})) == 2);
  CHECK(filtration_degree(Partition({4, 2, 1})) == 4);
}

TEST_CASE("betti numbers of small Hilbert schemes") {
  // frozen: the surface itself, then the n = 5 row 1,1,2,2,1
  CHECK(betti_numbers(1) == std::vector<long long>{1});
  CHECK(betti_numbers(2) == std::vector<long long>{1, 1});
  CHECK(betti_numbers(3) == std::vector<long long>{1, 1, 1});
  CHECK(betti_numbers(4) == std::vector<long long>{1, 1, 2, 1});
  CHECK(betti_numbers(5) == std::vector<long long>{1, 1, 2, 2, 1});
  CHECK(betti_numbers(6) == std::vector<long long>{1, 1, 2, 3, 3, 1});
}

TEST_CASE("betti numbers sum to the partition count and match the product series") {
  // independent route: coefficient extraction from prod 1/(1 - t q^{i-1})
  auto table = oracles::euler_product_table(14);
  for (int n = 1; n <= 14; ++n) {
    auto betti = betti_numbers(n);
    long long total = 0;
    for (std::size_t k = 0; k < betti.size(); ++k) {
      total += betti[k];
      INFO("n = " << n << ", k = " << k);
      CHECK(Int(static_cast<long>(betti[k])) == table[n][k]);
    }
    CHECK(Int(static_cast<long>(total)) == partition_count(n));
    // top degree is always one dimensional: only the n-cycle class
    CHECK(betti.back() == 1);
    // Poincare symmetry does not hold (the space is noncompact): witness
    if (n >= 4) CHECK(betti[1] != betti[betti.size() - 2]);
  }
}

TEST_CASE_FIXTURE(Fixture, "graded ring of the three point scheme") {
  GradedRing ring = hilbert_graded_ring(algebra, 3);
  REQUIRE(ring.dimension() == 3);
  CHECK(ring.graded_dimensions() == std::map<int, long long>{{0, 1}, {1, 1}, {2, 1}});

  auto idx = [&](const char* key) {
    for (std::size_t i = 0; i < ring.labels().size(); ++i)
      if (ring.labels()[i] == key) return i;
    FAIL("label not found: " << key);
    return std::size_t(0);
  };
  std::size_t one = idx("[1,1,1]"), t = idx("[2,1]"), top = idx("[3]");

  // frozen: c_(2,1)^2 in Z_3 is 2 c_(1^3) + 4 c_(3); only the degree-2 part
  // survives in the graded ring
  auto sq = ring.multiply(unit_vector(ring, t), unit_vector(ring, t));
  CHECK(sq[top] == 4);
  CHECK(sq[one] == 0);
  CHECK(sq[t] == 0);

  // the identity class is the unit of the graded ring: degree-0 survivors
  // of convolving with n! * identity are scaled by n!... so the normalized
  // unit has coordinate 1/6
  std::vector<Rat> unit(3, Rat(0));
  unit[one] = Rat(1, 6);
  auto u = ring.multiply(unit, unit_vector(ring, top));
  CHECK(u[top] == 1);
  CHECK(ring.multiply(unit, unit_vector(ring, t))[t] == 1);

  // degree additivity kills products past the top
  auto zero = ring.multiply(unit_vector(ring, t), unit_vector(ring, top));
  for (const Rat& v : zero) CHECK(v == 0);
}

TEST_CASE_FIXTURE(Fixture, "graded dimensions reproduce the betti numbers") {
  for (int n = 1; n <= 6; ++n) {
    GradedRing ring = hilbert_graded_ring(algebra, n);
    auto betti = betti_numbers(n);
    auto dims = ring.graded_dimensions();
    for (std::size_t k = 0; k < betti.size(); ++k) {
      INFO("n = " << n << ", degree " << k);
      CHECK(dims[static_cast<int>(k)] == betti[k]);
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "graded ring is commutative and associative") {
  GradedRing ring = hilbert_graded_ring(algebra, 5);
  std::size_t d = ring.dimension();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      auto ij = ring.multiply(unit_vector(ring, i), unit_vector(ring, j));
      auto ji = ring.multiply(unit_vector(ring, j), unit_vector(ring, i));
      CHECK(ij == ji);
      for (std::size_t k = 0; k < d; ++k) {
        auto left = ring.multiply(ij, unit_vector(ring, k));
        auto right = ring.multiply(
            unit_vector(ring, i),
            ring.multiply(unit_vector(ring, j), unit_vector(ring, k)));
        INFO("labels " << ring.labels()[i] << " " << ring.labels()[j] << " "
                       << ring.labels()[k]);
        CHECK(left == right);
      }
    }
}

TEST_CASE_FIXTURE(Fixture, "parallel build is deterministic") {
  GradedRing serial = hilbert_graded_ring(algebra, 6, nullptr, 1);
  GradedRing parallel = hilbert_graded_ring(algebra, 6, nullptr, 4);
  CHECK(serial.to_json() == parallel.to_json());
}

TEST_CASE_FIXTURE(Fixture, "graded ring disk cache round trips") {
  TempDir dir;
  DiskCache cache(dir.path);
  GradedRing first = hilbert_graded_ring(algebra, 5, &cache);
  CHECK(std::filesystem::exists(dir.path / "gradedring_5.json"));
  GradedRing second = hilbert_graded_ring(algebra, 5, &cache);
  CHECK(first.to_json() == second.to_json());

  // tamper with one structure constant: the next build must report
  // corruption, not silently recompute
  std::filesystem::path file = dir.path / "gradedring_5.json";
  Json doc;
  {
    std::ifstream in(file);
    in >> doc;
  }
  REQUIRE(!doc["constants"].empty());
  doc["constants"][0][3] = "999";
  {
    std::ofstream out(file, std::ios::trunc);
    out << doc.dump(2);
  }
  CHECK_THROWS_AS(hilbert_graded_ring(algebra, 5, &cache), CacheError);
}

TEST_CASE_FIXTURE(Fixture, "localization rows carry paired weights and signed euler classes") {
  for (int n = 1; n <= 7; ++n) {
    auto rows = localization_data(algebra, n);
    REQUIRE(rows.size() == algebra.partitions_of(n).size());
    for (const auto& row : rows) {
      INFO("n = " << n << ", fixed point " << row.lambda.to_text());
      CHECK(static_cast<int>(row.tangent_weights.size()) == 2 * n);
      // closed under negation
      std::multiset<int> weights(row.tangent_weights.begin(),
                                 row.tangent_weights.end());
      for (int w : weights) CHECK(weights.count(-w) == weights.count(w));
      // no zero weights: fixed points are isolated
      CHECK(weights.count(0) == 0);
      CHECK(row.hook_product == row.lambda.hook_product());
      Int expect = row.hook_product * row.hook_product;
      if (n % 2) expect = -expect;
      CHECK(row.euler_class == expect);
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "localization hooks for the staircase shape") {
  auto rows = localization_data(algebra, 6);
  for (const auto& row : rows)
    if (row.lambda == Partition({3, 2, 1})) {
      // hooks of the staircase: 5,3,1,3,1,1
      std::multiset<int> expect{5, -5, 3, -3, 3, -3, 1, -1, 1, -1, 1, -1};
      std::multiset<int> got(row.tangent_weights.begin(),
                             row.tangent_weights.end());
      CHECK(got == expect);
      CHECK(row.euler_class == 45 * 45);
    }
}

TEST_CASE_FIXTURE(Fixture, "localization json lists one row per fixed point") {
  Json j = localization_to_json(localization_data(algebra, 4));
  REQUIRE(j.is_array());
  CHECK(j.size() == 5);
  CHECK(j[0].contains("tangent_weights"));
  CHECK(j[0].contains("euler_class"));
}

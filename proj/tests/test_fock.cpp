#include <doctest.h>

#include <random>

#include <hilbcenter/errors.hpp>
#include <hilbcenter/fock.hpp>

using namespace hilbcenter;

namespace {

struct Fixture {
  TableStore tables{16};
  CenterAlgebra algebra{tables};
  FockSpace fock{algebra, 8};

  FockElement random_fock(std::mt19937_64& gen, int top) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    FockElement x = fock.zero();
    for (int n = 0; n <= top; ++n) {
      CenterElement comp(n, Basis::c);
      for (const Partition& p : algebra.partitions_of(n))
        comp.add_coeff(p, Rat(coeff(gen)));
      x.add_component(comp);
    }
    return x;
  }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "vacuum and component bookkeeping") {
  FockElement v = fock.vacuum();
  CHECK(v.top_degree() == 0);
  CHECK(v.component(0).coeff(Partition{}) == 1);
  CHECK(v.component(3).is_zero());

  CenterElement x(9, Basis::c);
  x.add_coeff(Partition({9}), 1);
  CHECK_THROWS_AS(fock.zero().set_component(x), TruncationError);
}

TEST_CASE_FIXTURE(Fixture, "creation adjoins a part") {
  FockElement v = fock.vacuum();
  FockElement one = fock.create(2, v);
  CHECK(one.top_degree() == 2);
  CHECK(one.component(2).coeff(Partition({2})) == 1);

  FockElement two = fock.create(1, one);
  CHECK(two.component(3).coeff(Partition({2, 1})) == 1);
  CHECK(two.component(3).coords().size() == 1);

  // creation past the cap is an error, not a silent drop
  CenterElement top(8, Basis::c);
  top.add_coeff(Partition({8}), 1);
  CHECK_THROWS_WITH_AS(fock.create(1, fock.from_center(top)),
                       doctest::Contains("raise the cap"), TruncationError);
}

TEST_CASE_FIXTURE(Fixture, "annihilation counts multiplicity with sign") {
  // frozen: P*_2 c_(2,2) = (-1)^2 * 2 * 2 * c_(2) = 4 c_(2)
  CenterElement c22(4, Basis::c);
  c22.add_coeff(Partition({2, 2}), 1);
  FockElement out = fock.annihilate(2, fock.from_center(c22));
  CHECK(out.component(2).coeff(Partition({2})) == 4);
  CHECK(out.top_degree() == 2);

  // odd index picks up the sign: P*_3 c_(3,1) = -3 c_(1)
  CenterElement c31(4, Basis::c);
  c31.add_coeff(Partition({3, 1}), 1);
  FockElement odd = fock.annihilate(3, fock.from_center(c31));
  CHECK(odd.component(1).coeff(Partition({1})) == -3);

  // no matching part: zero
  CHECK(fock.annihilate(4, fock.from_center(c31)).is_zero());
  CHECK(fock.annihilate(1, fock.vacuum()).is_zero());
}

TEST_CASE_FIXTURE(Fixture, "vacuum build reproduces class sums") {
  for (int n = 0; n <= 6; ++n)
    for (const Partition& lambda : algebra.partitions_of(n)) {
      FockElement built = fock.vacuum_build(lambda);
      INFO("building " << lambda.to_text());
      CHECK(built.component(n).coeff(lambda) == 1);
      CHECK(built.component(n).coords().size() == 1);
      CHECK(built.top_degree() == (n == 0 ? 0 : n));
    }
}

TEST_CASE_FIXTURE(Fixture, "operators on sums of mixed degree") {
  std::mt19937_64 gen(3);
  FockElement x = random_fock(gen, 5);
  FockElement y = random_fock(gen, 5);
  FockElement sum = x;
  sum += y;
  FockElement cx = fock.create(2, x);
  cx += fock.create(2, y);
  CHECK(fock.create(2, sum) == cx);
  FockElement ax = fock.annihilate(2, x);
  ax += fock.annihilate(2, y);
  CHECK(fock.annihilate(2, sum) == ax);
}

TEST_CASE_FIXTURE(Fixture, "twisted form values") {
  // frozen: (c_(1) | c_(1)) = z_(1) = 1, twisted by (-1)^1 gives -1
  CenterElement c1(1, Basis::c);
  c1.add_coeff(Partition({1}), 1);
  FockElement f1 = fock.from_center(c1);
  CHECK(fock.twisted_form(f1, f1) == -1);
  CHECK(fock.positive_form(f1, f1) == 1);

  // degree 2: z_(2) = 2 with sign +1
  CenterElement c2(2, Basis::c);
  c2.add_coeff(Partition({2}), 1);
  FockElement f2 = fock.from_center(c2);
  CHECK(fock.twisted_form(f2, f2) == 2);

  // cross terms of different degree vanish
  CHECK(fock.twisted_form(f1, f2) == 0);

  // vacuum is norm 1 under both forms
  CHECK(fock.twisted_form(fock.vacuum(), fock.vacuum()) == 1);
}

TEST_CASE_FIXTURE(Fixture, "creation and annihilation are twisted adjoints") {
  std::mt19937_64 gen(4);
  for (int i = 1; i <= 4; ++i) {
    FockElement x = random_fock(gen, 8 - i);
    FockElement y = random_fock(gen, 8);
    INFO("index " << i);
    CHECK(fock.twisted_form(fock.create(i, x), y) ==
          fock.twisted_form(x, fock.annihilate(i, y)));
  }
}

TEST_CASE_FIXTURE(Fixture, "under the positive form the adjoint loses the sign") {
  // (P_i x | y) = (-1)^i (x | P*_i y) positively, so for odd i the twisted
  // form is the one that makes them adjoint
  std::mt19937_64 gen(6);
  FockElement x = random_fock(gen, 5);
  FockElement y = random_fock(gen, 8);
  Rat lhs = fock.positive_form(fock.create(3, x), y);
  Rat rhs = fock.positive_form(x, fock.annihilate(3, y));
  CHECK(lhs == -rhs);
  Rat lhs2 = fock.positive_form(fock.create(2, x), y);
  Rat rhs2 = fock.positive_form(x, fock.annihilate(2, y));
  CHECK(lhs2 == rhs2);
}

TEST_CASE_FIXTURE(Fixture, "commutator families hold on the whole truncation") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      CommutatorReport report = fock.commutator_check(i, j);
      INFO("pair (" << i << ", " << j << ")");
      CHECK(report.passed());
      REQUIRE(report.checks.size() == 3);
      for (const RelationCheck& check : report.checks) {
        INFO(check.name << ": " << check.failure);
        CHECK(check.passed);
        CHECK(check.vectors_checked > 0);
      }
    }
}

TEST_CASE_FIXTURE(Fixture, "commutator detail for the diagonal pair") {
  // [P_2, P*_2] = 2 * (-1) * id: spot check on one vector by hand
  CenterElement c21(3, Basis::c);
  c21.add_coeff(Partition({2, 1}), 1);
  FockElement x = fock.from_center(c21);
  FockElement ladder = fock.create(2, fock.annihilate(2, x));  // = 2x
  FockElement other = fock.annihilate(2, fock.create(2, x));   // = 4x
  FockElement diff = ladder;
  diff -= other;
  // delta * i * (-1)^{i-1} = -2
  FockElement expect = x;
  expect *= Rat(-2);
  CHECK(diff == expect);
}

TEST_CASE_FIXTURE(Fixture, "report serialization carries the verdict") {
  CommutatorReport report = fock.commutator_check(1, 2);
  Json j = report.to_json();
  CHECK(j["status"] == "pass");
  CHECK(j["cap"] == 8);
  CHECK(j["checks"].size() == 3);
  CHECK(j["checks"][0].contains("vectors_checked"));
  CHECK(j["checks"][0]["status"] == "pass");
}

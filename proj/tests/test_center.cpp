#include <doctest.h>

#include <random>
#include <vector>

#include <hilbcenter/center.hpp>
#include <hilbcenter/errors.hpp>

#include "oracles.hpp"

using namespace hilbcenter;

namespace {

struct Fixture {
  TableStore tables{16};
  CenterAlgebra algebra{tables};

  CenterElement parse_free(Basis b, int degree,
                           std::vector<std::pair<std::vector<int>, Rat>> t) {
    CenterElement x(degree, b);
    for (auto& [parts, coeff] : t) x.add_coeff(Partition(parts), coeff);
    return x;
  }

  CenterElement random_element(int degree, Basis b, std::mt19937_64& gen) {
    const auto& ps = algebra.partitions_of(degree);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    CenterElement x(degree, b);
    // make_rat, not Rat(n, d): mpq_class(n, d) skips canonicalization
    for (const Partition& p : ps)
      x.add_coeff(p, make_rat(num(gen), den(gen)));
    return x;
  }
};

}  // namespace

TEST_CASE("element bookkeeping") {
  CenterElement x(3, Basis::c);
  CHECK(x.is_zero());
  x.add_coeff(Partition({2, 1}), Rat(1, 2));
  x.add_coeff(Partition({2, 1}), Rat(-1, 2));
  CHECK(x.is_zero());  // exact cancellation removes the entry
  x.add_coeff(Partition({3}), 2);
  CHECK(x.coeff(Partition({3})) == 2);
  CHECK(x.coeff(Partition({1, 1, 1})) == 0);
  CHECK_THROWS_AS(x.add_coeff(Partition({2}), 1), InputError);

  CenterElement y(3, Basis::s);
  CHECK_THROWS_AS(x += y, InputError);
  CenterElement z(2, Basis::c);
  CHECK_THROWS_AS(x += z, InputError);

  x *= Rat(3, 2);
  CHECK(x.coeff(Partition({3})) == 3);
  CHECK(x.to_text() == "3*c[3]");
}

TEST_CASE_FIXTURE(Fixture, "class sums against Schur coordinates") {
  // frozen: c_(2) = s_(2) - s_(1,1), from the n = 2 character table
  CenterElement c2 = CenterElement::basis_vector(Basis::c, Partition({2}));
  CenterElement in_s = algebra.to_basis(c2, Basis::s);
  CHECK(in_s.coeff(Partition({2})) == 1);
  CHECK(in_s.coeff(Partition({1, 1})) == -1);

  // and the identity class: c_(1,1) = s_(2) + s_(1,1)
  CenterElement id2 =
      CenterElement::basis_vector(Basis::c, Partition({1, 1}));
  CenterElement id_s = algebra.to_basis(id2, Basis::s);
  CHECK(id_s.coeff(Partition({2})) == 1);
  CHECK(id_s.coeff(Partition({1, 1})) == 1);
}

TEST_CASE_FIXTURE(Fixture, "Schur to monomial expansion") {
  // frozen Kostka row: s_(2,1) = m_(2,1) + 2 m_(1,1,1)
  CenterElement s21 = CenterElement::basis_vector(Basis::s, Partition({2, 1}));
  CenterElement m = algebra.to_basis(s21, Basis::m);
  CHECK(m.coeff(Partition({2, 1})) == 1);
  CHECK(m.coeff(Partition({1, 1, 1})) == 2);
  CHECK(m.coeff(Partition({3})) == 0);
  CHECK(m.coords().size() == 2);
}

TEST_CASE_FIXTURE(Fixture, "complete functions expand as the z-weighted class average") {
  // h_n = sum_mu c_mu / z_mu; check n = 4 coordinate by coordinate
  CenterElement h4 = CenterElement::basis_vector(Basis::h, Partition({4}));
  CenterElement c = algebra.to_basis(h4, Basis::c);
  for (const Partition& mu : algebra.partitions_of(4))
    CHECK(c.coeff(mu) == make_rat(1, mu.centralizer_order()));
}

TEST_CASE_FIXTURE(Fixture, "power to monomial data is triangular and integral") {
  // p_lambda only reaches monomials that dominate lambda, and the canonical
  // order refines dominance downward, so the matrix is lower triangular with
  // diagonal prod(mult!)
  for (int n = 1; n <= 8; ++n) {
    const auto& data = algebra.degree_data(n);
    std::size_t count = data.partitions.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j)
        CHECK(data.power_to_monomial[i][j] == 0);
      Int diag = 1;
      for (int v = 1; v <= data.partitions[i].max_part(); ++v)
        diag *= factorial(data.partitions[i].multiplicity(v));
      CHECK(data.power_to_monomial[i][i] == diag);
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "power sums expand into monomials as polynomials do") {
  // compare the c -> m conversion against literal polynomial expansion
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : algebra.partitions_of(n)) {
      oracles::SymPoly poly =
          oracles::SymPoly::power_function(lambda.parts()[0], n);
      for (std::size_t i = 1; i < lambda.parts().size(); ++i)
        poly = poly * oracles::SymPoly::power_function(lambda.parts()[i], n);
      CenterElement m = algebra.to_basis(
          CenterElement::basis_vector(Basis::c, lambda), Basis::m);
      for (const Partition& mu : algebra.partitions_of(n)) {
        INFO("p_" << lambda.to_text() << " at m_" << mu.to_text());
        CHECK(m.coeff(mu) == poly.monomial_coefficient(mu));
      }
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "round trips through every basis pair") {
  std::mt19937_64 gen(2024);
  const Basis all[] = {Basis::c, Basis::s, Basis::h, Basis::m};
  for (int degree : {1, 3, 5, 7}) {
    for (Basis from : all) {
      CenterElement x = random_element(degree, from, gen);
      for (Basis to : all) {
        CenterElement there = algebra.to_basis(x, to);
        CHECK(there.basis() == to);
        CenterElement back = algebra.to_basis(there, from);
        INFO("degree " << degree << " " << std::string(1, basis_letter(from))
                       << " -> " << std::string(1, basis_letter(to)));
        CHECK(back == x);
      }
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "conversion is linear") {
  std::mt19937_64 gen(5);
  CenterElement a = random_element(5, Basis::m, gen);
  CenterElement b = random_element(5, Basis::m, gen);
  CenterElement sum = a;
  sum += b;
  for (Basis to : {Basis::c, Basis::s, Basis::h}) {
    CenterElement converted_sum = algebra.to_basis(sum, to);
    CenterElement summed = algebra.to_basis(a, to);
    summed += algebra.to_basis(b, to);
    CHECK(converted_sum == summed);
  }
}

TEST_CASE_FIXTURE(Fixture, "induction product on class sums concatenates") {
  CenterElement c2 = CenterElement::basis_vector(Basis::c, Partition({2}));
  CenterElement c31 = CenterElement::basis_vector(Basis::c, Partition({3, 1}));
  CenterElement prod = algebra.induction_product(c2, c31);
  CHECK(prod.degree() == 6);
  CHECK(prod.coeff(Partition({3, 2, 1})) == 1);
  CHECK(prod.coords().size() == 1);
}

TEST_CASE_FIXTURE(Fixture, "induction product in the monomial basis") {
  // frozen: c_(2) * m_(1) = m_(3) + m_(2,1); the first factor is p_2
  CenterElement c2 = CenterElement::basis_vector(Basis::c, Partition({2}));
  CenterElement m1 = CenterElement::basis_vector(Basis::m, Partition({1}));
  CenterElement prod = algebra.induction_product(c2, m1);
  CHECK(prod.basis() == Basis::c);
  CenterElement in_m = algebra.to_basis(prod, Basis::m);
  CHECK(in_m.coeff(Partition({3})) == 1);
  CHECK(in_m.coeff(Partition({2, 1})) == 1);
  CHECK(in_m.coords().size() == 2);
  // the result basis follows the left factor
  CHECK(algebra.induction_product(m1, c2).basis() == Basis::m);
}

TEST_CASE_FIXTURE(Fixture, "induction distributes over addition") {
  std::mt19937_64 gen(17);
  CenterElement a = random_element(3, Basis::c, gen);
  CenterElement b = random_element(3, Basis::c, gen);
  CenterElement c = random_element(2, Basis::s, gen);
  CenterElement lhs = algebra.induction_product(algebra.add(a, b), c);
  CenterElement rhs = algebra.add(algebra.induction_product(a, c),
                                  algebra.induction_product(b, c));
  CHECK(algebra.to_basis(lhs, Basis::c) == algebra.to_basis(rhs, Basis::c));
}

TEST_CASE_FIXTURE(Fixture, "convolution squares a class sum") {
  // frozen: in Z_3, c_(2,1) . c_(2,1) = 2 c_(1,1,1) + 4 c_(3); in group
  // algebra terms: a product of two transpositions is the identity (3 ways
  // out of 9) or a 3-cycle (6 ways)
  CenterElement t = CenterElement::basis_vector(Basis::c, Partition({2, 1}));
  CenterElement sq = algebra.convolution_product(t, t);
  CHECK(sq.coeff(Partition({1, 1, 1})) == 2);
  CHECK(sq.coeff(Partition({3})) == 4);
  CHECK(sq.coeff(Partition({2, 1})) == 0);
}

TEST_CASE_FIXTURE(Fixture, "convolution of transpositions with 3-cycles") {
  // transposition times 3-cycle is always a transposition: 2 * 3 = 6
  // products land in a class of size 3 scaled by z = 2, so the coefficient
  // is 6
  CenterElement t = CenterElement::basis_vector(Basis::c, Partition({2, 1}));
  CenterElement r = CenterElement::basis_vector(Basis::c, Partition({3}));
  CenterElement prod = algebra.convolution_product(t, r);
  CHECK(prod.coeff(Partition({2, 1})) == 6);
  CHECK(prod.coords().size() == 1);
  // c_(1^n) is z_(1^n) = n! times the group identity, so convolving with it
  // scales by n!
  CenterElement idcl =
      CenterElement::basis_vector(Basis::c, Partition({1, 1, 1}));
  CenterElement scaled = r;
  scaled *= Rat(6);
  CHECK(algebra.convolution_product(idcl, r) == scaled);
}

TEST_CASE_FIXTURE(Fixture, "convolution needs matching degrees") {
  CenterElement a = CenterElement::basis_vector(Basis::c, Partition({2}));
  CenterElement b = CenterElement::basis_vector(Basis::c, Partition({3}));
  CHECK_THROWS_AS(algebra.convolution_product(a, b), InputError);
}

TEST_CASE_FIXTURE(Fixture, "convolution agrees with direct group algebra products") {
  std::mt19937_64 gen(33);
  for (int n = 2; n <= 5; ++n) {
    CenterElement a = random_element(n, Basis::c, gen);
    CenterElement b = random_element(n, Basis::c, gen);
    CenterElement fast = algebra.convolution_product(a, b);
    CenterElement brute = algebra.brute_force_convolution(a, b);
    INFO("degree " << n);
    CHECK(algebra.to_basis(fast, Basis::c) == brute);
  }
  CenterElement big(8, Basis::c);
  big.add_coeff(Partition({8}), 1);
  CHECK_THROWS_AS(algebra.brute_force_convolution(big, big), CapError);
}

TEST_CASE_FIXTURE(Fixture, "convolution is commutative and associative") {
  std::mt19937_64 gen(91);
  for (int n : {3, 4, 6}) {
    CenterElement a = random_element(n, Basis::c, gen);
    CenterElement b = random_element(n, Basis::s, gen);
    CenterElement c = random_element(n, Basis::m, gen);
    CenterElement ab = algebra.convolution_product(a, b);
    CenterElement ba = algebra.convolution_product(b, a);
    CHECK(algebra.to_basis(ab, Basis::s) == algebra.to_basis(ba, Basis::s));
    CenterElement left =
        algebra.convolution_product(algebra.convolution_product(a, b), c);
    CenterElement right =
        algebra.convolution_product(a, algebra.convolution_product(b, c));
    CHECK(algebra.to_basis(left, Basis::s) ==
          algebra.to_basis(right, Basis::s));
  }
}

TEST_CASE_FIXTURE(Fixture, "scalar product pairs h against m dually") {
  // (h_lambda | m_mu) = delta
  for (int n = 1; n <= 7; ++n)
    for (const Partition& lambda : algebra.partitions_of(n))
      for (const Partition& mu : algebra.partitions_of(n)) {
        CenterElement h = CenterElement::basis_vector(Basis::h, lambda);
        CenterElement m = CenterElement::basis_vector(Basis::m, mu);
        INFO("(h_" << lambda.to_text() << " | m_" << mu.to_text() << ")");
        CHECK(algebra.scalar_product(h, m) == (lambda == mu ? 1 : 0));
      }
}

TEST_CASE_FIXTURE(Fixture, "scalar product diagonals") {
  // (c_lambda | c_mu) = delta * z_lambda and (s | s) = delta
  for (const Partition& lambda : algebra.partitions_of(5))
    for (const Partition& mu : algebra.partitions_of(5)) {
      CenterElement cl = CenterElement::basis_vector(Basis::c, lambda);
      CenterElement cm = CenterElement::basis_vector(Basis::c, mu);
      Rat expect = lambda == mu ? Rat(lambda.centralizer_order()) : Rat(0);
      CHECK(algebra.scalar_product(cl, cm) == expect);
      CenterElement sl = CenterElement::basis_vector(Basis::s, lambda);
      CenterElement sm = CenterElement::basis_vector(Basis::s, mu);
      CHECK(algebra.scalar_product(sl, sm) == (lambda == mu ? 1 : 0));
    }
}

TEST_CASE_FIXTURE(Fixture, "scalar product is symmetric and bilinear across bases") {
  std::mt19937_64 gen(55);
  CenterElement a = random_element(6, Basis::h, gen);
  CenterElement b = random_element(6, Basis::c, gen);
  CHECK(algebra.scalar_product(a, b) == algebra.scalar_product(b, a));
  CenterElement a2 = a;
  a2 *= Rat(3, 7);
  CHECK(algebra.scalar_product(a2, b) ==
        Rat(3, 7) * algebra.scalar_product(a, b));
  // pairing is basis independent
  CHECK(algebra.scalar_product(algebra.to_basis(a, Basis::s),
                               algebra.to_basis(b, Basis::m)) ==
        algebra.scalar_product(a, b));
}

TEST_CASE_FIXTURE(Fixture, "degree zero is a genuine unit for induction") {
  CenterElement one = CenterElement::basis_vector(Basis::c, Partition{});
  CenterElement x = CenterElement::basis_vector(Basis::m, Partition({2, 1}));
  CHECK(algebra.induction_product(x, one) == x);
  CenterElement back = algebra.induction_product(one, x);
  CHECK(algebra.to_basis(back, Basis::m) == x);
}

TEST_CASE_FIXTURE(Fixture, "json serialization of elements") {
  CenterElement x(3, Basis::m);
  x.add_coeff(Partition({2, 1}), Rat(1, 2));
  x.add_coeff(Partition({3}), -2);
  Json j = x.to_json();
  CHECK(j["degree"] == 3);
  CHECK(j["basis"] == "m");
  CHECK(j["coords"]["[3]"] == "-2");
  CHECK(j["coords"]["[2,1]"] == "1/2");
}

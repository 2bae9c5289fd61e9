#include "doctest.h"
#include "support.hpp"
#include "traceid/error.hpp"
#include "traceid/poly.hpp"

using namespace traceid;
using traceid::testing::random_poly;

namespace {
const Polynomial L = Polynomial::lambda();
Polynomial a(int i, int j) { return Polynomial::a(i, j); }
}  // namespace

TEST_CASE("variable order puts lambda, beta, then entries by (i, j)") {
  CHECK(PolyVar::lambda() < PolyVar::beta());
  CHECK(PolyVar::beta() < PolyVar::entry(0, 0));
  CHECK(PolyVar::entry(0, 5) < PolyVar::entry(1, 0));
  CHECK(PolyVar::entry(2, 1) < PolyVar::entry(2, 3));
  CHECK(PolyVar::entry(3, 4) == PolyVar::entry(3, 4));
  CHECK(PolyVar::entry(3, 4).row() == 3);
  CHECK(PolyVar::entry(3, 4).col() == 4);
}

TEST_CASE("poly_add") {
  CHECK((a(1, 2) + -a(1, 2)).is_zero());
  CHECK(poly_add(Polynomial(), a(3, 1)) == a(3, 1));
  CHECK(poly_add(Polynomial(2) * a(1, 1), Polynomial(3) * a(1, 1)) == Polynomial(5) * a(1, 1));
  CHECK((Polynomial(2) * a(1, 1) + Polynomial(3) * a(1, 1)).size() == 1);
}

TEST_CASE("poly_mul") {
  CHECK(poly_mul(a(1, 0) + a(0, 1), a(1, 0) - a(0, 1)) == a(1, 0).pow(2) - a(0, 1).pow(2));
  CHECK(poly_mul(a(2, 2) + L, Polynomial()).is_zero());
  const auto p = L * (L * a(1, 1));
  CHECK(p.size() == 1);
  CHECK(p.terms()[0].mono.exponent(PolyVar::lambda()) == 2);
  CHECK(p.terms()[0].mono.exponent(PolyVar::entry(1, 1)) == 1);
}

TEST_CASE("poly_substitute") {
  const Substitution unit{{PolyVar::lambda(), Polynomial(1)}};
  CHECK(poly_substitute(L * a(1, 0) * a(0, 1) - a(1, 1), unit) == a(1, 0) * a(0, 1) - a(1, 1));

  const Substitution hyp{{PolyVar::entry(2, 1), Polynomial::beta() * a(1, 2)}};
  CHECK(poly_substitute(a(2, 1), hyp) == Polynomial::beta() * a(1, 2));

  const Substitution cor5{{PolyVar::entry(1, 1), Polynomial(2)}, {PolyVar::beta(), Polynomial(1)}};
  CHECK(poly_substitute(a(1, 1) - Polynomial(2) * Polynomial::beta(), cor5).is_zero());

  // Unmapped variables stay fixed and images may contain the mapped variable.
  const Substitution shift{{PolyVar::entry(1, 1), a(1, 1) + Polynomial(1)}};
  CHECK(poly_substitute(a(1, 1).pow(2) * a(2, 2), shift) ==
        (a(1, 1).pow(2) + Polynomial(2) * a(1, 1) + Polynomial(1)) * a(2, 2));
}

TEST_CASE("poly_coeff_in_var") {
  const auto lam = PolyVar::lambda();
  const auto p = L.pow(2) * a(1, 1) + L * a(1, 2) + a(1, 3);
  CHECK(poly_coeff_in_var(p, lam, 1) == a(1, 2));
  CHECK(poly_coeff_in_var(a(1, 1), lam, 0) == a(1, 1));
  CHECK(poly_coeff_in_var(L * a(1, 2), lam, 3).is_zero());
  CHECK_FALSE(poly_coeff_in_var(p, lam, 2).contains(lam));
}

TEST_CASE("canonical text form") {
  const auto p = Polynomial(2) * a(1, 1) - L * a(0, 1) * a(1, 0);
  CHECK(p.to_string() == "-1*lambda*a[0,1]*a[1,0] + 2*a[1,1]");
  CHECK(Polynomial().to_string() == "0");
  CHECK(Polynomial(-7).to_string() == "-7");
  CHECK((L.pow(2) * a(1, 2) - Polynomial(3)).to_string() == "1*lambda^2*a[1,2] - 3");
  CHECK(Polynomial::parse("-1*lambda*a[0,1]*a[1,0] + 2*a[1,1]") == p);
  CHECK(Polynomial::parse("a[1,1]*a[1,1] - a[1,1]^2").is_zero());
  CHECK(Polynomial::parse("  3 * beta * a[ 2 , 1 ] ") == Polynomial(3) * Polynomial::beta() * a(2, 1));
  CHECK_THROWS_AS(Polynomial::parse("2*gamma"), Error);
  CHECK_THROWS_AS(Polynomial::parse(""), Error);
  CHECK_THROWS_AS(Polynomial::parse("1 +"), Error);
}

TEST_CASE("terms are stored in descending graded-lex order") {
  const auto p = a(1, 1) + L * a(2, 2) + Polynomial::beta() * a(2, 2) + Polynomial(4) + a(0, 0).pow(3);
  for (std::size_t k = 1; k < p.size(); ++k) CHECK(p.terms()[k - 1].mono > p.terms()[k].mono);
  CHECK(p.terms().front().mono.degree() == 3);
  CHECK(p.terms().back().mono.is_unit());
}

TEST_CASE("property: ring axioms") {
  std::mt19937_64 rng(20240611);
  for (int it = 0; it < testing::kPropertyIterations; ++it) {
    const auto p = random_poly(rng);
    const auto q = random_poly(rng);
    const auto r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    CHECK(p * Polynomial(1) == p);
  }
}

TEST_CASE("property: substitution is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < testing::kPropertyIterations; ++it) {
    const auto p = random_poly(rng, 4);
    const auto q = random_poly(rng, 4);
    Substitution map;
    for (int k = 0; k < 3; ++k) map[testing::random_var(rng)] = random_poly(rng, 2);
    CHECK(poly_substitute(p * q, map) == poly_substitute(p, map) * poly_substitute(q, map));
    CHECK(poly_substitute(p + q, map) == poly_substitute(p, map) + poly_substitute(q, map));
  }
}

TEST_CASE("property: coefficient extraction round-trips") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < testing::kPropertyIterations; ++it) {
    const auto p = random_poly(rng);
    for (auto v : p.variables()) {
      Polynomial rebuilt;
      for (unsigned k = 0; k <= p.degree_in(v); ++k) rebuilt += poly_coeff_in_var(p, v, k) * Polynomial::var(v).pow(k);
      CHECK(rebuilt == p);
    }
  }
}

TEST_CASE("property: text form parses back") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < testing::kPropertyIterations; ++it) {
    const auto p = random_poly(rng);
    CHECK(Polynomial::parse(p.to_string()) == p);
  }
}

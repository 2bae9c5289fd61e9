#include <set>

#include "doctest.h"
#include "support.hpp"
#include "traceid/identities.hpp"

using namespace traceid;

namespace {

const Polynomial L = Polynomial::lambda();
const Polynomial B = Polynomial::beta();
Polynomial a(int i, int j) { return Polynomial::a(i, j); }

std::set<PolyVar> variables_of(const PolyMatrix& m) {
  std::set<PolyVar> vars;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (auto v : m.at(r, c).variables()) vars.insert(v);
    }
  }
  return vars;
}

std::string golden(const std::string& name) { return testing::read_file(std::string(TRACEID_GOLDEN_DIR) + "/" + name); }

}  // namespace

TEST_CASE("build_thm1 boundary cases") {
  const auto m0 = build_thm1(0);
  CHECK(m0.a.rows() == 1);
  CHECK(m0.a(0, 0) == Polynomial(2));
  CHECK(m0.b.rows() == 0);
  CHECK(m0.c.rows() == 0);

  const auto m1 = build_thm1(1);
  CHECK(m1.a(0, 0) == Polynomial(2));
  CHECK(m1.a(0, 1) == L * a(0, 1));
  CHECK(m1.a(1, 0) == a(1, 0));
  CHECK(m1.a(1, 1) == a(1, 1));
  CHECK(m1.b(1, 1) == L * a(1, 0) * a(0, 1) - a(1, 1));
  CHECK(m1.c(1, 1) == a(1, 1));
}

TEST_CASE("build_thm1 matches the displayed n=4 matrix") {
  const auto text = golden("thm1_A_n4.txt");
  const auto a4 = build_thm1(4).a;
  CHECK(PolyMatrix::parse(text) == a4);
  CHECK(a4.to_string() == text);
}

TEST_CASE("build_thm3 matches the displayed n=5 matrices") {
  const auto m = build_thm3(5);
  for (auto [name, mat] : {std::pair{"thm3_A_n5.txt", &m.a}, {"thm3_B_n5.txt", &m.b}, {"thm3_C_n5.txt", &m.c}}) {
    CAPTURE(name);
    const auto text = golden(name);
    CHECK(PolyMatrix::parse(text) == *mat);
    CHECK(mat->to_string() == text);
  }
}

TEST_CASE("build_thm3 small cases") {
  const auto m1 = build_thm3(1);
  CHECK(m1.a.rows() == 1);
  CHECK(m1.a(1, 1) == a(1, 1));
  CHECK(m1.b.rows() == 0);

  const auto m2 = build_thm3(2);
  CHECK(m2.a(1, 2) == L * a(1, 2));
  CHECK(m2.a(2, 1) == B * a(1, 2));
  CHECK(m2.b(2, 2) == a(2, 2) - L * a(1, 2).pow(2));
  CHECK(m2.c(2, 2) == a(2, 2));
  // det A - beta (det B + det C) = (a11 - 2 beta) a22, expanded by hand.
  const auto det_a = a(1, 1) * a(2, 2) - L * B * a(1, 2).pow(2);
  CHECK(det_dp(m2.a) == det_a);
  CHECK(det_a - B * (m2.b(2, 2) + m2.c(2, 2)) == (a(1, 1) - Polynomial(2) * B) * a(2, 2));

  const auto fixed = build_thm3(3, BetaMode::fixed(-1));
  CHECK(fixed.a(3, 1) == -a(1, 3));
}

TEST_CASE("variable universe of the constructions") {
  for (int n = 1; n <= 5; ++n) {
    const auto m = build_thm1(n);
    std::set<PolyVar> expected{PolyVar::lambda()};
    for (int i = 1; i <= n; ++i) {
      expected.insert(PolyVar::entry(i, 0));
      expected.insert(PolyVar::entry(0, i));
      for (int j = 1; j <= n; ++j) expected.insert(PolyVar::entry(i, j));
    }
    CHECK(variables_of(m.a) == expected);
    CHECK_FALSE(variables_of(m.b).contains(PolyVar::entry(0, 0)));
    CHECK_FALSE(variables_of(m.c).contains(PolyVar::entry(0, 0)));
  }
  for (int n = 1; n <= 6; ++n) {
    const auto m = build_thm3(n);
    for (const auto* mat : {&m.a, &m.b, &m.c}) {
      for (auto v : variables_of(*mat)) {
        if (v.kind() == PolyVar::Kind::Entry) CHECK_FALSE((v.col() == 1 && v.row() > 1));
      }
    }
  }
}

TEST_CASE("apply_specialization") {
  const auto m2 = build_thm3(2);
  const auto c5 = apply_specialization(m2, 2, Specialization::Cor5);
  CHECK(c5.a(1, 1) == Polynomial(2));
  CHECK(c5.a(1, 2) == L * a(1, 2));
  CHECK(c5.a(2, 1) == a(1, 2));
  CHECK(c5.a(2, 2) == Polynomial(2));

  const auto c6 = apply_specialization(m2, 2, Specialization::Cor6);
  CHECK(c6.a(1, 1).is_zero());
  CHECK(c6.a(1, 2) == L * a(1, 2));
  CHECK(c6.a(2, 1) == -a(1, 2));
  CHECK(c6.a(2, 2).is_zero());
  // Originals untouched.
  CHECK(m2.a(2, 1) == B * a(1, 2));

  const auto map = specialization_map(3, Specialization::Cor6);
  CHECK(poly_substitute(a(3, 3), map).is_zero());
  CHECK(poly_substitute(a(3, 2), map) == -a(2, 3));
}

TEST_CASE("Cor6 specialization yields skew structure") {
  for (int n : {2, 4, 6}) {
    const auto m = apply_specialization(build_thm3(n), n, Specialization::Cor6);
    for (int i = 2; i <= n; ++i) {
      CHECK(m.a(i, i).is_zero());
      for (int j = 2; j <= n; ++j) {
        CHECK(m.a(i, j) == -m.a(j, i));
        const auto plain = (i == j) ? Polynomial() : (i < j ? a(i, j) : -a(j, i));
        const auto corrected = plain - L * a(1, i) * a(1, j);
        CHECK(m.c(i, j) == ((i + j) % 2 == 0 ? plain : corrected));
      }
    }
  }
}

TEST_CASE("lambda degree of the thm1 determinants is at most one") {
  for (int n = 0; n <= 5; ++n) {
    const auto m = build_thm1(n);
    for (const auto* mat : {&m.a, &m.b}) {
      const auto det = det_dp(*mat);
      for (unsigned k = 2; k <= static_cast<unsigned>(n) + 1; ++k) {
        CHECK(poly_coeff_in_var(det, PolyVar::lambda(), k).is_zero());
      }
      CHECK(det.degree_in(PolyVar::lambda()) <= 1);
    }
  }
}

TEST_CASE("signed permutation expansions reproduce det B and det C") {
  for (int n = 2; n <= 5; ++n) {
    const auto m = build_thm3(n);
    std::map<int, Polynomial> corr;
    for (int i = 2; i <= n; ++i) corr[i] = a(1, i);
    const auto inner = thm3_inner_matrix(n);
    CHECK(det_signed_perm_expansion(inner, corr, ParityRule::EvenCorrected) == det_dp(m.b));
    CHECK(det_signed_perm_expansion(inner, corr, ParityRule::OddCorrected) == det_dp(m.c));
  }
}

TEST_CASE("identity family domains") {
  CHECK_NOTHROW(IdentityFamily{IdentityId::Thm1, 0}.validate());
  CHECK_THROWS(IdentityFamily{IdentityId::Thm3, 0}.validate());
  CHECK_THROWS(IdentityFamily{IdentityId::Cor6, 3}.validate());
  CHECK_THROWS(IdentityFamily{IdentityId::Thm7, 5}.validate());
  CHECK(identity_from_string("cor5") == IdentityId::Cor5);
  CHECK_FALSE(identity_from_string("thm9").has_value());
}

#include "traceid/identities.hpp"

#include "traceid/error.hpp"

namespace traceid {

const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::Thm1: return "thm1";
    case IdentityId::Thm3: return "thm3";
    case IdentityId::Cor5: return "cor5";
    case IdentityId::Cor6: return "cor6";
    case IdentityId::Thm7: return "thm7";
  }
  return "?";
}

std::optional<IdentityId> identity_from_string(const std::string& s) {
  for (auto id : {IdentityId::Thm1, IdentityId::Thm3, IdentityId::Cor5, IdentityId::Cor6, IdentityId::Thm7}) {
    if (s == to_string(id)) return id;
  }
  return std::nullopt;
}

void IdentityFamily::validate() const {
  const std::string name = to_string(id);
  switch (id) {
    case IdentityId::Thm1:
      if (n < 0) throw Error(ErrorKind::InvalidCombination, name + " needs n >= 0");
      break;
    case IdentityId::Thm3:
    case IdentityId::Cor5:
      if (n < 1) throw Error(ErrorKind::InvalidCombination, name + " needs n >= 1");
      break;
    case IdentityId::Cor6:
    case IdentityId::Thm7:
      if (n < 1 || n % 2 != 0) throw Error(ErrorKind::InvalidCombination, name + " needs even n >= 2");
      break;
  }
}

IdentityMatrices build_thm1(int n) {
  IdentityFamily{IdentityId::Thm1, n}.validate();
  const auto un = static_cast<std::size_t>(n);
  const Polynomial lambda = Polynomial::lambda();
  auto trace_like = [&](int i, int j) { return lambda * Polynomial::a(i, 0) * Polynomial::a(0, j) - Polynomial::a(i, j); };

  IdentityMatrices m{PolyMatrix::square(PolyMatrix::range_labels(0, un + 1)),
                     PolyMatrix::square(PolyMatrix::range_labels(1, un)),
                     PolyMatrix::square(PolyMatrix::range_labels(1, un))};
  m.a(0, 0) = Polynomial(2);
  for (int j = 1; j <= n; ++j) m.a(0, j) = lambda * Polynomial::a(0, j);
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      m.a(i, j) = (j == 0 || (i + j) % 2 == 0) ? Polynomial::a(i, j) : trace_like(i, j);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      m.b(i, j) = trace_like(i, j);
      m.c(i, j) = Polynomial::a(i, j);
    }
  }
  return m;
}

IdentityMatrices build_thm3(int n, BetaMode beta) {
  IdentityFamily{IdentityId::Thm3, n}.validate();
  const auto un = static_cast<std::size_t>(n);
  const Polynomial lambda = Polynomial::lambda();
  const Polynomial b = beta.poly();

  IdentityMatrices m{PolyMatrix::square(PolyMatrix::range_labels(1, un)),
                     PolyMatrix::square(PolyMatrix::range_labels(2, un - 1)),
                     PolyMatrix::square(PolyMatrix::range_labels(2, un - 1))};
  m.a(1, 1) = Polynomial::a(1, 1);
  for (int j = 2; j <= n; ++j) m.a(1, j) = lambda * Polynomial::a(1, j);
  for (int i = 2; i <= n; ++i) {
    m.a(i, 1) = b * Polynomial::a(1, i);
    for (int j = 2; j <= n; ++j) m.a(i, j) = Polynomial::a(i, j);
  }
  for (int i = 2; i <= n; ++i) {
    for (int j = 2; j <= n; ++j) {
      const Polynomial corrected = Polynomial::a(i, j) - lambda * Polynomial::a(1, i) * Polynomial::a(1, j);
      const bool even = (i + j) % 2 == 0;
      m.b(i, j) = even ? corrected : Polynomial::a(i, j);
      m.c(i, j) = even ? Polynomial::a(i, j) : corrected;
    }
  }
  return m;
}

PolyMatrix thm3_inner_matrix(int n) {
  return generic_matrix(PolyMatrix::range_labels(2, n >= 1 ? static_cast<std::size_t>(n - 1) : 0));
}

Substitution specialization_map(int n, Specialization kind) {
  Substitution map;
  const bool skew = kind == Specialization::Cor6;
  map[PolyVar::beta()] = Polynomial(skew ? -1 : 1);
  for (int i = 1; i <= n; ++i) {
    map[PolyVar::entry(i, i)] = Polynomial(skew ? 0 : 2);
    for (int j = 1; j < i; ++j) {
      map[PolyVar::entry(i, j)] = skew ? -Polynomial::a(j, i) : Polynomial::a(j, i);
    }
  }
  return map;
}

IdentityMatrices apply_specialization(const IdentityMatrices& m, int n, Specialization kind) {
  const auto map = specialization_map(n, kind);
  return {m.a.substitute(map), m.b.substitute(map), m.c.substitute(map)};
}

}  // namespace traceid

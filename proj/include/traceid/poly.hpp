#pragma once

// Sparse multivariate polynomials over Z in the indeterminates
// a[i,j], lambda and beta.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace traceid {

/// An indeterminate. Ordered Lambda < Beta < a[i,j], entries by (i, j).
class PolyVar {
 public:
  enum class Kind : std::uint8_t { Lambda, Beta, Entry };

  static constexpr PolyVar lambda() { return PolyVar(0); }
  static constexpr PolyVar beta() { return PolyVar(1); }
  static PolyVar entry(int i, int j);

  Kind kind() const {
    return code_ == 0 ? Kind::Lambda : code_ == 1 ? Kind::Beta : Kind::Entry;
  }
  int row() const;  // Entry only
  int col() const;  // Entry only
  std::uint32_t code() const { return code_; }

  std::string to_string() const;

  friend constexpr auto operator<=>(PolyVar, PolyVar) = default;

 private:
  static constexpr std::uint32_t kIndexLimit = 1u << 12;
  constexpr explicit PolyVar(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

struct VarPower {
  PolyVar var;
  std::uint32_t exp;
  friend bool operator==(const VarPower&, const VarPower&) = default;
};

/// Power product with strictly positive exponents, sorted by variable.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(PolyVar v, std::uint32_t exp = 1);

  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(PolyVar v) const;
  bool is_unit() const { return factors_.empty(); }
  const std::vector<VarPower>& factors() const { return factors_; }

  Monomial operator*(const Monomial& other) const;
  /// The monomial with `v` removed.
  Monomial without(PolyVar v) const;

  friend bool operator==(const Monomial& x, const Monomial& y) {
    return x.degree_ == y.degree_ && x.factors_ == y.factors_;
  }
  /// Graded lexicographic.
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y);

  std::size_t hash() const;

 private:
  friend class Polynomial;
  std::vector<VarPower> factors_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  mpz_class coeff;
};

/// Canonical polynomial: terms in strictly descending monomial order, no
/// zero coefficients. Equality of the stored form is ring equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const mpz_class& c);
  static Polynomial var(PolyVar v);
  static Polynomial lambda() { return var(PolyVar::lambda()); }
  static Polynomial beta() { return var(PolyVar::beta()); }
  static Polynomial a(int i, int j) { return var(PolyVar::entry(i, j)); }
  static Polynomial term(const mpz_class& c, Monomial m);
  /// Builds from arbitrary terms, merging duplicates and dropping zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(PolyVar v) const;
  bool contains(PolyVar v) const;
  /// Variables occurring with nonzero coefficient, ascending.
  std::vector<PolyVar> variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& p, const Polynomial& q);

  /// Canonical text, e.g. `-1*lambda*a[0,1]*a[1,0] + 2*a[1,1]`.
  std::string to_string() const;
  static Polynomial parse(std::string_view text);

 private:
  std::vector<Term> terms_;
};

using Substitution = std::map<PolyVar, Polynomial>;

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
/// Ring homomorphism fixing unmapped variables.
Polynomial poly_substitute(const Polynomial& p, const Substitution& map);
/// Coefficient of v^k when p is viewed as a polynomial in v.
Polynomial poly_coeff_in_var(const Polynomial& p, PolyVar v, unsigned k);

}  // namespace traceid

template <>
struct std::hash<traceid::Monomial> {
  std::size_t operator()(const traceid::Monomial& m) const { return m.hash(); }
};

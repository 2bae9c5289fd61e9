#include "traceid/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_map>

#include "traceid/error.hpp"

namespace traceid {

PolyVar PolyVar::entry(int i, int j) {
  if (i < 0 || j < 0 || i >= static_cast<int>(kIndexLimit) || j >= static_cast<int>(kIndexLimit)) {
    throw Error(ErrorKind::Parse, "entry index out of range");
  }
  return PolyVar(2 + static_cast<std::uint32_t>(i) * kIndexLimit + static_cast<std::uint32_t>(j));
}

int PolyVar::row() const { return static_cast<int>((code_ - 2) / kIndexLimit); }
int PolyVar::col() const { return static_cast<int>((code_ - 2) % kIndexLimit); }

std::string PolyVar::to_string() const {
  switch (kind()) {
    case Kind::Lambda: return "lambda";
    case Kind::Beta: return "beta";
    case Kind::Entry:
      return "a[" + std::to_string(row()) + "," + std::to_string(col()) + "]";
  }
  return {};
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(PolyVar v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) {
    m.factors_.push_back({v, exp});
    m.degree_ = exp;
  }
  return m;
}

std::uint32_t Monomial::exponent(PolyVar v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const VarPower& f, PolyVar x) { return f.var < x; });
  return (it != factors_.end() && it->var == v) ? it->exp : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() && j != other.factors_.end()) {
    if (i->var < j->var) {
      out.factors_.push_back(*i++);
    } else if (j->var < i->var) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.push_back({i->var, i->exp + j->exp});
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, factors_.end());
  out.factors_.insert(out.factors_.end(), j, other.factors_.end());
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::without(PolyVar v) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.var != v) {
      out.factors_.push_back(f);
      out.degree_ += f.exp;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
  if (auto c = x.degree_ <=> y.degree_; c != 0) return c;
  const auto n = std::min(x.factors_.size(), y.factors_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& fx = x.factors_[k];
    const auto& fy = y.factors_[k];
    // The smaller variable is the more significant one.
    if (fx.var != fy.var) return fx.var < fy.var ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = fx.exp <=> fy.exp; c != 0) return c;
  }
  return x.factors_.size() <=> y.factors_.size();
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ degree_;
  for (const auto& f : factors_) {
    h ^= (static_cast<std::uint64_t>(f.var.code()) << 8 | f.exp) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

void sort_desc(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& s, const Term& t) { return s.mono > t.mono; });
}

}  // namespace

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back({Monomial{}, mpz_class(c)});
}

Polynomial::Polynomial(const mpz_class& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::var(PolyVar v) { return term(1, Monomial::of(v)); }

Polynomial Polynomial::term(const mpz_class& c, Monomial m) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  sort_desc(terms);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

std::uint32_t Polynomial::total_degree() const {
  // Descending grlex: the leading term has the largest degree.
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

std::uint32_t Polynomial::degree_in(PolyVar v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

bool Polynomial::contains(PolyVar v) const { return degree_in(v) > 0; }

std::vector<PolyVar> Polynomial::variables() const {
  std::vector<PolyVar> vars;
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) vars.push_back(f.var);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& x, const std::vector<Term>& y, bool negate_y) {
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    auto c = i->mono <=> j->mono;
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back({j->mono, negate_y ? mpz_class(-j->coeff) : j->coeff});
      ++j;
    } else {
      mpz_class s = negate_y ? mpz_class(i->coeff - j->coeff) : mpz_class(i->coeff + j->coeff);
      if (s != 0) out.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, x.end());
  for (; j != y.end(); ++j) out.push_back({j->mono, negate_y ? mpz_class(-j->coeff) : j->coeff});
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  if (q.terms_.empty()) return *this;
  terms_ = merge(terms_, q.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  if (q.terms_.empty()) return *this;
  terms_ = merge(terms_, q.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  if (q.terms_.size() == 1 && q.terms_[0].mono.is_unit()) {
    Polynomial r = p;
    for (auto& t : r.terms_) t.coeff *= q.terms_[0].coeff;
    return r;
  }
  if (p.terms_.size() == 1 && p.terms_[0].mono.is_unit()) return q * p;

  std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
  acc.reserve(p.terms_.size() * q.terms_.size());
  mpz_class prod;
  for (const auto& s : p.terms_) {
    for (const auto& t : q.terms_) {
      mpz_mul(prod.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
      auto [it, fresh] = acc.try_emplace(s.mono * t.mono, prod);
      if (!fresh) it->second += prod;
    }
  }
  Polynomial r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  }
  sort_desc(r.terms_);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t k = 0; k < p.terms_.size(); ++k) {
    if (p.terms_[k].coeff != q.terms_[k].coeff || !(p.terms_[k].mono == q.terms_[k].mono)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text form

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    if (first) {
      out += c.get_str();
    } else if (c < 0) {
      out += " - ";
      out += mpz_class(-c).get_str();
    } else {
      out += " + ";
      out += c.get_str();
    }
    for (const auto& f : t.mono.factors()) {
      out += '*';
      out += f.var.to_string();
      if (f.exp != 1) {
        out += '^';
        out += std::to_string(f.exp);
      }
    }
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty input");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    for (;;) {
      Term t = parse_term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      skip_ws();
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Term parse_term() {
    Term t{Monomial{}, 1};
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = mpz_class(read_digits());
      need_factor = false;
      skip_ws();
      if (at_end() || peek() != '*') return t;
      ++pos_;
      skip_ws();
      need_factor = true;
    }
    while (need_factor) {
      t.mono = t.mono * parse_factor();
      skip_ws();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) {
        ++pos_;
        skip_ws();
      }
    }
    return t;
  }

  Monomial parse_factor() {
    PolyVar v = PolyVar::lambda();
    if (consume("lambda")) {
      v = PolyVar::lambda();
    } else if (consume("beta")) {
      v = PolyVar::beta();
    } else if (consume("a[")) {
      int i = read_int();
      expect(',');
      int j = read_int();
      expect(']');
      v = PolyVar::entry(i, j);
    } else {
      fail("expected a variable");
    }
    std::uint32_t e = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      e = static_cast<std::uint32_t>(read_int());
    }
    return Monomial::of(v, e);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  int read_int() {
    skip_ws();
    std::string d = read_digits();
    int v = 0;
    auto [p, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc{}) fail("integer out of range");
    skip_ws();
    return v;
  }

  bool consume(std::string_view word) {
    if (s_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (at_end() || get() != c) fail(std::string("expected '") + c + "'");
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// Free operations

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial poly_substitute(const Polynomial& p, const Substitution& map) {
  if (map.empty()) return p;
  // Powers of the images are reused across terms.
  std::map<std::pair<PolyVar, std::uint32_t>, Polynomial> powers;
  auto power_of = [&](const Polynomial& base, PolyVar v, std::uint32_t e) -> const Polynomial& {
    auto [it, fresh] = powers.try_emplace({v, e});
    if (fresh) it->second = base.pow(e);
    return it->second;
  };

  std::vector<Term> fixed_terms;
  Polynomial out;
  for (const auto& t : p.terms()) {
    Monomial kept;
    Polynomial factor(t.coeff);
    bool touched = false;
    for (const auto& f : t.mono.factors()) {
      auto it = map.find(f.var);
      if (it == map.end()) {
        kept = kept * Monomial::of(f.var, f.exp);
      } else {
        factor *= power_of(it->second, f.var, f.exp);
        touched = true;
      }
    }
    if (!touched) {
      fixed_terms.push_back(t);
    } else if (!factor.is_zero()) {
      out += factor * Polynomial::term(1, std::move(kept));
    }
  }
  return out + Polynomial::from_terms(std::move(fixed_terms));
}

Polynomial poly_coeff_in_var(const Polynomial& p, PolyVar v, unsigned k) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.mono.exponent(v) == k) terms.push_back({t.mono.without(v), t.coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace traceid

#include "traceid/polymatrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "traceid/error.hpp"

namespace traceid {

namespace {

void require_square(const PolyMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw Error(ErrorKind::NonSquare, std::string(op) + ": " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
}

void require_bound(std::size_t n, std::size_t bound, const char* op) {
  if (n > bound) {
    throw Error(ErrorKind::SizeExceeded,
                std::string(op) + ": size " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  }
}

void require_distinct(const std::vector<int>& labels) {
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::UnknownLabel, "duplicate label");
  }
}

int inversion_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

using TermAccumulator = std::unordered_map<Monomial, mpz_class, MonomialHash>;

void accumulate(TermAccumulator& acc, const Polynomial& p, int sign) {
  for (const auto& t : p.terms()) {
    auto [it, fresh] = acc.try_emplace(t.mono, 0);
    if (sign > 0) {
      it->second += t.coeff;
    } else {
      it->second -= t.coeff;
    }
  }
}

Polynomial collect(TermAccumulator& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, std::move(c)});
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(std::vector<int> row_labels, std::vector<int> col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  require_distinct(row_labels_);
  require_distinct(col_labels_);
  entries_.resize(row_labels_.size() * col_labels_.size());
}

PolyMatrix PolyMatrix::square(std::vector<int> labels) {
  auto cols = labels;
  return PolyMatrix(std::move(labels), std::move(cols));
}

std::vector<int> PolyMatrix::range_labels(int first, std::size_t size) {
  std::vector<int> labels(size);
  std::iota(labels.begin(), labels.end(), first);
  return labels;
}

std::size_t PolyMatrix::row_index(int label) const {
  auto it = std::find(row_labels_.begin(), row_labels_.end(), label);
  if (it == row_labels_.end()) throw Error(ErrorKind::UnknownLabel, "row " + std::to_string(label));
  return static_cast<std::size_t>(it - row_labels_.begin());
}

std::size_t PolyMatrix::col_index(int label) const {
  auto it = std::find(col_labels_.begin(), col_labels_.end(), label);
  if (it == col_labels_.end()) throw Error(ErrorKind::UnknownLabel, "column " + std::to_string(label));
  return static_cast<std::size_t>(it - col_labels_.begin());
}

const Polynomial& PolyMatrix::operator()(int row, int col) const { return at(row_index(row), col_index(col)); }
Polynomial& PolyMatrix::operator()(int row, int col) { return at(row_index(row), col_index(col)); }

PolyMatrix PolyMatrix::substitute(const Substitution& map) const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = poly_substitute(e, map);
  return out;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix out(col_labels_, row_labels_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << "rows";
  for (int l : row_labels_) os << ' ' << l;
  os << "\ncols";
  for (int l : col_labels_) os << ' ' << l;
  os << '\n';
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      os << '[' << row_labels_[r] << ',' << col_labels_[c] << "] " << at(r, c).to_string() << '\n';
    }
  }
  return os.str();
}

PolyMatrix PolyMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto read_labels = [&](const char* key) {
    if (!std::getline(in, line)) throw Error(ErrorKind::Parse, std::string("missing '") + key + "' line");
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word != key) throw Error(ErrorKind::Parse, std::string("expected '") + key + "'");
    std::vector<int> labels;
    int l = 0;
    while (ls >> l) labels.push_back(l);
    return labels;
  };
  auto rows = read_labels("rows");
  auto cols = read_labels("cols");
  PolyMatrix m(std::move(rows), std::move(cols));
  std::vector<bool> seen(m.rows() * m.cols(), false);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int r = 0;
    int c = 0;
    char open = 0, comma = 0, close = 0;
    std::istringstream ls(line);
    if (!(ls >> open >> r >> comma >> c >> close) || open != '[' || comma != ',' || close != ']') {
      throw Error(ErrorKind::Parse, "bad entry line '" + line + "'");
    }
    std::string rest;
    std::getline(ls, rest);
    const auto ri = m.row_index(r);
    const auto ci = m.col_index(c);
    m.at(ri, ci) = Polynomial::parse(rest);
    seen[ri * m.cols() + ci] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorKind::Parse, "matrix text does not list every entry");
  }
  return m;
}

// ---------------------------------------------------------------------------
// Determinants

Polynomial det_dp(const PolyMatrix& m, const EngineLimits& limits) {
  require_square(m, "det_dp");
  const std::size_t n = m.rows();
  require_bound(n, std::min<std::size_t>(limits.det_dp_max, 24), "det_dp");
  if (n == 0) return Polynomial(1);

  // minor[S] = determinant of the leading |S| rows restricted to columns S.
  const std::uint32_t full = (1u << n) - 1;
  std::vector<Polynomial> minor(std::size_t{full} + 1);
  minor[0] = Polynomial(1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const auto row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    Polynomial acc;
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint32_t bit = 1u << c;
      if (!(mask & bit)) continue;
      const Polynomial& entry = m.at(row, c);
      const Polynomial& sub = minor[mask ^ bit];
      if (entry.is_zero() || sub.is_zero()) continue;
      // Cofactor sign: parity of the chosen columns to the right of c.
      const int above = std::popcount(mask & ~((bit << 1) - 1));
      if (above % 2 == 0) {
        acc += entry * sub;
      } else {
        acc -= entry * sub;
      }
    }
    minor[mask] = std::move(acc);
  }
  return minor[full];
}

Polynomial det_perm_oracle(const PolyMatrix& m, const EngineLimits& limits) {
  require_square(m, "det_perm_oracle");
  const std::size_t n = m.rows();
  require_bound(n, limits.det_perm_max, "det_perm_oracle");

  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  TermAccumulator acc;
  do {
    Polynomial prod(1);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) {
      prod = prod * m.at(i, static_cast<std::size_t>(sigma[i]));
    }
    if (!prod.is_zero()) accumulate(acc, prod, inversion_sign(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return collect(acc);
}

Polynomial det_signed_perm_expansion(const PolyMatrix& base, const std::map<int, Polynomial>& correction,
                                     ParityRule rule, const Polynomial& lambda, const EngineLimits& limits) {
  require_square(base, "det_signed_perm_expansion");
  const std::size_t n = base.rows();
  require_bound(n, limits.signed_perm_max, "det_signed_perm_expansion");
  const auto& labels = base.row_labels();
  if (base.col_labels() != labels) {
    throw Error(ErrorKind::UnknownLabel, "signed permutation expansion needs identical row and column labels");
  }
  std::vector<Polynomial> corr;
  corr.reserve(n);
  for (int l : labels) {
    auto it = correction.find(l);
    if (it == correction.end()) throw Error(ErrorKind::UnknownLabel, "no correction for label " + std::to_string(l));
    corr.push_back(it->second);
  }
  const Polynomial minus_lambda = -lambda;

  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  TermAccumulator acc;
  do {
    const int sign = inversion_sign(pi);
    // Positions where eps_i = -1 is admissible for this pi.
    std::uint32_t admissible = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool even = (labels[i] + labels[static_cast<std::size_t>(pi[i])]) % 2 == 0;
      if (even == (rule == ParityRule::EvenCorrected)) admissible |= 1u << i;
    }
    // Every eps is a submask of the admissible set.
    std::uint32_t eps = admissible;
    for (;;) {
      Polynomial weight(1);
      for (std::size_t i = 0; i < n && !weight.is_zero(); ++i) {
        const auto j = static_cast<std::size_t>(pi[i]);
        if (eps & (1u << i)) {
          weight = weight * (minus_lambda * corr[i] * corr[j]);
        } else {
          weight = weight * base.at(i, j);
        }
      }
      if (!weight.is_zero()) accumulate(acc, weight, sign);
      if (eps == 0) break;
      eps = (eps - 1) & admissible;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return collect(acc);
}

// ---------------------------------------------------------------------------
// Matchings and Pfaffians

int Matching::raw_sign() const {
  std::vector<int> seq;
  seq.reserve(pairs.size() * 2);
  for (const auto& [i, j] : pairs) {
    seq.push_back(i);
    seq.push_back(j);
  }
  return inversion_sign(seq);
}

int Matching::partner_of(int x) const {
  for (const auto& [i, j] : pairs) {
    if (i == x) return j;
    if (j == x) return i;
  }
  throw Error(ErrorKind::UnknownLabel, "element " + std::to_string(x) + " not matched");
}

std::vector<Matching> perfect_matchings(int n) {
  if (n < 0 || n % 2 != 0) throw Error(ErrorKind::OddSize, "perfect matchings need even n, got " + std::to_string(n));
  std::vector<Matching> out;
  Matching current;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self) -> void {
    int first = 0;
    for (int x = 1; x <= n; ++x) {
      if (!used[static_cast<std::size_t>(x)]) {
        first = x;
        break;
      }
    }
    if (first == 0) {
      out.push_back(current);
      return;
    }
    used[static_cast<std::size_t>(first)] = true;
    for (int y = first + 1; y <= n; ++y) {
      if (used[static_cast<std::size_t>(y)]) continue;
      used[static_cast<std::size_t>(y)] = true;
      current.pairs.emplace_back(first, y);
      self(self);
      current.pairs.pop_back();
      used[static_cast<std::size_t>(y)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
  };
  rec(rec);
  return out;
}

namespace {

int nested_reference_sign(int n) {
  Matching nested;
  for (int i = 1; i <= n / 2; ++i) nested.pairs.emplace_back(i, n + 1 - i);
  return nested.raw_sign();
}

void require_skew(const PolyMatrix& m, const EngineLimits& limits) {
  require_square(m, "pfaffian");
  if (m.rows() % 2 != 0) throw Error(ErrorKind::OddSize, "pfaffian of odd size " + std::to_string(m.rows()));
  require_bound(m.rows(), limits.pfaffian_max, "pfaffian");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m.at(i, i).is_zero()) throw Error(ErrorKind::NotSkew, "nonzero diagonal entry");
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (!(m.at(i, j) == -m.at(j, i))) throw Error(ErrorKind::NotSkew, "M[i,j] != -M[j,i]");
    }
  }
}

}  // namespace

int matching_sign(const Matching& m) {
  const int n = static_cast<int>(m.pairs.size()) * 2;
  return m.raw_sign() * nested_reference_sign(n);
}

std::pair<Polynomial, Polynomial> pfaffian_split(const PolyMatrix& m, const EngineLimits& limits) {
  require_skew(m, limits);
  const int n = static_cast<int>(m.rows());
  if (n == 0) return {Polynomial(1), Polynomial()};
  const int normalize = nested_reference_sign(n);
  TermAccumulator even;
  TermAccumulator odd;
  for (const auto& matching : perfect_matchings(n)) {
    Polynomial prod(1);
    for (const auto& [i, j] : matching.pairs) {
      prod = prod * m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      if (prod.is_zero()) break;
    }
    if (prod.is_zero()) continue;
    auto& bucket = matching.partner_of(1) % 2 == 0 ? even : odd;
    accumulate(bucket, prod, matching.raw_sign() * normalize);
  }
  return {collect(even), collect(odd)};
}

Polynomial pfaffian(const PolyMatrix& m, const EngineLimits& limits) {
  auto [pe, po] = pfaffian_split(m, limits);
  return pe + po;
}

PolyMatrix submatrix_delete(const PolyMatrix& m, const std::set<int>& drop_rows, const std::set<int>& drop_cols) {
  for (int r : drop_rows) (void)m.row_index(r);
  for (int c : drop_cols) (void)m.col_index(c);
  std::vector<int> rows;
  std::vector<int> cols;
  for (int r : m.row_labels()) {
    if (!drop_rows.contains(r)) rows.push_back(r);
  }
  for (int c : m.col_labels()) {
    if (!drop_cols.contains(c)) cols.push_back(c);
  }
  PolyMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out.at(r, c) = m(rows[r], cols[c]);
  }
  return out;
}

PolyMatrix generic_matrix(const std::vector<int>& labels) {
  auto m = PolyMatrix::square(labels);
  for (std::size_t r = 0; r < labels.size(); ++r) {
    for (std::size_t c = 0; c < labels.size(); ++c) m.at(r, c) = Polynomial::a(labels[r], labels[c]);
  }
  return m;
}

PolyMatrix generic_skew_matrix(const std::vector<int>& labels) {
  auto m = PolyMatrix::square(labels);
  for (std::size_t r = 0; r < labels.size(); ++r) {
    for (std::size_t c = r + 1; c < labels.size(); ++c) {
      m.at(r, c) = Polynomial::a(labels[r], labels[c]);
      m.at(c, r) = -Polynomial::a(labels[r], labels[c]);
    }
  }
  return m;
}

}  // namespace traceid

#include "traceid/sl2.hpp"

#include <algorithm>

#include "traceid/error.hpp"

namespace traceid {

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& y) {
  re_ += y.re_;
  im_ += y.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& y) {
  re_ -= y.re_;
  im_ -= y.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& y) {
  mpq_class re = re_ * y.re_ - im_ * y.im_;
  mpq_class im = re_ * y.im_ + im_ * y.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& y) {
  const mpq_class norm = y.re_ * y.re_ + y.im_ * y.im_;
  if (norm == 0) throw Error(ErrorKind::Singular, "division by zero");
  mpq_class re = (re_ * y.re_ + im_ * y.im_) / norm;
  mpq_class im = (im_ * y.re_ - re_ * y.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im_ == 0) return re_.get_str();
  if (re_ == 0) return im_.get_str() + "i";
  std::string im = im_.get_str();
  return re_.get_str() + (im_ < 0 ? "" : "+") + im + "i";
}

// ---------------------------------------------------------------------------
// Mat2

Mat2 Mat2::sl2(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d) {
  Mat2 m(std::move(a), std::move(b), std::move(c), std::move(d));
  if (!m.is_unimodular()) throw Error(ErrorKind::NotUnimodular, "det = " + m.det().to_string());
  return m;
}

Mat2 Mat2::from_abc(const GaussianRational& a, const GaussianRational& b, const GaussianRational& c) {
  if (a.is_zero()) throw Error(ErrorKind::Singular, "from_abc needs a != 0");
  return Mat2(a, b, c, (GaussianRational(1) + b * c) / a);
}

std::string Mat2::to_string() const {
  return "[[" + e11.to_string() + ", " + e12.to_string() + "], [" + e21.to_string() + ", " + e22.to_string() + "]]";
}

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22,
          x.e21 * y.e11 + x.e22 * y.e21, x.e21 * y.e12 + x.e22 * y.e22};
}

Mat2 mat2_inverse(const Mat2& x) {
  const GaussianRational d = x.det();
  Mat2 adj(x.e22, -x.e12, -x.e21, x.e11);
  if (d == GaussianRational(1)) return adj;
  if (d.is_zero()) throw Error(ErrorKind::Singular, "matrix " + x.to_string() + " has det 0");
  return {adj.e11 / d, adj.e12 / d, adj.e21 / d, adj.e22 / d};
}

std::pair<GaussianRational, GaussianRational> trace_relation_check(const Mat2& m, const Mat2& big_m) {
  if (!m.is_unimodular() || !big_m.is_unimodular()) {
    throw Error(ErrorKind::NotUnimodular, "trace relation needs det = 1 inputs");
  }
  auto lhs = (m * mat2_inverse(big_m)).trace();
  auto rhs = m.trace() * big_m.trace() - (m * big_m).trace();
  return {std::move(lhs), std::move(rhs)};
}

// ---------------------------------------------------------------------------
// Random generation

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Raw engine output keeps draws identical across standard libraries.
long draw(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

GaussianRational draw_gaussian(Rng& rng, int h) {
  mpq_class re(draw(rng, -h, h), static_cast<unsigned long>(draw(rng, 1, h)));
  mpq_class im(draw(rng, -h, h), static_cast<unsigned long>(draw(rng, 1, h)));
  return {re, im};
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
  return splitmix64(master_seed ^ splitmix64(index));
}

Mat2 random_sl2z(int word_len, Rng& rng) {
  static const Mat2 kS(0, -1, 1, 0);
  static const Mat2 kSInv(0, 1, -1, 0);
  static const Mat2 kT(1, 1, 0, 1);
  static const Mat2 kTInv(1, -1, 0, 1);
  static const Mat2* kLetters[] = {&kS, &kSInv, &kT, &kTInv};
  Mat2 w;
  for (int k = 0; k < word_len; ++k) w = w * *kLetters[rng() >> 62];
  return w;
}

Mat2 random_sl2z(int word_len, std::uint64_t seed) {
  Rng rng(seed);
  return random_sl2z(word_len, rng);
}

Mat2 random_sl2_gaussian(Rng& rng, int height_bound) {
  GaussianRational a;
  do {
    a = draw_gaussian(rng, height_bound);
  } while (a.is_zero());
  auto b = draw_gaussian(rng, height_bound);
  auto c = draw_gaussian(rng, height_bound);
  return Mat2::from_abc(a, b, c);
}

Mat2 random_sl2_gaussian(std::uint64_t seed, int height_bound) {
  Rng rng(seed);
  return random_sl2_gaussian(rng, height_bound);
}

const char* to_string(Generator g) { return g == Generator::SL2Z ? "sl2z" : "gaussian"; }

Mat2 random_sl2(Generator g, Rng& rng) {
  return g == Generator::SL2Z ? random_sl2z(kDefaultWordLength, rng) : random_sl2_gaussian(rng, kDefaultHeightBound);
}

// ---------------------------------------------------------------------------
// Dense exact matrices

GaussianRational exact_det(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NonSquare, "exact_det");
  const std::size_t n = m.rows();
  ExactMatrix w = m;
  GaussianRational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && w(p, k).is_zero()) ++p;
    if (p == n) return GaussianRational(0);
    if (p != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(w(p, c), w(k, c));
      det = -det;
    }
    det *= w(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (w(r, k).is_zero()) continue;
      const GaussianRational f = w(r, k) / w(k, k);
      for (std::size_t c = k; c < n; ++c) w(r, c) -= f * w(k, c);
    }
  }
  return det;
}

std::optional<ExactVector> left_kernel(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NonSquare, "left_kernel");
  const std::size_t n = m.rows();
  // v m = 0  <=>  m^t v^t = 0: reduce the transpose to RREF.
  ExactMatrix t(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) t(c, r) = m(r, c);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && t(p, col).is_zero()) ++p;
    if (p == n) continue;
    for (std::size_t c = 0; c < n; ++c) std::swap(t(p, c), t(row, c));
    const GaussianRational inv = GaussianRational(1) / t(row, col);
    for (std::size_t c = col; c < n; ++c) t(row, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || t(r, col).is_zero()) continue;
      const GaussianRational f = t(r, col);
      for (std::size_t c = col; c < n; ++c) t(r, c) -= f * t(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  if (pivot_cols.size() == n) return std::nullopt;

  std::size_t free_col = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), k) == pivot_cols.end()) {
      free_col = k;
      break;
    }
  }
  ExactVector v(n, GaussianRational(0));
  v[free_col] = GaussianRational(1);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -t(r, free_col);

  for (const auto& x : v) {
    if (!x.is_zero()) {
      const GaussianRational lead = x;
      for (auto& y : v) y /= lead;
      break;
    }
  }
  return v;
}

ExactVector row_times(const ExactVector& v, const ExactMatrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorKind::LengthMismatch, "row_times");
  ExactVector out(m.cols(), GaussianRational(0));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) out[c] += v[r] * m(r, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Trace matrices

namespace {

void require_unimodular(const std::vector<Mat2>& xs) {
  for (const auto& x : xs) {
    if (!x.is_unimodular()) throw Error(ErrorKind::NotUnimodular, x.to_string());
  }
}

}  // namespace

MagnusMatrices build_magnus_matrices(const std::vector<Mat2>& m, const std::vector<Mat2>& big_m) {
  if (m.size() != big_m.size()) throw Error(ErrorKind::LengthMismatch, "build_magnus_matrices");
  require_unimodular(m);
  require_unimodular(big_m);
  const std::size_t n = m.size();
  std::vector<Mat2> ms{Mat2::identity()};
  std::vector<Mat2> bs{Mat2::identity()};
  std::vector<Mat2> bs_inv{Mat2::identity()};
  ms.insert(ms.end(), m.begin(), m.end());
  for (const auto& x : big_m) {
    bs.push_back(x);
    bs_inv.push_back(mat2_inverse(x));
  }

  MagnusMatrices out{ExactMatrix(n + 1, n + 1), ExactMatrix(n, n), ExactMatrix(n, n)};
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      const GaussianRational direct = (ms[i] * bs[j]).trace();
      const GaussianRational inverse = (ms[i] * bs_inv[j]).trace();
      out.a(i, j) = (i + j) % 2 == 0 ? inverse : direct;
      if (i >= 1 && j >= 1) {
        out.b(i - 1, j - 1) = -direct;
        out.c(i - 1, j - 1) = inverse;
      }
    }
  }
  return out;
}

ExactMatrix build_thm2_D(const std::vector<Mat2>& m, const std::vector<Mat2>& big_m, const SignVector& eps) {
  if (m.size() != big_m.size() || m.size() != eps.size()) {
    throw Error(ErrorKind::LengthMismatch, "build_thm2_D");
  }
  require_unimodular(m);
  require_unimodular(big_m);
  const std::size_t n = m.size();
  std::vector<Mat2> inv;
  inv.reserve(n);
  for (const auto& x : big_m) inv.push_back(mat2_inverse(x));
  ExactMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (eps[i] != 1 && eps[i] != -1) throw Error(ErrorKind::InvalidCombination, "sign vector entries must be +-1");
    for (std::size_t j = 0; j < n; ++j) d(i, j) = (m[i] * (eps[i] == 1 ? big_m[j] : inv[j])).trace();
  }
  return d;
}

ExactMatrix trace_matrix(const std::vector<Mat2>& x, const std::vector<Mat2>& y, bool invert_y) {
  ExactMatrix out(x.size(), y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    const Mat2 yj = invert_y ? mat2_inverse(y[j]) : y[j];
    for (std::size_t i = 0; i < x.size(); ++i) out(i, j) = (x[i] * yj).trace();
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const GaussianRational& x) {
  return {{"re_num", x.re().get_num().get_str()},
          {"re_den", x.re().get_den().get_str()},
          {"im_num", x.im().get_num().get_str()},
          {"im_den", x.im().get_den().get_str()}};
}

nlohmann::json to_json(const ExactMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const Mat2& m) {
  return nlohmann::json::array({nlohmann::json::array({to_json(m.e11), to_json(m.e12)}),
                                nlohmann::json::array({to_json(m.e21), to_json(m.e22)})});
}

nlohmann::json to_json(const ExactVector& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

GaussianRational gaussian_from_json(const nlohmann::json& j) {
  auto q = [&](const char* num, const char* den) {
    mpq_class v(mpz_class(j.at(num).get<std::string>()), mpz_class(j.at(den).get<std::string>()));
    return v;
  };
  return {q("re_num", "re_den"), q("im_num", "im_den")};
}

ExactMatrix matrix_from_json(const nlohmann::json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw Error(ErrorKind::Parse, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = gaussian_from_json(j.at(r).at(c));
  }
  return m;
}

}  // namespace traceid

#pragma once

// Exact 2x2 matrices over the Gaussian rationals Q(i), random SL(2)
// generators, and the numeric trace matrices built from them.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace traceid {

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im);
  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& y);
  GaussianRational& operator-=(const GaussianRational& y);
  GaussianRational& operator*=(const GaussianRational& y);
  /// Throws Singular on division by zero.
  GaussianRational& operator/=(const GaussianRational& y);
  friend GaussianRational operator+(GaussianRational x, const GaussianRational& y) { return x += y; }
  friend GaussianRational operator-(GaussianRational x, const GaussianRational& y) { return x -= y; }
  friend GaussianRational operator*(GaussianRational x, const GaussianRational& y) { return x *= y; }
  friend GaussianRational operator/(GaussianRational x, const GaussianRational& y) { return x /= y; }
  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }

  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

class Mat2 {
 public:
  GaussianRational e11{1}, e12{0}, e21{0}, e22{1};

  Mat2() = default;
  Mat2(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d)
      : e11(std::move(a)), e12(std::move(b)), e21(std::move(c)), e22(std::move(d)) {}
  static Mat2 identity() { return {}; }
  /// Checked constructor for SL(2) members; throws NotUnimodular.
  static Mat2 sl2(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d);
  /// The SL(2) matrix [[a, b], [c, (1 + b c) / a]]; a must be nonzero.
  static Mat2 from_abc(const GaussianRational& a, const GaussianRational& b, const GaussianRational& c);

  GaussianRational det() const { return e11 * e22 - e12 * e21; }
  GaussianRational trace() const { return e11 + e22; }
  bool is_unimodular() const { return det() == GaussianRational(1); }

  friend bool operator==(const Mat2&, const Mat2&) = default;
  std::string to_string() const;
};

Mat2 mat2_mul(const Mat2& x, const Mat2& y);
inline Mat2 operator*(const Mat2& x, const Mat2& y) { return mat2_mul(x, y); }
/// Adjugate when det = 1, adjugate / det otherwise; throws Singular.
Mat2 mat2_inverse(const Mat2& x);

/// (tr(m M^-1), tr m * tr M - tr(m M)).
std::pair<GaussianRational, GaussianRational> trace_relation_check(const Mat2& m, const Mat2& big_m);

// ---------------------------------------------------------------------------
// Random generation

using Rng = std::mt19937_64;

/// Deterministic per-trial seed.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

inline constexpr int kDefaultWordLength = 12;
inline constexpr int kDefaultHeightBound = 5;

/// Word of length word_len in S, S^-1, T, T^-1.
Mat2 random_sl2z(int word_len, Rng& rng);
Mat2 random_sl2z(int word_len, std::uint64_t seed);
/// [[a, b], [c, (1 + bc)/a]] with Gaussian-rational a != 0, b, c of bounded height.
Mat2 random_sl2_gaussian(Rng& rng, int height_bound);
Mat2 random_sl2_gaussian(std::uint64_t seed, int height_bound);

enum class Generator { SL2Z, Gaussian };
const char* to_string(Generator g);
Mat2 random_sl2(Generator g, Rng& rng);

// ---------------------------------------------------------------------------
// Dense exact matrices

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

using ExactVector = std::vector<GaussianRational>;

GaussianRational exact_det(const ExactMatrix& m);
/// Nonzero v with v m = 0, first nonzero coordinate 1; nullopt if none.
std::optional<ExactVector> left_kernel(const ExactMatrix& m);
/// v m, exactly.
ExactVector row_times(const ExactVector& v, const ExactMatrix& m);

// ---------------------------------------------------------------------------
// Trace matrices

struct MagnusMatrices {
  ExactMatrix a;  // (n+1)x(n+1), indices 0..n
  ExactMatrix b;  // -tr(m_i M_j)
  ExactMatrix c;  // tr(m_i M_j^-1)
};

/// A(i,j) = tr(m_i M_j^-1) for i+j even, tr(m_i M_j) otherwise, m_0 = M_0 = I.
MagnusMatrices build_magnus_matrices(const std::vector<Mat2>& m, const std::vector<Mat2>& big_m);

using SignVector = std::vector<int>;

/// D(i,j) = tr(m_i M_j^{eps_i}).
ExactMatrix build_thm2_D(const std::vector<Mat2>& m, const std::vector<Mat2>& big_m, const SignVector& eps);

/// (tr(x_i y_j)) or (tr(x_i y_j^-1)).
ExactMatrix trace_matrix(const std::vector<Mat2>& x, const std::vector<Mat2>& y, bool invert_y);

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const GaussianRational& x);
nlohmann::json to_json(const ExactMatrix& m);
nlohmann::json to_json(const Mat2& m);
nlohmann::json to_json(const ExactVector& v);
GaussianRational gaussian_from_json(const nlohmann::json& j);
ExactMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace traceid

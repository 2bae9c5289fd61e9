#pragma once

// Labeled matrices over the polynomial ring, two independent determinant
// engines, the signed-permutation expansion of corrected determinants, and
// Pfaffians over perfect matchings.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "traceid/poly.hpp"

namespace traceid {

/// Size bounds for the exponential/factorial engines.
struct EngineLimits {
  std::size_t det_dp_max = 8;
  std::size_t det_perm_max = 7;
  std::size_t signed_perm_max = 6;
  std::size_t pfaffian_max = 10;
};

class PolyMatrix {
 public:
  PolyMatrix() = default;
  /// Zero matrix on the given labels.
  PolyMatrix(std::vector<int> row_labels, std::vector<int> col_labels);
  /// Square zero matrix with identical row and column labels.
  static PolyMatrix square(std::vector<int> labels);
  /// Labels first, first + 1, ..., first + size - 1.
  static std::vector<int> range_labels(int first, std::size_t size);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  bool is_square() const { return rows() == cols(); }
  const std::vector<int>& row_labels() const { return row_labels_; }
  const std::vector<int>& col_labels() const { return col_labels_; }

  /// Access by label.
  const Polynomial& operator()(int row, int col) const;
  Polynomial& operator()(int row, int col);
  /// Access by 0-based position.
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }

  std::size_t row_index(int label) const;
  std::size_t col_index(int label) const;

  /// Entry-wise substitution; returns a new matrix.
  PolyMatrix substitute(const Substitution& map) const;
  PolyMatrix transposed() const;

  /// Text block: `rows ...`, `cols ...`, then one `[r,c] <poly>` line per entry.
  std::string to_string() const;
  static PolyMatrix parse(const std::string& text);

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::vector<int> row_labels_;
  std::vector<int> col_labels_;
  std::vector<Polynomial> entries_;
};

/// Determinant by memoized Laplace expansion over column subsets.
Polynomial det_dp(const PolyMatrix& m, const EngineLimits& limits = {});

/// Leibniz sum over all permutations; the reference oracle for det_dp.
Polynomial det_perm_oracle(const PolyMatrix& m, const EngineLimits& limits = {});

enum class ParityRule {
  EvenCorrected,  // correction allowed where i + pi(i) is even (matrix B)
  OddCorrected,   // correction allowed where i + pi(i) is odd (matrix C)
};

/// Sum of sgn(pi) * w(pi, eps) over signed permutations of the labels of
/// `base`, where a position i with eps_i = -1 contributes
/// -lambda * correction[i] * correction[pi(i)] instead of base(i, pi(i)).
/// The parity rule restricts which positions may carry eps_i = -1.
Polynomial det_signed_perm_expansion(const PolyMatrix& base,
                                     const std::map<int, Polynomial>& correction,
                                     ParityRule rule,
                                     const Polynomial& lambda = Polynomial::lambda(),
                                     const EngineLimits& limits = {});

/// Perfect matching on positions 1..n, pairs stored (smaller, larger) and
/// ordered by their smaller element.
struct Matching {
  std::vector<std::pair<int, int>> pairs;

  /// Sign of the permutation (i1 j1 i2 j2 ...).
  int raw_sign() const;
  int partner_of(int x) const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

std::vector<Matching> perfect_matchings(int n);

/// Sign normalized so that the nested matching {1,n},{2,n-1},... is +1.
int matching_sign(const Matching& m);

/// Pfaffian of a skew-symmetric matrix of even size.
Polynomial pfaffian(const PolyMatrix& m, const EngineLimits& limits = {});

/// (Pf_e, Pf_o): the matching sum split by the parity of the partner of
/// position 1.
std::pair<Polynomial, Polynomial> pfaffian_split(const PolyMatrix& m, const EngineLimits& limits = {});

PolyMatrix submatrix_delete(const PolyMatrix& m, const std::set<int>& drop_rows,
                            const std::set<int>& drop_cols);

/// (a[i,j]) on the given labels.
PolyMatrix generic_matrix(const std::vector<int>& labels);
/// Skew matrix: a[i,j] for i < j, -a[j,i] for i > j, zero diagonal.
PolyMatrix generic_skew_matrix(const std::vector<int>& labels);

}  // namespace traceid

#pragma once

// Symbolic matrices A, B, C of the two determinant identity families and
// their specializations.

#include <optional>
#include <string>

#include "traceid/polymatrix.hpp"

namespace traceid {

enum class IdentityId { Thm1, Thm3, Cor5, Cor6, Thm7 };

const char* to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(const std::string& s);

struct IdentityFamily {
  IdentityId id;
  int n;

  /// Throws InvalidCombination when n is outside the family's domain.
  void validate() const;
};

struct IdentityMatrices {
  PolyMatrix a;
  PolyMatrix b;
  PolyMatrix c;
};

/// A on labels 0..n with A(0,0) = 2, first row lambda*a[0,j], first column
/// a[i,0]; inner entries a[i,j] where i+j is even and
/// lambda*a[i,0]*a[0,j] - a[i,j] otherwise. B = (lambda*a[i,0]*a[0,j] - a[i,j]),
/// C = (a[i,j]), both on 1..n.
IdentityMatrices build_thm1(int n);

/// beta as an indeterminate, or fixed to an integer.
struct BetaMode {
  std::optional<long> value;
  static BetaMode symbolic() { return {}; }
  static BetaMode fixed(long v) { return {v}; }
  Polynomial poly() const { return value ? Polynomial(*value) : Polynomial::beta(); }
};

/// A on labels 1..n with first row lambda*a[1,j], first column beta*a[1,i]
/// (so a[i,1], i > 1, never occurs); B and C on 2..n carry the correction
/// -lambda*a[1,i]*a[1,j] where i+j is even (B) or odd (C).
IdentityMatrices build_thm3(int n, BetaMode beta = BetaMode::symbolic());

/// (a[i,j]) on labels 2..n, the right-hand determinant of the beta identity.
PolyMatrix thm3_inner_matrix(int n);

enum class Specialization { Cor5, Cor6 };

/// Substitution map used by apply_specialization for indices 1..n.
Substitution specialization_map(int n, Specialization kind);

/// Cor5: beta=1, a[i,j]=a[j,i], a[i,i]=2. Cor6: beta=-1, a[i,j]=-a[j,i],
/// a[i,i]=0. lambda stays symbolic. Returns new matrices.
IdentityMatrices apply_specialization(const IdentityMatrices& m, int n, Specialization kind);

}  // namespace traceid

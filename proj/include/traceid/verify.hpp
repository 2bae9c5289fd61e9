#pragma once

// Identity checks tying the constructions to the determinant and Pfaffian
// engines. Each check returns a structured report; failures carry a witness.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "traceid/identities.hpp"
#include "traceid/polymatrix.hpp"
#include "traceid/sl2.hpp"

namespace traceid {

enum class Status { Pass, Fail };

struct VerificationReport {
  std::string identity;
  std::optional<int> n;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::Pass;
  std::optional<std::string> residual;
  std::optional<nlohmann::json> witness;
  std::int64_t millis = 0;

  bool passed() const { return status == Status::Pass; }
  nlohmann::json to_json(bool include_timing = true) const;
};

/// Flip the sign of one entry of B before checking.
struct SignFlip {
  int row;
  int col;
};

struct SymbolicOptions {
  EngineLimits limits;
  /// Recompute the residual with det_perm_oracle when every matrix fits its bound.
  bool cross_check = true;
  std::optional<SignFlip> flip_b;
};

/// det A - (-1)^n det B - det C == 0.
VerificationReport verify_thm1(int n, const SymbolicOptions& opts = {});

/// Thm3: det A - beta (det B + det C) - (a[1,1] - 2 beta) det(a[i,j])_{2..n}.
/// Cor5: det A - det B - det C. Cor6: det A + det B + det C.
/// Thm7 (lambda = 1, skew, beta = -1): det C + 2 Pf_e(A) Pf_o(A).
VerificationReport verify_thm3_family(int n, IdentityId which, const SymbolicOptions& opts = {});

enum class MagnusForm {
  AsPrinted,       // det A = (-1)^n det B + det C
  SignConsistent,  // det A = det B + det C
};
const char* to_string(MagnusForm f);

/// Per trial: 2n random SL(2) matrices, the three-matrix identity, plus
/// det A = 0 for n >= 4 and det B = det C = 0 for n >= 5.
VerificationReport verify_magnus_numeric(int n, int trials, std::uint64_t master_seed, Generator generator,
                                         MagnusForm form = MagnusForm::AsPrinted);

/// Both 4x4 identities: det(tr m_iM_j) + det(tr m_iM_j^-1) = 0 and
/// det(tr m_im_j) det(tr M_iM_j) = det(tr m_iM_j)^2.
VerificationReport verify_magnus_original(int trials, std::uint64_t master_seed,
                                          Generator generator = Generator::SL2Z);

enum class EpsMode { Random, Exhaustive };
const char* to_string(EpsMode m);

/// det D = 0 with a verified left kernel vector, for n >= 5. Smaller n
/// only records the determinant.
VerificationReport verify_thm2(int n, int trials, std::uint64_t master_seed, EpsMode mode,
                               Generator generator = Generator::SL2Z);

/// tr(m M^-1) = tr m tr M - tr(mM).
VerificationReport verify_trace_relation(int trials, std::uint64_t master_seed,
                                         Generator generator = Generator::SL2Z);

}  // namespace traceid

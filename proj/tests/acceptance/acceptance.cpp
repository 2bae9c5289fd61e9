// Acceptance runner: one PASS/FAIL line per criterion, exact checks only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "traceid/identities.hpp"
#include "traceid/polymatrix.hpp"
#include "traceid/verify.hpp"

using namespace traceid;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    detail += (pass ? "" : "\n      ") + why;
    pass = false;
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_s;  // 0 = no runtime bound
  std::function<Outcome()> body;
};

std::string describe(const VerificationReport& r) {
  std::ostringstream os;
  os << r.identity;
  if (r.n) os << " n=" << *r.n;
  if (r.params.contains("generator")) os << " " << r.params["generator"].get<std::string>();
  os << " failed";
  if (r.witness && r.witness->contains("broken")) os << " (" << (*r.witness)["broken"].dump() << ")";
  if (r.residual) os << " residual=" << r.residual->substr(0, 80);
  return os.str();
}

void expect(Outcome& o, const VerificationReport& r) {
  if (!r.passed()) o.fail(describe(r));
}

Outcome symbolic_family(IdentityId which, std::vector<int> ns) {
  Outcome o;
  for (int n : ns) {
    const auto r = which == IdentityId::Thm1 ? verify_thm1(n) : verify_thm3_family(n, which);
    expect(o, r);
    if (n <= 5 && r.params["cross_checked"] != true) o.fail("engine cross-check skipped at n=" + std::to_string(n));
  }
  return o;
}

Outcome magnus(MagnusForm form) {
  Outcome o;
  std::uint64_t seed = 1000;
  for (auto gen : {Generator::SL2Z, Generator::Gaussian}) {
    for (int n = 1; n <= 6; ++n) expect(o, verify_magnus_numeric(n, 100, seed++, gen, form));
  }
  return o;
}

std::vector<Criterion> criteria() {
  return {
      {"1", "thm1 residual is zero, n=0..6", 60,
       [] { return symbolic_family(IdentityId::Thm1, {0, 1, 2, 3, 4, 5, 6}); }},
      {"2", "thm3 residual is zero with symbolic lambda, beta, n=1..6", 60,
       [] { return symbolic_family(IdentityId::Thm3, {1, 2, 3, 4, 5, 6}); }},
      {"3", "cor5 (symmetric, diagonal 2, beta=1), n=2..6", 0,
       [] { return symbolic_family(IdentityId::Cor5, {2, 3, 4, 5, 6}); }},
      {"4", "cor6 (skew, beta=-1), n=2,4,6", 0,
       [] { return symbolic_family(IdentityId::Cor6, {2, 4, 6}); }},
      {"5", "thm7 det C + 2 Pf_e Pf_o = 0, n=4,6", 30,
       [] { return symbolic_family(IdentityId::Thm7, {4, 6}); }},
      {"6", "Pf^2 = det and Pf = Pf_e + Pf_o on generic skew matrices, n=2,4,6", 0,
       [] {
         Outcome o;
         for (std::size_t n : {2u, 4u, 6u}) {
           const auto m = generic_skew_matrix(PolyMatrix::range_labels(1, n));
           const auto pf = pfaffian(m);
           const auto [even, odd] = pfaffian_split(m);
           if (!(pf * pf == det_dp(m))) o.fail("Pf^2 != det at n=" + std::to_string(n));
           if (!(even + odd == pf)) o.fail("Pf_e + Pf_o != Pf at n=" + std::to_string(n));
         }
         return o;
       }},
      {"7", "magnus three-determinant identity as printed, n=1..6, 100 trials, both generators", 30,
       [] { return magnus(MagnusForm::AsPrinted); }},
      {"7b", "magnus identity with det A = det B + det C, n=1..6, 100 trials, both generators", 30,
       [] { return magnus(MagnusForm::SignConsistent); }},
      {"8", "magnus original lemma at n=4, 100 trials", 0,
       [] {
         Outcome o;
         expect(o, verify_magnus_original(100, 8));
         expect(o, verify_magnus_original(100, 9, Generator::Gaussian));
         return o;
       }},
      {"9", "thm2 det D = 0 with verified left kernel, n=5,6 random eps; n=5 all 32 eps", 0,
       [] {
         Outcome o;
         for (int n : {5, 6}) {
           const auto r = verify_thm2(n, 100, 90 + n, EpsMode::Random);
           expect(o, r);
           if (r.params["instances"] != 100) o.fail("unexpected instance count");
         }
         const auto ex = verify_thm2(5, 1, 95, EpsMode::Exhaustive);
         expect(o, ex);
         if (ex.params["instances"] != 32) o.fail("exhaustive sweep did not cover 32 sign vectors");
         return o;
       }},
      {"10", "trace relation on 1000 pairs, both generators", 0,
       [] {
         Outcome o;
         expect(o, verify_trace_relation(1000, 10));
         expect(o, verify_trace_relation(1000, 11, Generator::Gaussian));
         return o;
       }},
      {"11", "det_dp = permutation oracle on 50 random 5x5; signed expansion = det B, det C for n<=4", 0,
       [] {
         Outcome o;
         std::mt19937_64 rng(11);
         for (int it = 0; it < 50; ++it) {
           const auto m = testing::random_matrix(rng, 5, it % 2 == 0);
           if (!(det_dp(m) == det_perm_oracle(m))) o.fail("engine mismatch on trial " + std::to_string(it));
         }
         for (int n = 2; n <= 4; ++n) {
           const auto mats = build_thm3(n);
           std::map<int, Polynomial> corr;
           for (int i = 2; i <= n; ++i) corr[i] = Polynomial::a(1, i);
           const auto inner = thm3_inner_matrix(n);
           if (!(det_signed_perm_expansion(inner, corr, ParityRule::EvenCorrected) == det_dp(mats.b)))
             o.fail("signed expansion != det B at n=" + std::to_string(n));
           if (!(det_signed_perm_expansion(inner, corr, ParityRule::OddCorrected) == det_dp(mats.c)))
             o.fail("signed expansion != det C at n=" + std::to_string(n));
         }
         return o;
       }},
      {"12", "thm1 det A, det B have no lambda^k terms for k>=2, n<=5", 0,
       [] {
         Outcome o;
         for (int n = 0; n <= 5; ++n) {
           const auto mats = build_thm1(n);
           for (const auto* m : {&mats.a, &mats.b}) {
             const auto det = det_dp(*m);
             for (unsigned k = 2; k <= det.degree_in(PolyVar::lambda()); ++k) {
               if (!poly_coeff_in_var(det, PolyVar::lambda(), k).is_zero())
                 o.fail("lambda^" + std::to_string(k) + " term at n=" + std::to_string(n));
             }
           }
         }
         return o;
       }},
      {"13", "a flipped sign in B (thm1, n=3) fails with a nonzero residual", 0,
       [] {
         Outcome o;
         for (int r = 1; r <= 3; ++r) {
           for (int c = 1; c <= 3; ++c) {
             SymbolicOptions opts;
             opts.flip_b = SignFlip{r, c};
             const auto rep = verify_thm1(3, opts);
             const std::string at = " at B[" + std::to_string(r) + "," + std::to_string(c) + "]";
             if (rep.passed()) o.fail("mutation undetected" + at);
             else if (!rep.residual || *rep.residual == "0" || !rep.witness) o.fail("missing witness" + at);
           }
         }
         return o;
       }},
  };
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      o.fail("exceeded " + std::to_string(static_cast<int>(c.budget_s)) + " s budget");
    }
    if (!o.pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << "  (" << timing << ")";
    if (!o.pass) std::cout << "\n      " << o.detail;
    std::cout << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << "\n";
  return failures == 0 ? 0 : 1;
}

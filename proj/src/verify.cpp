#include "traceid/verify.hpp"

#include <chrono>
#include <functional>

#include "traceid/error.hpp"

namespace traceid {

using nlohmann::json;

nlohmann::json VerificationReport::to_json(bool include_timing) const {
  json j;
  j["identity"] = identity;
  j["n"] = n ? json(*n) : json(nullptr);
  j["params"] = params;
  j["status"] = passed() ? "pass" : "fail";
  if (residual) j["residual"] = *residual;
  if (witness) j["witness"] = *witness;
  if (include_timing) j["millis"] = millis;
  return j;
}

const char* to_string(MagnusForm f) { return f == MagnusForm::AsPrinted ? "printed" : "consistent"; }
const char* to_string(EpsMode m) { return m == EpsMode::Random ? "random" : "exhaustive"; }

namespace {

class Stopwatch {
 public:
  std::int64_t millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

using DetFn = std::function<Polynomial(const PolyMatrix&)>;

struct ResidualRun {
  Polynomial residual;
  std::optional<Polynomial> oracle_residual;  // set when the cross-check ran
};

ResidualRun compute_residual(const std::function<Polynomial(const DetFn&)>& expr, const SymbolicOptions& opts) {
  ResidualRun run;
  run.residual = expr([&](const PolyMatrix& m) { return det_dp(m, opts.limits); });
  if (opts.cross_check) {
    try {
      run.oracle_residual = expr([&](const PolyMatrix& m) { return det_perm_oracle(m, opts.limits); });
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeExceeded) throw;
    }
  }
  return run;
}

void finish_symbolic(VerificationReport& r, const ResidualRun& run, const json& matrices) {
  r.params["cross_checked"] = run.oracle_residual.has_value();
  const bool engines_agree = !run.oracle_residual || *run.oracle_residual == run.residual;
  r.status = run.residual.is_zero() && engines_agree ? Status::Pass : Status::Fail;
  if (r.passed()) return;
  r.residual = run.residual.to_string();
  json w;
  w["matrices"] = matrices;
  if (!engines_agree) {
    w["engine_mismatch"] = {{"det_dp", run.residual.to_string()},
                            {"det_perm_oracle", run.oracle_residual->to_string()}};
  }
  r.witness = std::move(w);
}

json matrices_json(const IdentityMatrices& m) {
  return {{"A", m.a.to_string()}, {"B", m.b.to_string()}, {"C", m.c.to_string()}};
}

void require_even(int n, IdentityId id) {
  if (n % 2 != 0 || n < 2) {
    throw Error(ErrorKind::OddSize, std::string(to_string(id)) + " needs even n >= 2, got " + std::to_string(n));
  }
}

std::vector<Mat2> sample(Generator g, Rng& rng, int count) {
  std::vector<Mat2> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out.push_back(random_sl2(g, rng));
  return out;
}

json mats_json(const std::vector<Mat2>& ms) {
  auto out = json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

VerificationReport make_report(std::string identity, std::optional<int> n, json params = json::object()) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.n = n;
  r.params = std::move(params);
  return r;
}

json numeric_params(int trials, std::uint64_t seed, Generator g) {
  return {{"trials", trials}, {"seed", seed}, {"generator", to_string(g)}};
}

}  // namespace

// ---------------------------------------------------------------------------
// Symbolic identities

VerificationReport verify_thm1(int n, const SymbolicOptions& opts) {
  Stopwatch clock;
  auto r = make_report("thm1", n);
  auto m = build_thm1(n);
  if (opts.flip_b) {
    m.b(opts.flip_b->row, opts.flip_b->col) = -m.b(opts.flip_b->row, opts.flip_b->col);
    r.params["mutation"] = {{"matrix", "B"}, {"row", opts.flip_b->row}, {"col", opts.flip_b->col}};
  }
  const Polynomial sign_n(n % 2 == 0 ? 1 : -1);
  auto run = compute_residual([&](const DetFn& det) { return det(m.a) - sign_n * det(m.b) - det(m.c); }, opts);
  finish_symbolic(r, run, matrices_json(m));
  r.millis = clock.millis();
  return r;
}

VerificationReport verify_thm3_family(int n, IdentityId which, const SymbolicOptions& opts) {
  Stopwatch clock;
  auto r = make_report(to_string(which), n);
  if (which == IdentityId::Thm1) throw Error(ErrorKind::InvalidCombination, "thm1 is not in the beta family");
  if (which == IdentityId::Cor6 || which == IdentityId::Thm7) require_even(n, which);
  IdentityFamily{which, n}.validate();

  auto m = build_thm3(n);
  if (opts.flip_b) {
    m.b(opts.flip_b->row, opts.flip_b->col) = -m.b(opts.flip_b->row, opts.flip_b->col);
    r.params["mutation"] = {{"matrix", "B"}, {"row", opts.flip_b->row}, {"col", opts.flip_b->col}};
  }
  ResidualRun run;
  switch (which) {
    case IdentityId::Thm3: {
      const Polynomial beta = Polynomial::beta();
      const Polynomial factor = Polynomial::a(1, 1) - Polynomial(2) * beta;
      const PolyMatrix inner = thm3_inner_matrix(n);
      r.params["beta"] = "symbolic";
      run = compute_residual(
          [&](const DetFn& det) { return det(m.a) - beta * (det(m.b) + det(m.c)) - factor * det(inner); }, opts);
      break;
    }
    case IdentityId::Cor5:
      m = apply_specialization(m, n, Specialization::Cor5);
      r.params["beta"] = 1;
      run = compute_residual([&](const DetFn& det) { return det(m.a) - det(m.b) - det(m.c); }, opts);
      break;
    case IdentityId::Cor6:
      m = apply_specialization(m, n, Specialization::Cor6);
      r.params["beta"] = -1;
      run = compute_residual([&](const DetFn& det) { return det(m.a) + det(m.b) + det(m.c); }, opts);
      break;
    case IdentityId::Thm7: {
      m = apply_specialization(m, n, Specialization::Cor6);
      const Substitution unit_lambda{{PolyVar::lambda(), Polynomial(1)}};
      m = {m.a.substitute(unit_lambda), m.b.substitute(unit_lambda), m.c.substitute(unit_lambda)};
      r.params["beta"] = -1;
      r.params["lambda"] = 1;
      const auto [pf_even, pf_odd] = pfaffian_split(m.a, opts.limits);
      const Polynomial pf_term = Polynomial(2) * pf_even * pf_odd;
      run = compute_residual([&](const DetFn& det) { return det(m.c) + pf_term; }, opts);
      break;
    }
    case IdentityId::Thm1:
      break;
  }
  finish_symbolic(r, run, matrices_json(m));
  r.millis = clock.millis();
  return r;
}

// ---------------------------------------------------------------------------
// Numeric trace identities

VerificationReport verify_magnus_numeric(int n, int trials, std::uint64_t master_seed, Generator generator,
                                         MagnusForm form) {
  Stopwatch clock;
  if (n < 1) throw Error(ErrorKind::InvalidCombination, "magnus needs n >= 1");
  auto r = make_report("magnus", n, numeric_params(trials, master_seed, generator));
  r.params["form"] = to_string(form);
  const GaussianRational sign_n(n % 2 == 0 ? 1 : -1);
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(master_seed, static_cast<std::uint64_t>(t)));
    auto m = sample(generator, rng, n);
    auto big_m = sample(generator, rng, n);
    auto mm = build_magnus_matrices(m, big_m);
    const auto da = exact_det(mm.a);
    const auto db = exact_det(mm.b);
    const auto dc = exact_det(mm.c);
    const auto rhs = form == MagnusForm::AsPrinted ? sign_n * db + dc : db + dc;
    std::vector<std::string> broken;
    if (!(da == rhs)) broken.emplace_back("three-determinant identity");
    if (n >= 4 && !da.is_zero()) broken.emplace_back("det A = 0");
    if (n >= 5 && !(db.is_zero() && dc.is_zero())) broken.emplace_back("det B = det C = 0");
    if (broken.empty()) continue;
    if (failures++ == 0) {
      r.witness = json{{"trial", t},
                       {"broken", broken},
                       {"m", mats_json(m)},
                       {"M", mats_json(big_m)},
                       {"det_A", to_json(da)},
                       {"det_B", to_json(db)},
                       {"det_C", to_json(dc)}};
    }
  }
  r.params["failed_trials"] = failures;
  r.status = failures == 0 ? Status::Pass : Status::Fail;
  r.millis = clock.millis();
  return r;
}

VerificationReport verify_magnus_original(int trials, std::uint64_t master_seed, Generator generator) {
  Stopwatch clock;
  auto r = make_report("magnus-original", 4, numeric_params(trials, master_seed, generator));
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(master_seed, static_cast<std::uint64_t>(t)));
    auto m = sample(generator, rng, 4);
    auto big_m = sample(generator, rng, 4);
    const auto mixed = exact_det(trace_matrix(m, big_m, false));
    const auto mixed_inv = exact_det(trace_matrix(m, big_m, true));
    const auto small = exact_det(trace_matrix(m, m, false));
    const auto large = exact_det(trace_matrix(big_m, big_m, false));
    std::vector<std::string> broken;
    if (!(mixed + mixed_inv).is_zero()) broken.emplace_back("additive");
    if (!(small * large == mixed * mixed)) broken.emplace_back("product");
    if (broken.empty()) continue;
    if (failures++ == 0) {
      r.witness = json{{"trial", t}, {"broken", broken}, {"m", mats_json(m)}, {"M", mats_json(big_m)}};
    }
  }
  r.params["failed_trials"] = failures;
  r.status = failures == 0 ? Status::Pass : Status::Fail;
  r.millis = clock.millis();
  return r;
}

namespace {

// Checks det D = 0 and a left kernel vector; returns a failure reason or "".
std::string check_vanishing(const ExactMatrix& d) {
  if (!exact_det(d).is_zero()) return "det D != 0";
  auto v = left_kernel(d);
  if (!v) return "no left kernel vector";
  for (const auto& x : row_times(*v, d)) {
    if (!x.is_zero()) return "v D != 0";
  }
  return {};
}

}  // namespace

VerificationReport verify_thm2(int n, int trials, std::uint64_t master_seed, EpsMode mode, Generator generator) {
  Stopwatch clock;
  if (n < 1) throw Error(ErrorKind::InvalidCombination, "thm2 needs n >= 1");
  auto r = make_report("thm2", n, numeric_params(trials, master_seed, generator));
  r.params["eps"] = to_string(mode);
  const bool asserted = n >= 5;
  r.params["asserted"] = asserted;
  const auto un = static_cast<std::size_t>(n);

  int failures = 0;
  int checked = 0;
  auto check = [&](const std::vector<Mat2>& m, const std::vector<Mat2>& big_m, const SignVector& eps, int trial) {
    const auto d = build_thm2_D(m, big_m, eps);
    ++checked;
    if (!asserted) {
      if (checked == 1) r.params["determinant"] = to_json(exact_det(d));
      return;
    }
    auto why = check_vanishing(d);
    if (why.empty()) return;
    if (failures++ == 0) {
      r.witness = json{{"trial", trial}, {"reason", why}, {"eps", eps}, {"D", to_json(d)},
                       {"m", mats_json(m)}, {"M", mats_json(big_m)}};
    }
  };

  if (mode == EpsMode::Exhaustive) {
    Rng rng(derive_seed(master_seed, 0));
    auto m = sample(generator, rng, n);
    auto big_m = sample(generator, rng, n);
    for (std::uint32_t bits = 0; bits < (1u << un); ++bits) {
      SignVector eps(un);
      for (std::size_t i = 0; i < un; ++i) eps[i] = (bits >> i) & 1u ? -1 : 1;
      check(m, big_m, eps, 0);
    }
  } else {
    for (int t = 0; t < trials; ++t) {
      Rng rng(derive_seed(master_seed, static_cast<std::uint64_t>(t)));
      auto m = sample(generator, rng, n);
      auto big_m = sample(generator, rng, n);
      SignVector eps(un);
      for (auto& e : eps) e = (rng() >> 63) ? -1 : 1;
      check(m, big_m, eps, t);
    }
  }
  r.params["instances"] = checked;
  r.params["failed_trials"] = failures;
  r.status = failures == 0 ? Status::Pass : Status::Fail;
  r.millis = clock.millis();
  return r;
}

VerificationReport verify_trace_relation(int trials, std::uint64_t master_seed, Generator generator) {
  Stopwatch clock;
  auto r = make_report("trace", std::nullopt, numeric_params(trials, master_seed, generator));
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(master_seed, static_cast<std::uint64_t>(t)));
    const Mat2 m = random_sl2(generator, rng);
    const Mat2 big_m = random_sl2(generator, rng);
    auto [lhs, rhs] = trace_relation_check(m, big_m);
    if (lhs == rhs) continue;
    if (failures++ == 0) {
      r.witness = json{{"trial", t}, {"m", to_json(m)}, {"M", to_json(big_m)}, {"lhs", to_json(lhs)},
                       {"rhs", to_json(rhs)}};
    }
  }
  r.params["failed_trials"] = failures;
  r.status = failures == 0 ? Status::Pass : Status::Fail;
  r.millis = clock.millis();
  return r;
}

}  // namespace traceid

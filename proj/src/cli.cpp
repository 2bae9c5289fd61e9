#include "traceid/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "traceid/error.hpp"

namespace traceid {

std::string render_report(const std::vector<VerificationReport>& reports, OutputFormat format, bool include_timing) {
  if (format == OutputFormat::Json) {
    auto arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json(include_timing));
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.passed() ? "PASS " : "FAIL ") << r.identity;
    if (r.n) os << " n=" << *r.n;
    if (include_timing) os << " (" << r.millis << " ms)";
    os << '\n';
    if (r.residual) os << "  residual: " << *r.residual << '\n';
    if (r.witness) os << "  witness: " << r.witness->dump() << '\n';
  }
  return os.str();
}

namespace {

struct Ranges {
  std::vector<int> thm1, thm3, cor5, even, numeric, thm2;
};

std::vector<int> span(int lo, int hi, int step = 1) {
  std::vector<int> out;
  for (int k = lo; k <= hi; k += step) out.push_back(k);
  return out;
}

Ranges ranges_for(const CliConfig& c) {
  if (c.n) {
    const int n = *c.n;
    return {{n}, {n}, {n}, {n}, {n}, {n}};
  }
  return {span(0, c.max_n), span(1, c.max_n), span(2, c.max_n), span(2, c.max_n, 2), span(1, c.max_n),
          span(5, c.max_n)};
}

// Rejects combinations the engines would refuse, before anything runs.
void validate(const CliConfig& c) {
  auto usage = [](const std::string& why) { throw CLI::ValidationError(why); };
  if (c.target == "all" && c.n) usage("--n cannot be combined with 'all'; use --max-n");
  if (c.max_n < 0) usage("--max-n must be non-negative");
  if (c.trials < 1) usage("--trials must be positive");
  if (c.n && *c.n < 0) usage("--n must be non-negative");
  const Ranges r = ranges_for(c);
  const auto dp = static_cast<int>(c.limits.det_dp_max);
  const auto pf = static_cast<int>(c.limits.pfaffian_max);
  auto each = [](const std::vector<int>& ns, auto&& fn) {
    for (int n : ns) fn(n);
  };
  const auto& t = c.target;
  if (t == "thm1" || t == "all") {
    each(r.thm1, [&](int n) {
      if (n + 1 > dp) usage("thm1 n=" + std::to_string(n) + " exceeds the determinant bound");
    });
  }
  if (t == "thm3" || t == "cor5" || t == "all") {
    each(t == "cor5" ? r.cor5 : r.thm3, [&](int n) {
      if (n < 1) usage(t + " needs n >= 1");
      if (n > dp) usage(t + " n=" + std::to_string(n) + " exceeds the determinant bound");
    });
  }
  if (t == "cor6" || t == "thm7" || t == "all") {
    each(r.even, [&](int n) {
      if (n < 2 || n % 2 != 0) usage(t + " needs even n >= 2");
      if (n > dp || n > pf) usage(t + " n=" + std::to_string(n) + " exceeds the size bound");
    });
  }
  if (t == "magnus" && r.numeric.front() < 1) usage("magnus needs n >= 1");
  if (t == "thm2" && c.n && *c.n < 1) usage("thm2 needs n >= 1");
  if (t == "thm2" && c.eps == EpsMode::Exhaustive && c.n && *c.n > 20) usage("exhaustive sweep limited to n <= 20");
}

}  // namespace

std::vector<VerificationReport> run_config(const CliConfig& c) {
  validate(c);
  const Ranges r = ranges_for(c);
  SymbolicOptions sym;
  sym.limits = c.limits;
  std::vector<VerificationReport> out;
  const auto& t = c.target;
  const bool all = t == "all";

  if (all || t == "thm1") {
    for (int n : r.thm1) out.push_back(verify_thm1(n, sym));
  }
  if (all || t == "thm3") {
    for (int n : r.thm3) out.push_back(verify_thm3_family(n, IdentityId::Thm3, sym));
  }
  if (all || t == "cor5") {
    for (int n : r.cor5) out.push_back(verify_thm3_family(n, IdentityId::Cor5, sym));
  }
  if (all || t == "cor6") {
    for (int n : r.even) out.push_back(verify_thm3_family(n, IdentityId::Cor6, sym));
  }
  if (all || t == "thm7") {
    for (int n : r.even) out.push_back(verify_thm3_family(n, IdentityId::Thm7, sym));
  }
  if (all || t == "magnus") {
    for (int n : r.numeric) out.push_back(verify_magnus_numeric(n, c.trials, c.seed, c.generator, c.magnus_form));
  }
  if (all || t == "magnus-original") out.push_back(verify_magnus_original(c.trials, c.seed, c.generator));
  if (all || t == "thm2") {
    for (int n : r.thm2) out.push_back(verify_thm2(n, c.trials, c.seed, c.eps, c.generator));
  }
  if (all || t == "trace") out.push_back(verify_trace_relation(c.trials, c.seed, c.generator));
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Exact verification of determinant, Pfaffian and SL(2) trace identities", "traceid"};
  app.require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("target", config.target, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm3", "cor5", "cor6", "thm7", "magnus", "magnus-original", "thm2", "trace",
                             "all"}));
  verify->add_option("--n", config.n, "Single size parameter");
  verify->add_option("--max-n", config.max_n, "Upper end of the default size ranges")->capture_default_str();
  verify->add_option("--trials", config.trials, "Random trials per numeric check")->capture_default_str();
  verify->add_option("--seed", config.seed, "Master seed")->capture_default_str();
  verify->add_option("--generator", config.generator, "Random SL(2) generator")
      ->option_text("sl2z|gaussian [sl2z]")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Generator>{{"sl2z", Generator::SL2Z},
                                                                           {"gaussian", Generator::Gaussian}}));
  verify->add_option("--eps", config.eps, "Sign vectors for thm2")
      ->option_text("random|exhaustive [random]")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, EpsMode>{{"random", EpsMode::Random}, {"exhaustive", EpsMode::Exhaustive}}));
  verify->add_option("--magnus-form", config.magnus_form, "Sign form of the three-determinant identity")
      ->option_text("printed|consistent [printed]")
      ->transform(CLI::CheckedTransformer(std::map<std::string, MagnusForm>{
          {"printed", MagnusForm::AsPrinted}, {"consistent", MagnusForm::SignConsistent}}));
  verify->add_option("--format", config.format, "Output format")
      ->option_text("text|json [text]")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"text", OutputFormat::Text}, {"json", OutputFormat::Json}}));
  verify->add_option("--out", config.out_path, "Write the report to PATH instead of stdout");
  verify->add_option("--dp-bound", config.limits.det_dp_max, "Largest size for the subset-DP determinant")
      ->capture_default_str();
  verify->add_option("--perm-bound", config.limits.det_perm_max, "Largest size for the permutation oracle")
      ->capture_default_str();
  verify->add_option("--pf-bound", config.limits.pfaffian_max, "Largest size for Pfaffians")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::vector<VerificationReport> reports;
  try {
    app.parse(reversed);
    reports = run_config(config);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string text = render_report(reports, config.format);
  if (config.out_path) {
    std::ofstream file(*config.out_path);
    if (!file) {
      err << "error: cannot open " << *config.out_path << '\n';
      return 2;
    }
    file << text;
  } else {
    out << text;
  }
  for (const auto& r : reports) {
    if (!r.passed()) return 1;
  }
  return 0;
}

}  // namespace traceid

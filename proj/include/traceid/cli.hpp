#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "traceid/verify.hpp"

namespace traceid {

enum class OutputFormat { Text, Json };

struct CliConfig {
  std::string target;  // thm1 | thm3 | cor5 | cor6 | thm7 | magnus | magnus-original | thm2 | trace | all
  std::optional<int> n;
  int max_n = 6;
  int trials = 100;
  std::uint64_t seed = 1;
  Generator generator = Generator::SL2Z;
  EpsMode eps = EpsMode::Random;
  MagnusForm magnus_form = MagnusForm::AsPrinted;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> out_path;
  EngineLimits limits;
};

/// Renders reports one per line (text) or as a JSON array.
std::string render_report(const std::vector<VerificationReport>& reports, OutputFormat format,
                          bool include_timing = true);

/// Runs the verifications selected by a validated config.
std::vector<VerificationReport> run_config(const CliConfig& config);

/// Entry point. args excludes the program name. Returns 0 when every
/// report passes, 1 on any failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace traceid

#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qvoa/check.hpp"
#include "qvoa/lie.hpp"
#include "qvoa/scalar.hpp"

namespace qvoa {

inline constexpr int kSchemaVersion = 1;

// Bad flags or an impossible flag combination; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { kJson, kCsv, kText };

OutputFormat parse_format(std::string_view text);
// "symbolic" -> nullopt, otherwise an exact rational.
std::optional<Rational> parse_r(std::string_view text);

struct RunConfig {
  std::string command;
  int d = 1;
  std::optional<Rational> r;  // nullopt: symbolic
  int max_weight = 4;
  OutputFormat format = OutputFormat::kJson;
  std::string out_path;  // empty: stdout
  int jobs = 1;
  BracketFault fault = BracketFault::kNone;

  void validate() const;
};

struct Report {
  RunConfig config;
  VerificationReport verification;
  nlohmann::ordered_json tables = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, long long>> timings_ms;

  bool passed() const { return verification.passed(); }
  int exit_code() const { return passed() ? 0 : 1; }
};

Report cmd_verify(const RunConfig& config);
Report cmd_dims(const RunConfig& config);
Report cmd_griess(const RunConfig& config);
Report cmd_gram(const RunConfig& config);
Report cmd_radical(const RunConfig& config);
Report cmd_auto(const RunConfig& config);

// Dispatches on config.command. Throws UsageError for unknown commands or invalid config.
Report run_command(const RunConfig& config);

// Deterministic for a fixed config; everything run-dependent (jobs, timings) sits under "run".
nlohmann::ordered_json to_json(const Report& report);

// Throws UsageError for combinations without a defined rendering (Gram matrices as CSV).
std::string render(const Report& report, OutputFormat format);

}  // namespace qvoa

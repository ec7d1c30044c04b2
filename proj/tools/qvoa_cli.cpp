// Command-line front end: qvoa <verify|dims|griess|gram|radical|auto> [flags]
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qvoa/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the deformed quadratic Heisenberg VOA and its Griess algebra"};
  app.require_subcommand(1);

  qvoa::RunConfig config;
  std::string r_text = "symbolic";
  std::string format_text = "json";
  bool inject_fault = false;

  app.add_option("--d", config.d, "dimension of H (d >= 1)")->capture_default_str();
  app.add_option("--r", r_text, "central charge parameter: 'symbolic' or an exact rational p/q")
      ->capture_default_str();
  app.add_option("--max-weight", config.max_weight, "largest weight W (W >= 2)")->capture_default_str();
  app.add_option("--format", format_text, "json, csv or text")->capture_default_str();
  app.add_option("--out", config.out_path, "write the report here instead of stdout");
  app.add_option("--jobs", config.jobs, "worker threads for verification sweeps")->capture_default_str();
  app.add_flag("--inject-fault", inject_fault, "corrupt the central term of the bracket")->group("");

  const char* commands[][2] = {
      {"verify", "run every identity check"},
      {"dims", "graded dimensions of M_r and V_J"},
      {"griess", "Griess algebra structure constants and the Jordan isomorphism"},
      {"gram", "Gram matrices of the invariant form per weight"},
      {"radical", "nullity of the invariant form per weight at numeric r"},
      {"auto", "orthogonal-group automorphism checks"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->fallthrough()->callback([&config, name = std::string(name)] {
      config.command = name;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    config.r = qvoa::parse_r(r_text);
    config.format = qvoa::parse_format(format_text);
    if (inject_fault) config.fault = qvoa::BracketFault::kDoubledCentralTerm;
    const qvoa::Report report = qvoa::run_command(config);
    const std::string text = qvoa::render(report, config.format);
    if (config.out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) throw qvoa::UsageError("cannot open --out path '" + config.out_path + "'");
      file << text;
    }
    if (!report.passed()) {
      if (const auto* failure = report.verification.first_failure()) {
        std::cerr << "verification failed: " << failure->name << ": " << *failure->witness << '\n';
      }
    }
    return report.exit_code();
  } catch (const qvoa::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }
}

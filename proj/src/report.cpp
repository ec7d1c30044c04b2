#include "qvoa/report.hpp"

#include <chrono>
#include <sstream>

#include "qvoa/jordan.hpp"
#include "qvoa/voa.hpp"

namespace qvoa {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "text") return OutputFormat::kText;
  throw UsageError("unknown format '" + std::string(text) + "' (expected json, csv or text)");
}

std::optional<Rational> parse_r(std::string_view text) {
  if (text == "symbolic") return std::nullopt;
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--r: ") + e.what());
  }
}

void RunConfig::validate() const {
  if (d < 1) throw UsageError("--d must be at least 1");
  if (max_weight < 2) throw UsageError("--max-weight must be at least 2");
  if (jobs < 1) throw UsageError("--jobs must be at least 1");
  if (command == "radical" && !r) throw UsageError("radical needs a numeric --r");
}

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(Report& report) : report_(report) {}
  template <class F>
  auto time(const std::string& label, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report_.timings_ms.emplace_back(label, std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    return result;
  }

 private:
  Report& report_;
};

Report start(const RunConfig& config) {
  config.validate();
  Report report;
  report.config = config;
  return report;
}

FockSpace make_space(const RunConfig& config) { return FockSpace(DeformedLieAlgebra(config.d, config.fault)); }

ordered_json scalars_json(const std::vector<Scalar>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

ordered_json matrix_json(const ScalarMatrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(scalars_json(m.row(i)));
  return out;
}

std::string pair_label(std::pair<int, int> p) {
  return "w^" + std::to_string(p.first) + std::to_string(p.second);
}

ordered_json griess_json(const GriessTable& table) {
  ordered_json labels = ordered_json::array();
  for (const auto& p : table.labels) labels.push_back(pair_label(p));
  ordered_json products = ordered_json::array();
  for (std::size_t a = 0; a < table.size(); ++a) {
    for (std::size_t b = 0; b < table.size(); ++b) {
      ordered_json row = ordered_json::object();
      row["left"] = pair_label(table.labels[a]);
      row["right"] = pair_label(table.labels[b]);
      std::vector<Scalar> coords;
      for (std::size_t c = 0; c < table.size(); ++c) coords.push_back(table.constant(a, b, c));
      row["product"] = scalars_json(coords);
      products.push_back(std::move(row));
    }
  }
  ordered_json out = ordered_json::object();
  out["basis"] = std::move(labels);
  out["products"] = std::move(products);
  return out;
}

std::string r_string(const std::optional<Rational>& r) { return r ? to_string(*r) : "symbolic"; }

VerificationReport tagged(VerificationReport report, const OrthogonalMatrix& q) {
  for (auto& c : report.checks) c.name += "[Q=" + q.to_string() + "]";
  return report;
}

}  // namespace

Report cmd_verify(const RunConfig& config) {
  Report report = start(config);
  Stopwatch watch(report);
  const FockSpace space = make_space(config);
  const int w = config.max_weight;
  const int jobs = config.jobs;
  auto& checks = report.verification;

  checks.append(watch.time("commutators", [&] { return verify_commutators(space, w, jobs); }));
  checks.append(watch.time("locality", [&] { return verify_locality(space, w, jobs); }));
  checks.append(watch.time("grading_translation", [&] { return verify_grading_and_translation(space, w, jobs); }));
  checks.append(watch.time("quasi_primary", [&] { return quasi_primary_check(space); }));

  const GriessTable table = watch.time("griess", [&] { return griess_table(space); });
  checks.append(verify_griess_table(table, config.d));
  checks.append(check_isomorphism(space, table));

  const Scalar c = watch.time("central_charge", [&] { return central_charge(space); });
  const Scalar expected = Scalar(config.d) * Scalar::r();
  CheckResult charge{"central_charge.equals_dr", 1, std::nullopt};
  if (c != expected) charge.witness = "central charge " + c.to_string() + ", expected " + expected.to_string();
  checks.checks.push_back(charge);
  report.tables["central_charge"] = c.to_string();
  if (config.r) report.tables["central_charge_at_r"] = to_string(c.specialize(*config.r));

  watch.time("automorphisms", [&] {
    for (const auto& q : builtin_orthogonal_matrices(config.d)) checks.append(tagged(verify_automorphism(q, space, w, jobs), q));
    return 0;
  });
  return report;
}

Report cmd_dims(const RunConfig& config) {
  Report report = start(config);
  Stopwatch watch(report);
  const FockSpace space = make_space(config);
  const GradedSubspace subspace = watch.time("saturate", [&] { return saturate(space, config.max_weight); });
  const auto dims = subspace.dims();
  ordered_json rows = ordered_json::array();
  for (int n = 0; n <= config.max_weight; ++n) {
    ordered_json row = ordered_json::object();
    row["weight"] = n;
    row["dim_M"] = space.basis_of_weight(n).size();
    row["dim_VJ"] = dims[static_cast<std::size_t>(n)];
    rows.push_back(std::move(row));
  }
  report.tables["dimensions"] = std::move(rows);

  CheckResult low{"dims.theorem_low_weights", 1, std::nullopt};
  const std::size_t expected2 = static_cast<std::size_t>(config.d * (config.d + 1) / 2);
  if (dims[0] != 1 || dims[1] != 0 || dims[2] != expected2) {
    low.witness = "dims at weights 0,1,2 are " + std::to_string(dims[0]) + "," + std::to_string(dims[1]) + "," +
                  std::to_string(dims[2]);
  }
  report.verification.checks.push_back(low);
  return report;
}

Report cmd_griess(const RunConfig& config) {
  Report report = start(config);
  Stopwatch watch(report);
  const FockSpace space = make_space(config);
  const GriessTable table = watch.time("griess", [&] { return griess_table(space); });
  report.verification.append(verify_griess_table(table, config.d));
  report.verification.append(check_isomorphism(space, table));
  report.tables["griess"] = griess_json(table);
  return report;
}

Report cmd_gram(const RunConfig& config) {
  Report report = start(config);
  Stopwatch watch(report);
  const FockSpace space = make_space(config);
  const GradedSubspace subspace = watch.time("saturate", [&] { return saturate(space, config.max_weight); });
  ordered_json grams = ordered_json::array();
  CheckResult symmetric{"gram.symmetric", 0, std::nullopt};
  watch.time("gram", [&] {
    for (int n = 0; n <= config.max_weight; ++n) {
      const GramData gram = gram_matrix(space, subspace, n, config.r);
      ++symmetric.cases;
      if (!symmetric.witness && !gram.matrix.is_symmetric()) {
        symmetric.witness = "Gram matrix at weight " + std::to_string(n) + " is not symmetric";
      }
      ordered_json entry = ordered_json::object();
      entry["weight"] = n;
      ordered_json labels = ordered_json::array();
      for (const auto& w : gram.labels) labels.push_back(w.to_string());
      entry["basis"] = std::move(labels);
      entry["matrix"] = matrix_json(gram.matrix);
      entry["determinant"] = determinant(gram.matrix).to_string();
      grams.push_back(std::move(entry));
    }
    return 0;
  });
  report.verification.checks.push_back(symmetric);
  report.tables["gram"] = std::move(grams);
  return report;
}

Report cmd_radical(const RunConfig& config) {
  Report report = start(config);
  Stopwatch watch(report);
  const FockSpace space = make_space(config);
  const GradedSubspace subspace = watch.time("saturate", [&] { return saturate(space, config.max_weight); });
  ordered_json rows = ordered_json::array();
  watch.time("radical", [&] {
    for (int n = 0; n <= config.max_weight; ++n) {
      ordered_json row = ordered_json::object();
      row["weight"] = n;
      row["dim_VJ"] = subspace.by_weight[static_cast<std::size_t>(n)].size();
      row["nullity"] = radical_dimension(space, subspace, n, *config.r);
      rows.push_back(std::move(row));
    }
    return 0;
  });
  report.tables["radical"] = std::move(rows);
  return report;
}

Report cmd_auto(const RunConfig& config) {
  Report report = start(config);
  Stopwatch watch(report);
  const FockSpace space = make_space(config);
  ordered_json matrices = ordered_json::array();
  watch.time("automorphisms", [&] {
    for (const auto& q : builtin_orthogonal_matrices(config.d)) {
      matrices.push_back(q.to_string());
      report.verification.append(tagged(verify_automorphism(q, space, config.max_weight, config.jobs), q));
    }
    return 0;
  });
  report.tables["orthogonal_matrices"] = std::move(matrices);
  return report;
}

Report run_command(const RunConfig& config) {
  if (config.command == "verify") return cmd_verify(config);
  if (config.command == "dims") return cmd_dims(config);
  if (config.command == "griess") return cmd_griess(config);
  if (config.command == "gram") return cmd_gram(config);
  if (config.command == "radical") return cmd_radical(config);
  if (config.command == "auto") return cmd_auto(config);
  throw UsageError("unknown command '" + config.command + "'");
}

ordered_json to_json(const Report& report) {
  ordered_json out = ordered_json::object();
  out["schema_version"] = kSchemaVersion;
  out["command"] = report.config.command;
  ordered_json config = ordered_json::object();
  config["d"] = report.config.d;
  config["r"] = r_string(report.config.r);
  config["max_weight"] = report.config.max_weight;
  out["config"] = std::move(config);
  out["status"] = report.passed() ? "pass" : "fail";
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.verification.checks) {
    ordered_json entry = ordered_json::object();
    entry["name"] = c.name;
    entry["status"] = c.passed() ? "pass" : "fail";
    entry["cases"] = c.cases;
    entry["witness"] = c.witness ? ordered_json(*c.witness) : ordered_json(nullptr);
    checks.push_back(std::move(entry));
  }
  out["checks"] = std::move(checks);
  out["tables"] = report.tables;
  ordered_json run = ordered_json::object();
  run["jobs"] = report.config.jobs;
  ordered_json timings = ordered_json::object();
  for (const auto& [label, ms] : report.timings_ms) timings[label] = ms;
  run["timings_ms"] = std::move(timings);
  out["run"] = std::move(run);
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Report& report) {
  std::ostringstream out;
  const auto& command = report.config.command;
  if (command == "gram") throw UsageError("Gram matrices are emitted as JSON or text only");
  if (command == "dims") {
    out << "weight,dim_M,dim_VJ\n";
    for (const auto& row : report.tables["dimensions"]) {
      out << row["weight"].get<int>() << ',' << row["dim_M"].get<std::size_t>() << ','
          << row["dim_VJ"].get<std::size_t>() << '\n';
    }
    return out.str();
  }
  if (command == "radical") {
    out << "weight,dim_VJ,nullity\n";
    for (const auto& row : report.tables["radical"]) {
      out << row["weight"].get<int>() << ',' << row["dim_VJ"].get<std::size_t>() << ','
          << row["nullity"].get<std::size_t>() << '\n';
    }
    return out.str();
  }
  out << "check,status,cases,witness\n";
  for (const auto& c : report.verification.checks) {
    out << csv_field(c.name) << ',' << (c.passed() ? "pass" : "fail") << ',' << c.cases << ','
        << csv_field(c.witness.value_or("")) << '\n';
  }
  return out.str();
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  const auto& cfg = report.config;
  out << cfg.command << ": d=" << cfg.d << " r=" << r_string(cfg.r) << " max_weight=" << cfg.max_weight << '\n';
  for (const auto& c : report.verification.checks) {
    out << "  [" << (c.passed() ? "pass" : "FAIL") << "] " << c.name << " (" << c.cases << " cases)";
    if (c.witness) out << "\n      witness: " << *c.witness;
    out << '\n';
  }
  for (const auto& [key, value] : report.tables.items()) {
    if (value.is_array()) {
      out << "  " << key << ":\n";
      for (const auto& row : value) out << "    " << row.dump() << '\n';
    } else if (value.is_string()) {
      out << "  " << key << ": " << value.get<std::string>() << '\n';
    } else {
      out << "  " << key << ": " << value.dump() << '\n';
    }
  }
  out << (report.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return to_json(report).dump(2) + "\n";
    case OutputFormat::kCsv:
      return render_csv(report);
    case OutputFormat::kText:
      return render_text(report);
  }
  return {};
}

}  // namespace qvoa

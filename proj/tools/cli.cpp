#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "akr/akr.hpp"
#include "akr/asymptotics.hpp"
#include "akr/catalog.hpp"
#include "akr/errors.hpp"
#include "akr/tensor.hpp"
#include "akr/verification.hpp"

namespace akr::cli {

namespace {

using json = nlohmann::json;

constexpr double kLemmaFloor = -1e-13;

// ---------------------------------------------------------------------------
// Report tables

using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  Table rows;
  std::optional<Table> summary;
  int exit_code = kSuccess;
};

std::string format_double(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

std::string csv_field(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string quoted = "\"";
          for (const char c : v) {
            if (c == '"') quoted += '"';
            quoted += c;
          }
          return quoted + "\"";
        }
      },
      cell);
}

json json_value(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else {
          return v;
        }
      },
      cell);
}

void write_csv_table(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
}

json json_rows(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = json_value(row[i]);
    rows.push_back(std::move(obj));
  }
  return rows;
}

Cell optional_cell(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

// ---------------------------------------------------------------------------
// Configuration

json config_json(const RunConfig& c) {
  json j = {{"command", c.command}, {"n", c.n},          {"n0", c.n0},
            {"doublings", c.doublings}, {"j", c.j},      {"kind", c.kind},
            {"fn", c.fn_name},     {"point", c.point},   {"format", c.format},
            {"tolerance", c.tolerance}};
  j["out"] = c.output_path ? json(*c.output_path) : json(nullptr);
  return j;
}

struct CommandFlags {
  bool n = false;
  bool j = false;
  bool kind = false;
  bool fn = false;
  bool point = false;
  bool schedule = false;
  bool tolerance = false;
};

CommandFlags flags_for(const std::string& command) {
  if (command == "nodes") return {.n = true, .j = true};
  if (command == "eval") return {.n = true, .j = true, .kind = true, .fn = true, .point = true};
  if (command == "residual") {
    return {.j = true, .kind = true, .fn = true, .point = true, .schedule = true,
            .tolerance = true};
  }
  if (command == "lemma") return {.point = true, .schedule = true, .tolerance = true};
  if (command == "decompose") return {.fn = true, .point = true, .schedule = true};
  return {};
}

const std::vector<std::string> kCommands{"nodes", "eval", "residual", "lemma", "decompose",
                                         "verify"};

std::string command_description(const std::string& c) {
  if (c == "nodes") return "Print the AKR node table t_{n,k}^j";
  if (c == "eval") return "Evaluate one operator at a point";
  if (c == "residual") return "Residual series n(Op_n f - f) and its extrapolated limit";
  if (c == "lemma") return "Series n sum p_{n,k}(x) R(n,k) and the vanishing-limit verdict";
  if (c == "decompose") return "E/F/G split of n(B_{n,2}^[2] f - B_n^[2] f) over a schedule";
  return "Run the full verification suite";
}

// ---------------------------------------------------------------------------
// Commands

const CatalogEntry& entry_for(const RunConfig& c, std::optional<CatalogEntry>& storage) {
  storage = lookup(c.fn_name);
  return *storage;
}

double require_1d_point(const RunConfig& c) {
  if (c.point.size() != 1) {
    throw ArgumentError(c.command + ": this operator needs exactly one coordinate (--point X)");
  }
  return c.point[0];
}

SquarePoint require_2d_point(const RunConfig& c) {
  if (c.point.size() != 2) {
    throw ArgumentError(c.command + ": this operator needs two coordinates (--point X Y)");
  }
  return {c.point[0], c.point[1]};
}

Report nodes_report(const RunConfig& c) {
  const NodeTable table = build_node_table(c.n, c.j);
  Report r;
  r.rows.columns = {"k", "t"};
  for (int k = 0; k <= c.n; ++k) r.rows.rows.push_back({Cell{static_cast<long long>(k)}, table[k]});
  return r;
}

Report eval_report(const RunConfig& c) {
  const OperatorKind kind = parse_operator_kind(c.kind);
  double value = 0.0;
  double x = 0.0;
  Cell y;
  if (kind == OperatorKind::lemma_sum) {
    x = require_1d_point(c);
    value = lemma_sum(c.n, x);
  } else {
    std::optional<CatalogEntry> storage;
    const CatalogEntry& entry = entry_for(c, storage);
    if (is_two_dimensional(kind)) {
      const SquarePoint p = require_2d_point(c);
      const Function2D& f = entry.function2d();
      x = p.x();
      y = p.y();
      switch (kind) {
        case OperatorKind::bernstein_2d: value = tensor_bernstein_apply(f, c.n, p); break;
        case OperatorKind::akr_2d: value = tensor_akr_apply(f, c.n, c.j, p); break;
        default: value = tensor_akr_minus_bernstein(f, c.n, c.j, p); break;
      }
    } else {
      x = require_1d_point(c);
      const Function1D& f = entry.function1d();
      value = kind == OperatorKind::akr_1d ? akr_apply(f, c.n, c.j, x) : bernstein_apply(f, c.n, x);
    }
  }
  Report r;
  r.rows.columns = {"kind", "fn", "n", "j", "x", "y", "value"};
  r.rows.rows.push_back({Cell{c.kind}, Cell{kind == OperatorKind::lemma_sum ? "" : c.fn_name},
                         Cell{static_cast<long long>(c.n)}, Cell{static_cast<long long>(c.j)},
                         Cell{x}, y, Cell{value}});
  return r;
}

void add_series_rows(Table& t, const ConvergenceSeries& s) {
  t.columns = {"n", "value", "diff", "rate_estimate"};
  const std::vector<double> values = series_values(s);
  const auto rates = successive_rates(values);
  for (std::size_t m = 0; m < values.size(); ++m) {
    const Cell diff = m == 0 ? Cell{} : Cell{values[m] - values[m - 1]};
    t.rows.push_back(
        {Cell{static_cast<long long>(s.entries[m].n)}, Cell{values[m]}, diff, optional_cell(rates[m])});
  }
}

std::string verdict_text(std::optional<bool> pass) {
  if (!pass) return "N/A";
  return *pass ? "PASS" : "FAIL";
}

Report residual_report(const RunConfig& c) {
  const OperatorKind kind = parse_operator_kind(c.kind);
  const Schedule schedule{c.n0, c.doublings};
  std::optional<ConvergenceSeries> series;
  std::optional<double> target;
  if (kind == OperatorKind::lemma_sum) {
    series = lemma_series(require_1d_point(c), schedule);
    target = 0.0;
  } else {
    std::optional<CatalogEntry> storage;
    const CatalogEntry& entry = entry_for(c, storage);
    const SeriesOptions options{c.j, TensorPath::automatic};
    if (is_two_dimensional(kind)) {
      const SquarePoint p = require_2d_point(c);
      series = residual_series(kind, entry.function2d(), p, schedule, options);
      target = expected_limit(kind, entry.function2d(), p, c.j);
    } else {
      const double x = require_1d_point(c);
      series = residual_series(kind, entry.function1d(), x, schedule, options);
      target = expected_limit(kind, entry.function1d(), x, c.j);
    }
  }
  const ExtrapolationResult result = extrapolate(*series);
  std::optional<bool> pass;
  if (target) {
    pass = kind == OperatorKind::lemma_sum
               ? std::abs(result.limit_estimate) <= c.tolerance
               : within_relative(result.limit_estimate, *target, c.tolerance);
  }

  Report r;
  add_series_rows(r.rows, *series);
  r.summary = Table{{"limit_estimate", "rate_estimate", "residual_tail", "monotone_tail", "target",
                     "verdict"},
                    {{Cell{result.limit_estimate}, optional_cell(result.rate_estimate),
                      Cell{result.residual_tail}, Cell{result.monotone_tail},
                      optional_cell(target), Cell{verdict_text(pass)}}}};
  r.exit_code = pass.value_or(true) ? kSuccess : kVerdictFailed;
  return r;
}

Report lemma_report(const RunConfig& c) {
  const ConvergenceSeries series = lemma_series(require_1d_point(c), {c.n0, c.doublings});
  const ExtrapolationResult result = extrapolate(series);
  double smallest = series.entries.front().value;
  for (const auto& e : series.entries) smallest = std::min(smallest, e.value);
  const bool pass = smallest >= kLemmaFloor && std::abs(result.limit_estimate) <= c.tolerance;

  Report r;
  add_series_rows(r.rows, series);
  r.summary = Table{{"limit_estimate", "rate_estimate", "residual_tail", "monotone_tail",
                     "min_value", "verdict"},
                    {{Cell{result.limit_estimate}, optional_cell(result.rate_estimate),
                      Cell{result.residual_tail}, Cell{result.monotone_tail}, Cell{smallest},
                      Cell{verdict_text(pass)}}}};
  r.exit_code = pass ? kSuccess : kVerdictFailed;
  return r;
}

Report decompose_report(const RunConfig& c) {
  std::optional<CatalogEntry> storage;
  const Function2D& f = entry_for(c, storage).function2d();
  const SquarePoint p = require_2d_point(c);
  const Schedule schedule{c.n0, c.doublings};
  if (c.n0 < 2 || c.doublings < 0 || c.doublings > 24) {
    throw DomainError("decompose needs n0 >= 2 and 0 <= doublings <= 24");
  }
  Report r;
  r.rows.columns = {"n", "e_term", "f_term", "g_residual", "total", "g_bound"};
  std::optional<bool> within_bound;
  for (const int n : schedule.degrees()) {
    const Decomposition d = decomposition(f, n, p);
    const std::optional<double> bound = g_residual_bound(f, n);
    if (bound) within_bound = within_bound.value_or(true) && std::abs(d.g_residual) <= *bound;
    r.rows.rows.push_back({Cell{static_cast<long long>(n)}, Cell{d.e_term}, Cell{d.f_term},
                           Cell{d.g_residual}, Cell{d.total}, optional_cell(bound)});
  }
  r.summary = Table{{"verdict"}, {{Cell{verdict_text(within_bound)}}}};
  r.exit_code = within_bound.value_or(true) ? kSuccess : kVerdictFailed;
  return r;
}

Report verify_report(const RunConfig&, std::ostream& err) {
  const auto results = run_verification_suite({}, [&err](const CriterionResult& cr) {
    err << "[" << (cr.passed ? "PASS" : "FAIL") << "] " << cr.id << ". " << cr.name << " ("
        << cr.seconds << " s)\n";
  });
  Report r;
  r.rows.columns = {"id", "criterion", "passed", "seconds", "time_limit", "detail"};
  long long passed = 0;
  for (const auto& cr : results) {
    passed += cr.passed ? 1 : 0;
    r.rows.rows.push_back({Cell{static_cast<long long>(cr.id)}, Cell{cr.name}, Cell{cr.passed},
                           Cell{cr.seconds}, Cell{cr.time_limit_seconds}, Cell{cr.detail}});
  }
  const bool all = passed == static_cast<long long>(results.size());
  r.summary = Table{{"passed", "total", "verdict"},
                    {{Cell{passed}, Cell{static_cast<long long>(results.size())},
                      Cell{verdict_text(all)}}}};
  r.exit_code = all ? kSuccess : kVerdictFailed;
  return r;
}

void write_report(std::ostream& os, const RunConfig& c, const Report& r) {
  if (c.format == "json") {
    json doc = {{"command", c.command}, {"config", config_json(c)}, {"rows", json_rows(r.rows)}};
    if (r.summary) {
      const json rows = json_rows(*r.summary);
      doc["summary"] = rows.empty() ? json::object() : rows.front();
    } else {
      doc["summary"] = nullptr;
    }
    os << doc.dump(2) << '\n';
    return;
  }
  write_csv_table(os, r.rows);
  if (r.summary) {
    os << '\n';
    write_csv_table(os, *r.summary);
  }
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

bool wants_json(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format=json") return true;
    if (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json") return true;
  }
  return false;
}

void report_error(std::ostream& err, bool json_mode, const std::string& type,
                  const std::string& message) {
  if (json_mode) {
    err << json{{"error", {{"type", type}, {"message", message}}}}.dump() << '\n';
  } else {
    err << "error: " << message << '\n';
  }
}

}  // namespace

RunConfig parse_arguments(const std::vector<std::string>& args, std::string* help_text) {
  CLI::App app{"Bernstein and AKR operators: node tables, residual series "
               "and Voronovskaja-type limit checks",
               "akrops"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<double> point;
  std::optional<double> x;
  std::optional<double> y;
  std::string out_path;

  for (const auto& name : kCommands) {
    CLI::App* sub = app.add_subcommand(name, command_description(name));
    const CommandFlags flags = flags_for(name);
    if (flags.n) sub->add_option("--n", config.n, "Degree n")->capture_default_str();
    if (flags.j) sub->add_option("--j", config.j, "AKR order j (>= 2)")->capture_default_str();
    if (flags.kind) {
      sub->add_option("--kind", config.kind,
                      "bernstein-1d | akr-1d | bernstein-2d | akr-2d | "
                      "akr-minus-bernstein-2d | lemma-sum")
          ->capture_default_str();
    }
    if (flags.fn) {
      sub->add_option("--fn", config.fn_name,
                      "Catalog function: const1 e1 e2 e3 monomial(p,q) exp-sum "
                      "sinpix-cospiy runge-2d")
          ->capture_default_str();
    }
    if (flags.point) {
      auto* p = sub->add_option("--point", point, "Evaluation point: X or X Y")->expected(1, 2);
      sub->add_option("--x", x, "First coordinate")->excludes(p);
      sub->add_option("--y", y, "Second coordinate")->excludes(p);
    }
    if (flags.schedule) {
      sub->add_option("--n0", config.n0, "First degree of the doubling schedule")
          ->capture_default_str();
      sub->add_option("--doublings", config.doublings, "Number of doublings")
          ->capture_default_str();
    }
    if (flags.tolerance) {
      sub->add_option("--tolerance", config.tolerance, "Verdict tolerance")->capture_default_str();
    }
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "Write the report to PATH instead of standard output");
    sub->add_flag("--dry-run", config.dry_run, "Echo the parsed configuration and exit");
    sub->add_flag("--seedless", "Accepted for compatibility; every command is deterministic");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    if (help_text) *help_text = app.help();
    throw;
  } catch (const CLI::CallForAllHelp&) {
    if (help_text) *help_text = app.help("", CLI::AppFormatMode::All);
    throw;
  } catch (const CLI::ParseError& e) {
    throw ArgumentError(e.what());
  }

  for (const auto* sub : app.get_subcommands()) config.command = sub->get_name();
  if (x) point = y ? std::vector<double>{*x, *y} : std::vector<double>{*x};
  if (!x && y) throw ArgumentError("--y requires --x");
  config.point = point;
  if (!out_path.empty()) config.output_path = out_path;
  return config;
}

std::vector<std::string> to_arguments(const RunConfig& c) {
  std::vector<std::string> args{c.command};
  const CommandFlags flags = flags_for(c.command);
  const auto add = [&args](const std::string& flag, const std::string& value) {
    args.push_back(flag);
    args.push_back(value);
  };
  if (flags.kind) add("--kind", c.kind);
  if (flags.fn) add("--fn", c.fn_name);
  if (flags.n) add("--n", std::to_string(c.n));
  if (flags.j) add("--j", std::to_string(c.j));
  if (flags.point && !c.point.empty()) {
    args.push_back("--point");
    for (const double v : c.point) args.push_back(format_double(v));
  }
  if (flags.schedule) {
    add("--n0", std::to_string(c.n0));
    add("--doublings", std::to_string(c.doublings));
  }
  if (flags.tolerance) add("--tolerance", format_double(c.tolerance));
  add("--format", c.format);
  if (c.output_path) add("--out", *c.output_path);
  if (c.dry_run) args.push_back("--dry-run");
  return args;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* os = &out;
  if (config.output_path && !config.dry_run) {
    file.open(*config.output_path);
    if (!file) throw ArgumentError("cannot open output file '" + *config.output_path + "'");
    os = &file;
  }

  if (config.dry_run) {
    if (config.format == "json") {
      out << json{{"command", config.command},
                  {"config", config_json(config)},
                  {"argv", to_arguments(config)}}
                 .dump(2)
          << '\n';
    } else {
      out << join(to_arguments(config)) << '\n';
    }
    return kSuccess;
  }

  Report report;
  const std::string& c = config.command;
  if (c == "nodes") {
    report = nodes_report(config);
  } else if (c == "eval") {
    report = eval_report(config);
  } else if (c == "residual") {
    report = residual_report(config);
  } else if (c == "lemma") {
    report = lemma_report(config);
  } else if (c == "decompose") {
    report = decompose_report(config);
  } else if (c == "verify") {
    report = verify_report(config, err);
  } else {
    throw ArgumentError("unknown command '" + c + "'");
  }
  write_report(*os, config, report);
  return report.exit_code;
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const bool json_mode = wants_json(args);
  try {
    std::string help;
    RunConfig config;
    try {
      config = parse_arguments(args, &help);
    } catch (const CLI::Success&) {
      out << help;
      return kSuccess;
    }
    return run(config, out, err);
  } catch (const ArgumentError& e) {
    report_error(err, json_mode, "invalid-arguments", e.what());
  } catch (const DomainError& e) {
    report_error(err, json_mode, "domain-error", e.what());
  } catch (const LookupError& e) {
    report_error(err, json_mode, "lookup-error", e.what());
  } catch (const CapabilityError& e) {
    report_error(err, json_mode, "capability-error", e.what());
  }
  return kInvalidArguments;
}

}  // namespace akr::cli

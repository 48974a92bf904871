// Copyright 2026 The trotkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trotkit/errors.hpp"
#include "trotkit/models.hpp"
#include "trotkit/optimizer.hpp"
#include "trotkit/pauli.hpp"
#include "trotkit/schedule.hpp"
#include "trotkit/selfcheck.hpp"
#include "trotkit/serialization.hpp"
#include "trotkit/statevector.hpp"

namespace {

using namespace trotkit;

struct Options {
  std::string model = "tfim";
  int n_spins = 6;
  double j = 1.0;
  double gamma = 1.0;
  double alpha = 1.0;
  double time = 1.0;
  std::string order;  // empty = per-command default
  std::string steps = "16";
  double p0 = 1e-3;
  std::string p0_grid;
  std::string alpha_grid;
  double a_const = 2.0;
  std::string f_mode = "inv_k";
  std::string gate_count_mode;  // per-command default when empty
  std::string state = "zeros";
  bool no_normalize = false;
  std::string kopt_mode = "analytic";
  bool empirical = false;
  std::string config_path;
  std::string fixtures_path;
  std::string out_path;
  std::string format = "csv";

  bool alpha_given = false;  // --alpha or config key present
};

std::string fmt(double value) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  return parts;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: " + text);
  }
  if (used != text.size()) throw std::invalid_argument("not a number: " + text);
  return value;
}

long long parse_int(const std::string& text) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: " + text);
  }
  if (used != text.size()) throw std::invalid_argument("not an integer: " + text);
  return value;
}

// "lo:hi:points" -> log-spaced grid
std::vector<double> parse_log_grid(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() != 3)
    throw std::invalid_argument("grid must be lo:hi:points, got " + text);
  return log_grid(parse_double(parts[0]), parse_double(parts[1]),
                  static_cast<int>(parse_int(parts[2])));
}

// single value, comma list, or "lo:hi:points" log grid rounded to integers
std::vector<long long> parse_step_list(const std::string& text) {
  std::vector<long long> values;
  if (text.find(':') != std::string::npos) {
    for (double v : parse_log_grid(text)) {
      const long long n = std::max(1LL, std::llround(v));
      if (values.empty() || values.back() != n) values.push_back(n);
    }
  } else {
    for (const auto& part : split(text, ',')) values.push_back(parse_int(part));
  }
  for (long long n : values)
    if (n < 1) throw std::invalid_argument("step counts must be >= 1");
  return values;
}

// single value, comma list, or "lo:hi" inclusive range
std::vector<int> parse_order_list(const std::string& text) {
  std::vector<int> values;
  if (text.find(':') != std::string::npos) {
    auto parts = split(text, ':');
    if (parts.size() != 2) throw std::invalid_argument("order range must be lo:hi");
    const long long lo = parse_int(parts[0]);
    const long long hi = parse_int(parts[1]);
    if (lo < 1 || hi < lo) throw std::invalid_argument("bad order range: " + text);
    for (long long k = lo; k <= hi; ++k) values.push_back(static_cast<int>(k));
  } else {
    for (const auto& part : split(text, ',')) values.push_back(static_cast<int>(parse_int(part)));
  }
  for (int k : values)
    if (k < 1) throw std::invalid_argument("orders must be >= 1");
  return values;
}

int parse_single_int(const std::string& text, const std::string& what) {
  if (text.find_first_of(",:") != std::string::npos)
    throw std::invalid_argument(what + " must be a single integer here, got " + text);
  return static_cast<int>(parse_int(text));
}

void merge_config(const CLI::App* cmd, Options& opt) {
  if (opt.config_path.empty()) return;
  std::ifstream in(opt.config_path);
  if (!in) throw std::invalid_argument("cannot open config file: " + opt.config_path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("bad config file: " + std::string(e.what()));
  }

  auto absent = [&cmd](const std::string& flag) {
    return cmd->get_option_no_throw(flag) == nullptr || cmd->count(flag) == 0;
  };
  auto get_text = [](const json& v) {
    return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>());
  };

  if (cfg.contains("model") && absent("--model")) opt.model = cfg.at("model").get<std::string>();
  if (cfg.contains("n_spins") && absent("--n-spins")) opt.n_spins = cfg.at("n_spins").get<int>();
  if (cfg.contains("j") && absent("--j")) opt.j = cfg.at("j").get<double>();
  if (cfg.contains("gamma") && absent("--gamma")) opt.gamma = cfg.at("gamma").get<double>();
  if (cfg.contains("alpha") && absent("--alpha")) {
    opt.alpha = cfg.at("alpha").get<double>();
    opt.alpha_given = true;
  }
  if (cfg.contains("time") && absent("--time")) opt.time = cfg.at("time").get<double>();
  if (cfg.contains("order") && absent("--order")) opt.order = get_text(cfg.at("order"));
  if (cfg.contains("steps") && absent("--steps")) opt.steps = get_text(cfg.at("steps"));
  if (cfg.contains("p0") && absent("--p0")) opt.p0 = cfg.at("p0").get<double>();
  if (cfg.contains("p0_grid") && absent("--p0-grid"))
    opt.p0_grid = cfg.at("p0_grid").get<std::string>();
  if (cfg.contains("alpha_grid") && absent("--alpha-grid"))
    opt.alpha_grid = cfg.at("alpha_grid").get<std::string>();
  if (cfg.contains("a_const") && absent("--a-const")) opt.a_const = cfg.at("a_const").get<double>();
  if (cfg.contains("f_mode") && absent("--f-mode")) opt.f_mode = cfg.at("f_mode").get<std::string>();
  if (cfg.contains("gate_count_mode") && absent("--gate-count-mode"))
    opt.gate_count_mode = cfg.at("gate_count_mode").get<std::string>();
  if (cfg.contains("state") && absent("--state")) opt.state = cfg.at("state").get<std::string>();
  if (cfg.contains("normalize") && absent("--no-normalize"))
    opt.no_normalize = !cfg.at("normalize").get<bool>();
  if (cfg.contains("kopt_mode") && absent("--kopt-mode"))
    opt.kopt_mode = cfg.at("kopt_mode").get<std::string>();
  if (cfg.contains("format") && absent("--format")) opt.format = cfg.at("format").get<std::string>();
  if (cfg.contains("out") && absent("--out")) opt.out_path = cfg.at("out").get<std::string>();
}

ModelSpec make_spec(const Options& opt) {
  ModelSpec spec;
  spec.kind = model_kind_from_string(opt.model);
  spec.n_sites = opt.n_spins;
  spec.coupling = opt.j;
  spec.field = opt.alpha_given ? opt.alpha * opt.j : opt.gamma;
  spec.validate();
  return spec;
}

double alpha_of(const Options& opt) {
  if (opt.alpha_given) return opt.alpha;
  if (opt.j == 0.0) throw std::invalid_argument("alpha undefined for j = 0");
  return opt.gamma / opt.j;
}

GateCountMode count_mode_or(const Options& opt, GateCountMode fallback) {
  return opt.gate_count_mode.empty() ? fallback
                                     : gate_count_mode_from_string(opt.gate_count_mode);
}

StateVector initial_state(const Options& opt, int n_sites) {
  if (opt.state == "zeros") return basis_state(n_sites, 0);
  if (opt.state == "plus") return plus_state(n_sites);
  throw std::invalid_argument("unknown initial state: " + opt.state);
}

void write_output(const Options& opt, const std::string& content) {
  if (opt.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + opt.out_path);
  out << content;
}

std::string table_to_string(const Options& opt, const std::vector<std::string>& columns,
                            const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream oss;
  if (opt.format == "csv") {
    for (std::size_t c = 0; c < columns.size(); ++c) oss << (c ? "," : "") << columns[c];
    oss << "\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) oss << (c ? "," : "") << row[c];
      oss << "\n";
    }
    return oss.str();
  }
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj;
      for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = row[c];
      arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
  }
  throw std::invalid_argument("unknown format: " + opt.format);
}

std::vector<double> p0_values(const Options& opt) {
  auto values = opt.p0_grid.empty() ? std::vector<double>{opt.p0} : parse_log_grid(opt.p0_grid);
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<double> alpha_values(const Options& opt) {
  auto values = opt.alpha_grid.empty() ? std::vector<double>{alpha_of(opt)}
                                       : parse_log_grid(opt.alpha_grid);
  std::sort(values.begin(), values.end());
  return values;
}

int run_simulate(const Options& opt) {
  ModelSpec spec = make_spec(opt);
  if (spec.n_sites > 12) throw std::invalid_argument("simulate is limited to 12 spins");
  const int k = parse_single_int(opt.order.empty() ? "1" : opt.order, "--order");
  const int n = parse_single_int(opt.steps, "--steps");

  const Hamiltonian h = build_model(spec);
  const Schedule sched = merge_adjacent(build_schedule(h, k, n, opt.time));
  const StateVector psi0 = initial_state(opt, spec.n_sites);

  const double infid_norm = infidelity(h, sched, psi0, true);
  const double infid_raw = infidelity(h, sched, psi0, false);
  const double norm_dev = norm_sq(apply_schedule(sched, h, psi0)) - 1.0;

  const GateErrorModel gate{opt.p0, count_mode_or(opt, GateCountMode::Literal)};
  const double r_gate = gate_error(gate, static_cast<long long>(h.n_terms()), n, k, &sched);
  const double r_trotter = opt.no_normalize ? infid_raw : infid_norm;

  json report{{"infidelity_normalized", infid_norm},
              {"infidelity_raw", infid_raw},
              {"norm_deviation", norm_dev},
              {"gate_error", r_gate},
              {"r_total", r_gate + r_trotter},
              {"factor_count", sched.factors.size()}};
  write_output(opt, report.dump(2) + "\n");
  return 0;
}

int run_kappa(const Options& opt) {
  const double alpha = alpha_of(opt);
  const FMode f_mode = f_mode_from_string(opt.f_mode);
  const int k_max = opt.order.empty() ? 6 : parse_single_int(opt.order, "--order");

  std::vector<std::vector<std::string>> rows;
  for (double p0 : p0_values(opt)) {
    const KappaCurve curve = kappa_curve(b_constant(p0, alpha, opt.a_const), f_mode, 1, k_max);
    for (const auto& point : curve.points)
      rows.push_back({fmt(p0), std::to_string(point.k), fmt(point.kappa), fmt(point.phi),
                      fmt(point.phi_normalized)});
  }
  write_output(opt, table_to_string(opt, {"p0", "k", "kappa", "phi", "phi_norm"}, rows));
  return 0;
}

int run_kopt(const Options& opt) {
  ModelSpec spec = make_spec(opt);
  TrotterErrorParams params{opt.a_const, f_mode_from_string(opt.f_mode)};
  const KOptMode mode = opt.kopt_mode == "numeric" ? KOptMode::Numeric : KOptMode::Analytic;
  const int k_max = opt.order.empty() ? 6 : parse_single_int(opt.order, "--order");
  GateErrorModel gate{opt.p0, count_mode_or(opt, GateCountMode::Eq6)};

  std::vector<std::vector<std::string>> rows;
  for (double p0 : p0_values(opt)) {
    gate.p0 = p0;
    for (double alpha : alpha_values(opt)) {
      spec.field = alpha * spec.coupling;
      const OptimumReport report = k_opt(spec, params, gate, opt.time, mode, k_max);
      rows.push_back({fmt(p0), fmt(alpha), std::to_string(report.k),
                      std::to_string(report.n_star_int), fmt(report.r_min)});
    }
  }
  write_output(opt, table_to_string(opt, {"p0", "alpha", "k_opt", "n_opt", "r_min"}, rows));
  return 0;
}

int run_sweep(const Options& opt) {
  ModelSpec spec = make_spec(opt);
  TrotterErrorParams params{opt.a_const, f_mode_from_string(opt.f_mode)};
  const GateErrorModel gate{opt.p0, count_mode_or(opt, GateCountMode::Eq6)};
  const Hamiltonian h = build_model(spec);

  if (opt.empirical && spec.n_sites > 10)
    throw std::invalid_argument("empirical sweeps are limited to 10 spins");

  std::vector<std::string> columns = {"k", "n", "r_gate", "r_trotter", "r_total", "source"};
  if (opt.empirical) columns.push_back("r_empirical");

  std::vector<std::vector<std::string>> rows;
  for (int k : parse_order_list(opt.order.empty() ? "1" : opt.order)) {
    for (long long n : parse_step_list(opt.steps)) {
      double r_gate;
      if (gate.count_mode == GateCountMode::Literal) {
        const Schedule sched = merge_adjacent(build_schedule(h, k, static_cast<int>(n), opt.time));
        r_gate = gate_error(gate, static_cast<long long>(h.n_terms()), n, k, &sched);
      } else {
        r_gate = gate_error(gate, static_cast<long long>(h.n_terms()), n, k);
      }
      const double r_trotter = analytic_trotter_error(spec, params, k, n, opt.time);
      std::vector<std::string> row = {std::to_string(k),  std::to_string(n),
                                      fmt(r_gate),        fmt(r_trotter),
                                      fmt(r_gate + r_trotter), "analytic"};
      if (opt.empirical) {
        const StateVector psi0 = initial_state(opt, spec.n_sites);
        row.push_back(fmt(empirical_trotter_error(spec, k, n, opt.time, psi0, !opt.no_normalize)));
      }
      rows.push_back(std::move(row));
    }
  }
  write_output(opt, table_to_string(opt, columns, rows));
  return 0;
}

int run_export_schedule(const Options& opt) {
  ModelSpec spec = make_spec(opt);
  const int k = parse_single_int(opt.order.empty() ? "1" : opt.order, "--order");
  const int n = parse_single_int(opt.steps, "--steps");
  const Hamiltonian h = build_model(spec);
  const Schedule sched = build_schedule(h, k, n, opt.time);
  write_output(opt, export_schedule(sched, h, spec).dump(2) + "\n");
  return 0;
}

int run_validate(const Options& opt) {
  std::map<std::string, double> overrides;
  const std::map<std::string, double>* overrides_ptr = nullptr;
  if (!opt.fixtures_path.empty()) {
    std::ifstream in(opt.fixtures_path);
    if (!in) throw std::runtime_error("cannot open fixtures file: " + opt.fixtures_path);
    json doc;
    try {
      doc = json::parse(in);
      for (const auto& [name, value] : doc.items()) overrides[name] = value.get<double>();
    } catch (const json::exception& e) {
      throw std::runtime_error("bad fixtures file: " + std::string(e.what()));
    }
    overrides_ptr = &overrides;
  }

  const auto results = run_self_checks(overrides_ptr);
  bool all_passed = true;
  std::ostringstream oss;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    oss << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) oss << ": " << r.detail;
    oss << "\n";
  }
  oss << (all_passed ? "validation passed" : "validation FAILED") << " (" << results.size()
      << " checks)\n";
  write_output(opt, oss.str());
  return all_passed ? 0 : 3;
}

void add_common_options(CLI::App* cmd, Options& opt, bool with_model) {
  if (with_model) {
    cmd->add_option("--model", opt.model, "spin chain: tfim or xy")
        ->check(CLI::IsMember({"tfim", "xy"}));
    cmd->add_option("--n-spins", opt.n_spins, "number of spins N");
    cmd->add_option("--j", opt.j, "coupling J");
    auto* gamma = cmd->add_option("--gamma", opt.gamma, "transverse field Gamma");
    cmd->add_option("--alpha", opt.alpha, "field ratio alpha = Gamma/J (overrides --gamma)")
        ->excludes(gamma);
  }
  cmd->add_option("--config", opt.config_path, "JSON config file (flags take precedence)");
  cmd->add_option("--out", opt.out_path, "output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trotter-Suzuki schedules, error budgets and order optimization for spin chains"};
  app.require_subcommand(1);
  Options opt;

  auto* simulate = app.add_subcommand(
      "simulate", "evolve a spin chain with an order-k schedule and report its error budget");
  add_common_options(simulate, opt, true);
  simulate->add_option("--time", opt.time, "total evolution time t");
  simulate->add_option("--order", opt.order, "decomposition order k");
  simulate->add_option("--steps", opt.steps, "Trotter step count n");
  simulate->add_option("--p0", opt.p0, "gate error probability");
  simulate
      ->add_option("--gate-count-mode", opt.gate_count_mode,
                   "literal, eq6 or doubling (default literal)")
      ->check(CLI::IsMember({"literal", "eq6", "doubling"}));
  simulate->add_option("--state", opt.state, "initial state: zeros or plus")
      ->check(CLI::IsMember({"zeros", "plus"}));
  simulate->add_flag("--no-normalize", opt.no_normalize,
                     "use the raw overlap instead of the normalized one");

  auto* kappa = app.add_subcommand("kappa", "tabulate the kappa(k) and phi(k) curves");
  add_common_options(kappa, opt, false);
  kappa->add_option("--p0", opt.p0, "gate error probability");
  kappa->add_option("--p0-grid", opt.p0_grid, "log grid lo:hi:points");
  kappa->add_option("--alpha", opt.alpha, "field ratio alpha");
  kappa->add_option("--a-const", opt.a_const, "growth constant A");
  kappa->add_option("--f-mode", opt.f_mode, "inv_k, inv_factorial or unit")
      ->check(CLI::IsMember({"inv_k", "inv_factorial", "unit"}));
  kappa->add_option("--order", opt.order, "largest order k to tabulate (default 6)");
  kappa->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* kopt = app.add_subcommand("kopt", "optimal decomposition order over p0/alpha grids");
  add_common_options(kopt, opt, true);
  kopt->add_option("--time", opt.time, "total evolution time t");
  kopt->add_option("--p0", opt.p0, "gate error probability");
  kopt->add_option("--p0-grid", opt.p0_grid, "log grid lo:hi:points");
  kopt->add_option("--alpha-grid", opt.alpha_grid, "log grid lo:hi:points");
  kopt->add_option("--a-const", opt.a_const, "growth constant A");
  kopt->add_option("--f-mode", opt.f_mode, "inv_k, inv_factorial or unit")
      ->check(CLI::IsMember({"inv_k", "inv_factorial", "unit"}));
  kopt->add_option("--order", opt.order, "largest order k to consider (default 6)");
  kopt->add_option("--kopt-mode", opt.kopt_mode, "analytic or numeric objective")
      ->check(CLI::IsMember({"analytic", "numeric"}));
  kopt->add_option("--gate-count-mode", opt.gate_count_mode,
                   "gate counting for the numeric objective (default eq6)")
      ->check(CLI::IsMember({"literal", "eq6", "doubling"}));
  kopt->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* sweep = app.add_subcommand("sweep", "error budget table over (k, n) grids");
  add_common_options(sweep, opt, true);
  sweep->add_option("--time", opt.time, "total evolution time t");
  sweep->add_option("--order", opt.order, "orders: single k, list 1,2,3 or range 1:4");
  sweep->add_option("--steps", opt.steps, "steps: single n, list 8,16 or log grid lo:hi:points");
  sweep->add_option("--p0", opt.p0, "gate error probability");
  sweep->add_option("--a-const", opt.a_const, "growth constant A");
  sweep->add_option("--f-mode", opt.f_mode, "inv_k, inv_factorial or unit")
      ->check(CLI::IsMember({"inv_k", "inv_factorial", "unit"}));
  sweep
      ->add_option("--gate-count-mode", opt.gate_count_mode,
                   "literal, eq6 or doubling (default eq6)")
      ->check(CLI::IsMember({"literal", "eq6", "doubling"}));
  sweep->add_flag("--empirical", opt.empirical, "add a measured-infidelity column (needs N <= 10)");
  sweep->add_option("--state", opt.state, "initial state for --empirical")
      ->check(CLI::IsMember({"zeros", "plus"}));
  sweep->add_flag("--no-normalize", opt.no_normalize, "raw overlap for --empirical");
  sweep->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* export_cmd = app.add_subcommand("export-schedule", "write a schedule as JSON");
  add_common_options(export_cmd, opt, true);
  export_cmd->add_option("--time", opt.time, "total evolution time t");
  export_cmd->add_option("--order", opt.order, "decomposition order k");
  export_cmd->add_option("--steps", opt.steps, "Trotter step count n");

  auto* validate = app.add_subcommand("validate", "run the oracle and property self-checks");
  add_common_options(validate, opt, false);
  validate->add_option("--fixtures", opt.fixtures_path,
                       "JSON file of fixture overrides {name: value}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    const CLI::Option* alpha_opt = active->get_option_no_throw("--alpha");
    opt.alpha_given = opt.alpha_given || (alpha_opt != nullptr && alpha_opt->count() > 0);
    merge_config(active, opt);

    if (active == simulate) return run_simulate(opt);
    if (active == kappa) return run_kappa(opt);
    if (active == kopt) return run_kopt(opt);
    if (active == sweep) return run_sweep(opt);
    if (active == export_cmd) return run_export_schedule(opt);
    return run_validate(opt);
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

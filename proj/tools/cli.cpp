// Copyright 2026 The qswitch Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qswitch/verification.hpp"
#include "table_output.hpp"

#ifndef QSWITCH_VERSION_STRING
#define QSWITCH_VERSION_STRING "0.0.0"
#endif

namespace qswitch::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw std::invalid_argument("cannot parse " + what + " value '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  int v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw std::invalid_argument("cannot parse " + what + " value '" + text + "'");
  }
  return v;
}

std::pair<std::string, std::string> split_assignment(const std::string& text, const std::string& flag) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument(flag + " expects name=value, got '" + text + "'");
  }
  return {text.substr(0, eq), text.substr(eq + 1)};
}

Sink parse_sink(const std::string& text) {
  if (text == "ground" || text == "0") return Sink::kGround;
  if (text == "excited" || text == "1") return Sink::kExcited;
  throw std::invalid_argument("unknown sink '" + text + "' (ground|excited)");
}

std::string sink_name(Sink s) { return s == Sink::kGround ? "ground" : "excited"; }

struct ScenarioArgs {
  std::string id;
  std::vector<std::string> grid;
  std::vector<std::string> set;
  int dim = 0;
  int two_j = -1;
  std::string axis;
  std::string sink;
  int copies = 3;
  std::string povm = "pm";
  int threads = 0;
  std::string out = "-";
  std::string format = "csv";
  std::uint64_t seed = 0;
  std::string columns;
  std::string estimate;
  std::string labels;
  std::vector<std::string> bind;
};

ScenarioConfig build_config(const ScenarioArgs& a) {
  ScenarioConfig config;
  config.id = parse_scenario_id(a.id);
  config.seed = a.seed;
  config.threads = a.threads == 0 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))
                                  : a.threads;
  if (a.threads < 0) throw std::invalid_argument("--threads must be nonnegative");

  for (const auto& g : a.grid) {
    GridAxis axis = parse_grid_flag(g);
    if (axis.count == 1 && axis.min == axis.max && g.find(':') == std::string::npos) {
      config.fixed.set(axis.name, axis.min);
    } else {
      config.grid.push_back(axis);
    }
  }
  for (const auto& s : a.set) {
    auto [name, value] = split_assignment(s, "--set");
    config.fixed.set(name, parse_double(value, name));
  }

  ScenarioOptions& opts = config.options;
  if (a.dim != 0 && a.two_j >= 0 && a.dim != a.two_j + 1) {
    throw std::invalid_argument("--dim and --two-j disagree");
  }
  if (a.dim < 0) throw std::invalid_argument("--dim must be positive");
  opts.dim = a.two_j >= 0 ? a.two_j + 1 : a.dim;

  if (!a.axis.empty()) {
    const auto parts = split(a.axis, ',');
    if (parts.size() != 2) throw std::invalid_argument("--axis expects Theta,Phi");
    opts.dephasing_axis = Axis{parse_double(parts[0], "axis polar"), parse_double(parts[1], "axis azimuth")};
  }
  if (!a.sink.empty()) {
    const auto parts = split(a.sink, ',');
    if (parts.size() == 1) {
      opts.sink_a = opts.sink_b = parse_sink(parts[0]);
    } else if (parts.size() == 2) {
      opts.sink_a = parse_sink(parts[0]);
      opts.sink_b = parse_sink(parts[1]);
    } else {
      throw std::invalid_argument("--sink expects one or two of ground|excited");
    }
  }
  opts.copies = a.copies;
  if (a.povm == "pm") {
    opts.imag_povm = false;
  } else if (a.povm == "pm+imag") {
    opts.imag_povm = true;
  } else {
    throw std::invalid_argument("unknown --povm '" + a.povm + "' (pm|pm+imag)");
  }
  if (!a.estimate.empty()) opts.estimate = split(a.estimate, ',');
  if (!a.labels.empty()) {
    for (const auto& l : split(a.labels, ',')) opts.control_labels.push_back(parse_int(l, "label"));
  }
  for (const auto& b : a.bind) {
    auto [label, perm] = split_assignment(b, "--bind");
    CausalOrder order;
    for (const auto& c : split(perm, ',')) order.permutation.push_back(parse_int(c, "order"));
    opts.bindings[parse_int(label, "label")] = order;
  }
  if (!a.columns.empty()) config.columns = split(a.columns, ',');

  validate_config(config);
  return config;
}

nlohmann::ordered_json config_echo(const ScenarioConfig& config, const ScenarioArgs& a) {
  nlohmann::ordered_json grid = nlohmann::ordered_json::array();
  for (const auto& g : config.grid) {
    grid.push_back({{"name", g.name}, {"min", g.min}, {"max", g.max}, {"count", g.count}});
  }
  nlohmann::ordered_json fixed = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config.fixed.values()) fixed[k] = v;
  const ScenarioOptions& o = config.options;
  nlohmann::ordered_json echo;
  echo["grid"] = grid;
  echo["fixed"] = fixed;
  echo["dim"] = scenario_dim(config.id, o);
  if (o.dephasing_axis) echo["axis"] = {o.dephasing_axis->polar, o.dephasing_axis->azimuth};
  echo["sink"] = {sink_name(o.sink_a), sink_name(o.sink_b)};
  echo["copies"] = o.copies;
  echo["povm"] = a.povm;
  if (!o.estimate.empty()) echo["estimate"] = o.estimate;
  if (!o.control_labels.empty()) echo["labels"] = o.control_labels;
  if (!o.bindings.empty()) {
    nlohmann::ordered_json binds = nlohmann::ordered_json::object();
    for (const auto& [label, order] : o.bindings) binds[std::to_string(label)] = order.permutation;
    echo["bind"] = binds;
  }
  if (!config.columns.empty()) echo["columns"] = config.columns;
  return echo;
}

int run_scenario(const ScenarioArgs& a, std::ostream& out, std::ostream& err) {
  ScenarioConfig config;
  try {
    config = build_config(a);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  if (a.format != "csv" && a.format != "json") {
    err << "error: unknown --format '" << a.format << "' (csv|json)\n";
    return kExitInvalid;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (a.out != "-") {
    file = std::make_unique<std::ofstream>(a.out, std::ios::binary | std::ios::trunc);
    if (!*file) {
      err << "error: cannot write " << a.out << '\n';
      return kExitInvalid;
    }
    sink = file.get();
  }

  SweepResult result;
  try {
    result = run_sweep(config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  if (a.format == "csv") {
    write_csv(result, *sink);
  } else {
    nlohmann::ordered_json meta;
    meta["scenario"] = to_string(config.id);
    meta["config"] = config_echo(config, a);
    meta["version"] = QSWITCH_VERSION_STRING;
    meta["seed"] = config.seed;
    *sink << to_json(result, meta).dump(2) << '\n';
  }
  sink->flush();
  if (!*sink) {
    err << "error: failed writing " << a.out << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

int run_verify(std::uint64_t seed, std::ostream& out) {
  const VerificationReport report = run_verification(seed);
  std::size_t width = 0;
  for (const auto& s : report.suites) width = std::max(width, s.name.size());
  double worst = 0.0;
  for (const auto& s : report.suites) {
    out << (s.passed() ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(width)) << s.name
        << "  max_dev=" << format_number(s.max_deviation) << "  tol=" << format_number(s.tolerance)
        << "  samples=" << s.samples << '\n';
    worst = std::max(worst, s.max_deviation);
  }
  const bool ok = report.all_passed();
  out << (ok ? "all suites passed" : "verification failed") << " (" << report.suites.size()
      << " suites, worst deviation " << format_number(worst) << ")\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

void run_list(std::ostream& out) {
  for (ScenarioId id : all_scenarios()) {
    const ScenarioInfo& info = scenario_info(id);
    out << to_string(id) << "  " << info.summary << '\n';
    out << "  dim " << info.default_dim << '\n';
    for (const auto& p : info.params) {
      out << "  " << p.name << "  default "
          << (std::isnan(p.default_value) ? std::string("unset") : format_number(p.default_value)) << "  range ["
          << format_number(p.lo) << ", " << format_number(p.hi) << "]";
      if (!p.help.empty()) out << "  " << p.help;
      out << '\n';
    }
    out << "  estimate";
    for (const auto& e : info.default_estimate) out << ' ' << e;
    out << "\n  columns";
    for (const auto& c : info.default_columns) out << ' ' << c;
    out << '\n';
  }
}

}  // namespace

GridAxis parse_grid_flag(const std::string& text) {
  auto [name, range] = split_assignment(text, "--grid");
  const auto parts = split(range, ':');
  if (parts.size() == 1) {
    const double v = parse_double(parts[0], name);
    return {name, v, v, 1};
  }
  if (parts.size() != 3) throw std::invalid_argument("--grid expects name=min:max:count");
  GridAxis axis{name, parse_double(parts[0], name), parse_double(parts[1], name),
                parse_int(parts[2], name + " count")};
  if (axis.count < 1) throw std::invalid_argument("grid count for " + name + " must be >= 1");
  if (axis.count > 1 && !(axis.max > axis.min)) {
    throw std::invalid_argument("grid range for " + name + " must have max > min");
  }
  return axis;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum switch metrology sweeps", "qswitch"};
  app.require_subcommand(1);
  app.set_version_flag("--version", QSWITCH_VERSION_STRING);

  ScenarioArgs sa;
  CLI::App* scenario = app.add_subcommand("scenario", "Sweep one scenario over a parameter grid");
  scenario->add_option("id", sa.id, "Scenario id (see `list`)")->required();
  scenario->add_option("--grid", sa.grid, "name=min:max:count, or name=value");
  scenario->add_option("--set", sa.set, "name=value fixed parameter");
  scenario->add_option("--dim", sa.dim, "Probe dimension");
  scenario->add_option("--two-j", sa.two_j, "Spin 2j; sets the dimension to 2j+1");
  scenario->add_option("--axis", sa.axis, "Dephasing axis Theta,Phi");
  scenario->add_option("--sink", sa.sink, "Damping sink: ground|excited, or one per channel");
  scenario->add_option("--copies", sa.copies, "Number of copies for copies-D");
  scenario->add_option("--povm", sa.povm, "pm or pm+imag");
  scenario->add_option("--threads", sa.threads, "Worker threads, 0 for all cores");
  scenario->add_option("--out", sa.out, "Output path, - for stdout");
  scenario->add_option("--format", sa.format, "csv or json");
  scenario->add_option("--seed", sa.seed, "Seed echoed in the metadata");
  scenario->add_option("--columns", sa.columns, "Comma separated columns, prefix* or all");
  scenario->add_option("--estimate", sa.estimate, "Comma separated estimated parameters");
  scenario->add_option("--labels", sa.labels, "Comma separated control labels");
  scenario->add_option("--bind", sa.bind, "label=order, order as comma separated channel indices");

  std::uint64_t verify_seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "Run the oracle and invariant suites");
  verify->add_option("--seed", verify_seed, "Random seed");

  CLI::App* list = app.add_subcommand("list", "List scenarios and their parameters");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (scenario->parsed()) return run_scenario(sa, out, err);
    if (verify->parsed()) return run_verify(verify_seed, out);
    if (list->parsed()) {
      run_list(out);
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace qswitch::cli

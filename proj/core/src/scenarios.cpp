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

#include "qswitch/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace qswitch {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kNudge = 1e-9;
constexpr double kZeroInformation = 1e-12;

// Channel slots for the two-noise-one-unitary scenarios.
constexpr int kA = 0;
constexpr int kB = 1;
constexpr int kU = 2;

ParamSpec angle(const std::string& name, double def, double hi, std::vector<double> singular,
                const std::string& help) {
  return {name, def, 0.0, hi, std::move(singular), help};
}

ParamSpec prob(const std::string& name, double def, std::vector<double> singular,
               const std::string& help) {
  return {name, def, 0.0, 1.0, std::move(singular), help};
}

std::vector<ParamSpec> two_noise_params(std::vector<double> theta_sing, std::vector<double> p_sing,
                                        double p_default) {
  return {angle("theta", kPi / 2, 2 * kPi, theta_sing, "rotation angle of U"),
          prob("p_A", 0.5, p_sing, "survival probability of channel A"),
          prob("p_B", 0.5, p_sing, "survival probability of channel B"),
          prob("p", p_default, p_sing, "sets p_A = p_B")};
}

std::vector<ScenarioInfo> make_infos() {
  const std::vector<std::string> multi_cols = {"f_*", "cov_theta_theta", "dco_var_theta", "ratio",
                                               "r_dev"};
  std::vector<ScenarioInfo> v;
  v.push_back({ScenarioId::kDepolSingle,
               "depolarization on both sides of a spin rotation, two orders",
               two_noise_params({0.0, 2 * kPi}, {1.0}, kNaN),
               {"theta"},
               {"q_ico", "q_dco", "ratio", "r01_dev"},
               2});
  v.push_back({ScenarioId::kDephaseSingle,
               "dephasing on both sides of a spin rotation, two orders",
               two_noise_params({0.0, 2 * kPi}, {}, kNaN),
               {"theta"},
               {"q_ico", "q_half", "q_dco", "ratio", "r01_dev"},
               2});
  v.push_back({ScenarioId::kAmpdampSingle,
               "qubit amplitude damping on both sides of a z rotation, two orders",
               two_noise_params({}, {0.0}, kNaN),
               {"theta"},
               {"qfi_ico", "fi_ico", "q_small", "q_dco", "ratio", "r01_dev"},
               2});
  v.push_back({ScenarioId::kAmpdampParallel,
               "amplitude damping on each of log2(dim) qubits, two orders",
               two_noise_params({}, {0.0}, kNaN),
               {"theta"},
               {"qfi_ico", "q_dco_ghz", "q_dco_parallel", "ratio", "r01_dev"},
               4});
  v.push_back({ScenarioId::kDepolMulti, "depolarization, three orders, estimate theta, p_A, p_B",
               two_noise_params({0.0, kPi}, {0.0, 1.0}, kNaN),
               {"theta", "p_A", "p_B"},
               multi_cols,
               2});
  v.push_back({ScenarioId::kDephaseMulti, "dephasing, three orders, estimate theta, p_A, p_B",
               two_noise_params({0.0, kPi}, {0.0, 1.0}, kNaN),
               {"theta", "p_A", "p_B"},
               multi_cols,
               2});
  v.push_back({ScenarioId::kAmpdampMulti,
               "amplitude damping, three orders, estimate theta, p_A, p_B",
               two_noise_params({0.0, kPi}, {0.0, 1.0}, kNaN),
               {"theta", "p_A", "p_B"},
               multi_cols,
               2});
  {
    auto params = two_noise_params({0.0}, {0.0, 1.0}, kNaN);
    params.push_back(angle("Theta", kPi / 3, kPi, {0.0, kPi}, "polar angle of the rotation axis"));
    params.push_back(angle("Phi", 0.0, 2 * kPi, {}, "azimuth of the rotation axis"));
    v.push_back({ScenarioId::kDephasePhaseAxis,
                 "z dephasing, rotation about a tilted axis, three orders",
                 params,
                 {"theta", "Theta"},
                 {"f_*", "det_f", "r_dev"},
                 2});
  }
  {
    auto params = two_noise_params({0.0}, {0.0, 1.0}, 0.1);
    params.push_back(angle("Theta", kPi / 3, kPi, {0.0, kPi}, "polar angle of the rotation axis"));
    params.push_back(angle("Phi", 0.0, 2 * kPi, {}, "azimuth of the rotation axis"));
    v.push_back({ScenarioId::kAmpdampPhaseAxis,
                 "amplitude damping, rotation about a tilted axis, three orders",
                 params,
                 {"theta", "Theta", "p"},
                 {"cov_theta_theta", "cov_Theta_Theta", "norm_var_theta", "norm_var_Theta",
                  "r_dev"},
                 2});
  }
  v.push_back({ScenarioId::kCopiesThree,
               "three noisy copies of a rotation, three orders",
               {angle("theta", kPi / 2, 2 * kPi, {0.0}, "rotation angle of U"),
                angle("Theta", 0.0, kPi, {}, "polar angle of the rotation axis"),
                angle("Phi", 0.0, 2 * kPi, {}, "azimuth of the rotation axis"),
                prob("p_A", 0.5, {0.0, 1.0}, "survival probability of copy A"),
                prob("p_B", 0.5, {0.0, 1.0}, "survival probability of copy B"),
                prob("p_C", 0.5, {0.0, 1.0}, "survival probability of copy C"),
                prob("p", 0.5, {0.0, 1.0}, "sets p_A = p_B = p_C")},
               {"theta", "p"},
               {"cov_theta_theta", "cov_p_p", "dco_var_theta", "ratio", "r_dev"},
               2});
  v.push_back({ScenarioId::kCopiesD,
               "D noisy copies of a rotation, two cyclic orders",
               {angle("theta", kPi / 2, 2 * kPi, {0.0}, "rotation angle of U"),
                angle("Theta", 0.0, kPi, {}, "polar angle of the rotation axis"),
                angle("Phi", 0.0, 2 * kPi, {}, "azimuth of the rotation axis"),
                prob("p", 0.01, {0.0, 1.0}, "survival probability of every copy")},
               {"theta"},
               {"fi_ico", "q_dco", "ratio", "r01_dev"},
               2});
  return v;
}

const std::vector<ScenarioInfo>& infos() {
  static const std::vector<ScenarioInfo> v = make_infos();
  return v;
}

const ParamSpec* find_param(const ScenarioInfo& info, const std::string& name) {
  for (const auto& p : info.params)
    if (p.name == name) return &p;
  return nullptr;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

const std::vector<std::string>& estimate_of(ScenarioId id, const ScenarioOptions& opts) {
  return opts.estimate.empty() ? scenario_info(id).default_estimate : opts.estimate;
}

double prob_of(const ParamPoint& pt, const std::string& name) {
  return pt.has("p") ? pt.at("p") : pt.at(name);
}

bool is_two_noise(ScenarioId id) {
  return id != ScenarioId::kCopiesThree && id != ScenarioId::kCopiesD;
}

bool is_three_order(ScenarioId id) {
  switch (id) {
    case ScenarioId::kDepolMulti:
    case ScenarioId::kDephaseMulti:
    case ScenarioId::kAmpdampMulti:
    case ScenarioId::kDephasePhaseAxis:
    case ScenarioId::kAmpdampPhaseAxis:
    case ScenarioId::kCopiesThree:
      return true;
    default:
      return false;
  }
}

bool is_ampdamp(ScenarioId id) {
  return id == ScenarioId::kAmpdampSingle || id == ScenarioId::kAmpdampParallel ||
         id == ScenarioId::kAmpdampMulti || id == ScenarioId::kAmpdampPhaseAxis;
}

CausalOrder order_for_label(ScenarioId id, int label, const ScenarioOptions& opts) {
  if (auto it = opts.bindings.find(label); it != opts.bindings.end()) return it->second;
  if (id == ScenarioId::kCopiesD) {
    const int n = opts.copies;
    std::vector<int> o0;
    std::vector<int> o1{0};
    for (int k = n - 1; k >= 0; --k) o0.push_back(k);
    for (int k = n - 1; k >= 1; --k) o1.push_back(k);
    if (label == 0) return {o0};
    if (label == 1) return {o1};
  } else if (id == ScenarioId::kCopiesThree) {
    if (label == 0) return {{2, 1, 0}};
    if (label == 1) return {{0, 1, 2}};
    if (label == 2) return {{0, 2, 1}};
  } else if (is_three_order(id)) {
    if (label == 0) return {{kU, kB, kA}};
    if (label == 1) return {{kB, kA, kU}};
    if (label == 2) return {{kA, kU, kB}};
    if (label == 4) return {{kU, kA, kB}};
  } else {
    if (label == 0) return {{kA, kU, kB}};
    if (label == 1) return {{kB, kU, kA}};
  }
  throw std::invalid_argument("no causal order bound to control label " + std::to_string(label) +
                              " in " + to_string(id));
}

std::vector<int> default_labels(ScenarioId id) {
  if (is_three_order(id)) return {0, 1, 2};
  return {0, 1};
}

ComplexMatrix maximally_mixed(std::size_t d) {
  return (1.0 / static_cast<double>(d)) * ComplexMatrix::identity(d);
}

// (|0> + |d-1>)/sqrt2 as a density matrix.
ComplexMatrix extremal_superposition(std::size_t d) {
  ComplexMatrix m(d, d);
  m(0, 0) = m(d - 1, d - 1) = m(0, d - 1) = m(d - 1, 0) = 0.5;
  return m;
}

int log2_exact(int d) {
  int n = 0;
  while ((1 << n) < d) ++n;
  if ((1 << n) != d || n < 1) throw std::invalid_argument("ampdamp-parallel: dim must be 2^n");
  return n;
}

std::string pair_name(int a, int b) { return "r" + std::to_string(a) + std::to_string(b); }

void push(PointResult& r, const std::string& name, double v) { r.quantities.emplace_back(name, v); }

}  // namespace

const ScenarioInfo& scenario_info(ScenarioId id) {
  for (const auto& info : infos())
    if (info.id == id) return info;
  throw std::invalid_argument("unknown scenario id");
}

int scenario_dim(ScenarioId id, const ScenarioOptions& opts) {
  const int def = scenario_info(id).default_dim;
  const int d = opts.dim == 0 ? def : opts.dim;
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  switch (id) {
    case ScenarioId::kAmpdampSingle:
    case ScenarioId::kAmpdampMulti:
    case ScenarioId::kAmpdampPhaseAxis:
    case ScenarioId::kDephasePhaseAxis:
      if (d != 2) throw std::invalid_argument(to_string(id) + " is defined for qubits only");
      break;
    case ScenarioId::kAmpdampParallel:
      log2_exact(d);
      break;
    default:
      break;
  }
  if (opts.gauge == DepolGauge::kPauli && d != 2) {
    throw std::invalid_argument("the Pauli depolarization gauge needs dim 2");
  }
  return d;
}

ParamPoint resolve_point(ScenarioId id, const ParamPoint& given, const ScenarioOptions& opts) {
  const ScenarioInfo& info = scenario_info(id);
  ParamPoint pt;
  for (const auto& spec : info.params) {
    if (spec.name != "p") pt.set(spec.name, spec.default_value);
  }
  for (const auto& [name, value] : given.values()) {
    const ParamSpec* spec = find_param(info, name);
    if (spec == nullptr) {
      throw std::invalid_argument("parameter " + name + " is not defined for " + to_string(id));
    }
    if (!(value >= spec->lo && value <= spec->hi)) {
      throw std::invalid_argument("parameter " + name + " is outside its domain");
    }
    pt.set(name, value);
  }
  const auto& estimate = estimate_of(id, opts);
  for (const auto& e : estimate) {
    if (find_param(info, e) == nullptr) {
      throw std::invalid_argument("cannot estimate " + e + " in " + to_string(id));
    }
  }
  const ParamSpec* pspec = find_param(info, "p");
  double shared = given.get("p", kNaN);
  if (std::isnan(shared) && pspec != nullptr && !std::isnan(pspec->default_value)) {
    const bool individual = given.has("p_A") || given.has("p_B") || given.has("p_C");
    if (!individual) shared = pspec->default_value;
  }
  if (!std::isnan(shared)) {
    for (const char* n : {"p_A", "p_B", "p_C"}) {
      if (given.has(n)) {
        throw std::invalid_argument(std::string("p and ") + n + " cannot both be set");
      }
      if (pt.has(n)) pt.set(n, shared);
    }
    if (contains(estimate, "p") || id == ScenarioId::kCopiesD) pt.set("p", shared);
  } else if (contains(estimate, "p")) {
    throw std::invalid_argument("estimating p needs the shared probability p to be set");
  }
  if (pt.has("p")) {
    for (const char* n : {"p_A", "p_B", "p_C"}) {
      if (contains(estimate, n)) {
        throw std::invalid_argument(std::string("cannot estimate both p and ") + n);
      }
    }
  }
  return pt;
}

BuiltScenario build_scenario(ScenarioId id, const ParamPoint& pt, const ScenarioOptions& opts) {
  const int d = scenario_dim(id, opts);
  const double theta = pt.at("theta");
  const Axis u_axis{pt.get("Theta", 0.0), pt.get("Phi", 0.0)};
  BuiltScenario b;
  CatalogInputs& cat = b.catalog;
  cat.theta = theta;
  cat.Theta = u_axis.polar;
  cat.d = d;
  cat.copies = opts.copies;

  ComplexMatrix u;
  ComplexMatrix v;  // dephasing operator, when used
  auto& chs = b.spec.channels;
  switch (id) {
    case ScenarioId::kDepolSingle:
    case ScenarioId::kDepolMulti: {
      u = su2_unitary(theta, Axis::z(), d - 1);
      auto depol = [&](double p) {
        return opts.gauge == DepolGauge::kPauli ? depolarizing_channel_pauli(p)
                                                : depolarizing_channel(d, p);
      };
      chs = {depol(prob_of(pt, "p_A")), depol(prob_of(pt, "p_B")), unitary_channel(u)};
      break;
    }
    case ScenarioId::kDephaseSingle:
    case ScenarioId::kDephaseMulti:
    case ScenarioId::kDephasePhaseAxis: {
      Axis dephase_axis = id == ScenarioId::kDephaseSingle  ? Axis::y()
                          : id == ScenarioId::kDephaseMulti ? Axis::x()
                                                            : Axis::z();
      if (opts.dephasing_axis) dephase_axis = *opts.dephasing_axis;
      v = su2_unitary(kPi, dephase_axis, d - 1);
      u = su2_unitary(theta, id == ScenarioId::kDephasePhaseAxis ? u_axis : Axis::z(), d - 1);
      chs = {dephasing_channel(prob_of(pt, "p_A"), v), dephasing_channel(prob_of(pt, "p_B"), v),
             unitary_channel(u)};
      break;
    }
    case ScenarioId::kAmpdampSingle:
    case ScenarioId::kAmpdampMulti:
    case ScenarioId::kAmpdampPhaseAxis: {
      u = su2_unitary(theta, id == ScenarioId::kAmpdampPhaseAxis ? u_axis : Axis::z(), 1);
      chs = {amplitude_damping_channel(prob_of(pt, "p_A"), opts.sink_a),
             amplitude_damping_channel(prob_of(pt, "p_B"), opts.sink_b), unitary_channel(u)};
      break;
    }
    case ScenarioId::kAmpdampParallel: {
      const int n = log2_exact(d);
      cat.n_qubits = n;
      const ComplexMatrix u1 = su2_unitary(theta, Axis::z(), 1);
      u = u1;
      for (int k = 1; k < n; ++k) u = kron(u, u1);
      chs = {parallel_channel(amplitude_damping_channel(prob_of(pt, "p_A"), opts.sink_a), n),
             parallel_channel(amplitude_damping_channel(prob_of(pt, "p_B"), opts.sink_b), n),
             unitary_channel(u)};
      break;
    }
    case ScenarioId::kCopiesThree: {
      u = su2_unitary(theta, u_axis, d - 1);
      chs = {joint_unitary_depol(u, prob_of(pt, "p_A")), joint_unitary_depol(u, prob_of(pt, "p_B")),
             joint_unitary_depol(u, prob_of(pt, "p_C"))};
      break;
    }
    case ScenarioId::kCopiesD: {
      if (opts.copies < 2 || opts.copies > 5) {
        throw std::invalid_argument("copies-D needs 2 <= copies <= 5");
      }
      u = su2_unitary(theta, u_axis, d - 1);
      for (int k = 0; k < opts.copies; ++k) chs.push_back(joint_unitary_depol(u, pt.at("p")));
      break;
    }
  }

  b.labels = opts.control_labels.empty() ? default_labels(id) : opts.control_labels;
  for (int label : b.labels) b.spec.orders.push_back(order_for_label(id, label, opts));
  b.spec.control_amplitudes = equal_amplitudes(b.labels.size());
  b.probe = opts.probe ? *opts.probe : maximally_mixed(static_cast<std::size_t>(d));
  if (b.probe.rows() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("probe dimension does not match the scenario");
  }

  cat.p_A = is_two_noise(id) || id == ScenarioId::kCopiesThree ? prob_of(pt, "p_A") : pt.at("p");
  cat.p_B = is_two_noise(id) || id == ScenarioId::kCopiesThree ? prob_of(pt, "p_B") : pt.at("p");
  cat.p_C = id == ScenarioId::kCopiesThree ? prob_of(pt, "p_C") : 0.0;
  const ComplexMatrix udag = u.adjoint();
  const ComplexMatrix u2 = u * u;
  const ComplexMatrix u2dag = u2.adjoint();
  if (id != ScenarioId::kAmpdampParallel) {
    cat.tr_u = u.trace();
    cat.exp_u = trace_product(u, b.probe);
    cat.exp_udag = trace_product(udag, b.probe);
    cat.tr_u2 = u2.trace();
    cat.exp_u2 = trace_product(u2, b.probe);
    cat.exp_u2dag = trace_product(u2dag, b.probe);
  }
  if (!v.empty()) cat.s = trace_product(v.adjoint() * udag * v * u, b.probe);
  return b;
}

std::vector<std::pair<std::pair<std::size_t, std::size_t>, Complex>> catalog_for(
    ScenarioId id, const BuiltScenario& built, bool derived) {
  const RCatalog cat = derived ? r_catalog_derived(id, built.catalog) : r_catalog(id, built.catalog);
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Complex>> out;
  auto index_of = [&](int label) -> std::ptrdiff_t {
    auto it = std::find(built.labels.begin(), built.labels.end(), label);
    return it == built.labels.end() ? -1 : it - built.labels.begin();
  };
  for (const auto& [key, value] : cat) {
    const auto a = index_of(key.first);
    const auto b = index_of(key.second);
    if (a < 0 || b < 0) continue;
    out.push_back({{static_cast<std::size_t>(a), static_cast<std::size_t>(b)}, value});
  }
  return out;
}

double PointResult::get(const std::string& name) const {
  for (const auto& [n, v] : quantities)
    if (n == name) return v;
  throw std::invalid_argument("unknown quantity " + name);
}

bool PointResult::has_flag(const std::string& flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

PointResult evaluate_point(ScenarioId id, const ParamPoint& pt, const ScenarioOptions& opts) {
  PointResult res;
  const BuiltScenario built = build_scenario(id, pt, opts);
  const ComplexMatrix r = r_matrix(built.spec, built.probe);

  // Closed forms against the Kraus sum.
  const bool has_closed_form =
      !(is_ampdamp(id) && (opts.sink_a != Sink::kGround || opts.sink_b != Sink::kGround));
  double r_dev = 0.0;
  for (std::size_t a = 0; a < built.labels.size(); ++a)
    for (std::size_t b = a + 1; b < built.labels.size(); ++b) {
      const std::string name = pair_name(built.labels[a], built.labels[b]);
      push(res, "re_" + name, r(a, b).real());
      push(res, "im_" + name, r(a, b).imag());
    }
  if (has_closed_form) {
    for (const auto& [key, value] : catalog_for(id, built, false)) {
      const double dev = std::abs(r(key.first, key.second) - value);
      push(res, pair_name(built.labels[key.first], built.labels[key.second]) + "_dev", dev);
      r_dev = std::max(r_dev, dev);
    }
    push(res, "r_dev", r_dev);
  } else {
    res.flags.push_back("no_closed_form");
  }

  // Classical Fisher information of the fixed control measurement.
  const std::size_t dc = built.labels.size();
  const Povm povm = opts.imag_povm ? pm_imag_povm(dc) : pm_basis_povm(dc);
  const auto control_at = [&](const ParamPoint& q) {
    const BuiltScenario bq = build_scenario(id, q, opts);
    return control_state(bq.spec, bq.probe);
  };
  const ProbModel model = [&](const ParamPoint& q) { return outcome_probs(povm, control_at(q)); };
  const auto& est = estimate_of(id, opts);
  std::optional<FisherMatrix> fisher;
  try {
    fisher = classical_fisher(model, pt, est);
  } catch (const FisherEvaluationError&) {
    res.flags.push_back("fi_undefined");
  }
  std::optional<FisherMatrix> cov;
  if (fisher) {
    try {
      cov = invert_fisher(*fisher);
    } catch (const SingularFisherError&) {
      res.flags.push_back("singular");
    }
  }
  for (std::size_t i = 0; i < est.size(); ++i)
    for (std::size_t j = i; j < est.size(); ++j)
      push(res, "f_" + est[i] + "_" + est[j], fisher ? (*fisher)(i, j) : kNaN);
  for (std::size_t i = 0; i < est.size(); ++i)
    for (std::size_t j = i; j < est.size(); ++j)
      push(res, "cov_" + est[i] + "_" + est[j], cov ? (*cov)(i, j) : kNaN);
  push(res, "det_f", fisher ? fisher->determinant() : kNaN);

  const double f_tt = fisher && contains(est, "theta") ? fisher->at("theta", "theta") : kNaN;
  const double cov_tt = cov && contains(est, "theta") ? cov->at("theta", "theta") : kNaN;
  const double pa = built.catalog.p_A;
  const double pb = built.catalog.p_B;
  const int d = built.catalog.d;
  const int two_j = d - 1;

  auto report_ratio = [&](double ico, double dco) {
    push(res, "q_dco", dco);
    if (dco < kZeroInformation) {
      res.flags.push_back("infinite_advantage");
      push(res, "ratio", kNaN);
    } else {
      push(res, "ratio", ico / dco);
    }
  };
  auto report_variance_ratio = [&](double dco) {
    push(res, "q_dco", dco);
    if (dco < kZeroInformation) {
      res.flags.push_back("infinite_advantage");
      push(res, "dco_var_theta", kNaN);
      push(res, "ratio", kNaN);
    } else {
      push(res, "dco_var_theta", 1.0 / dco);
      push(res, "ratio", (1.0 / dco) / cov_tt);
    }
  };
  auto control_qfi = [&]() {
    try {
      return qfi_matrix(control_at, pt, {"theta"})(0, 0);
    } catch (const FisherEvaluationError&) {
      res.flags.push_back("qfi_undefined");
      return kNaN;
    }
  };
  auto dephasing_dco_qfi = [&]() {
    const ComplexMatrix probe = extremal_superposition(static_cast<std::size_t>(d));
    const StateModel dco = [&](const ParamPoint& q) {
      const BuiltScenario bq = build_scenario(id, q, opts);
      const auto& c = bq.spec.channels;
      return apply_dco({c[kA], c[kU], c[kB]}, probe);
    };
    try {
      return qfi_matrix(dco, pt, {"theta"})(0, 0);
    } catch (const FisherEvaluationError&) {
      res.flags.push_back("qfi_undefined");
      return kNaN;
    }
  };

  switch (id) {
    case ScenarioId::kDepolSingle: {
      const SpinCharacter ch = spin_character(pt.at("theta"), two_j);
      double q = kNaN;
      try {
        q = q_ico_depol(pt.at("theta"), pa, pb, d, ch.u, ch.du);
      } catch (const std::domain_error&) {
        res.flags.push_back("q_ico_singular");
      }
      push(res, "q_ico", q);
      push(res, "fi_ico", f_tt);
      report_ratio(q, q_dco_depol_bound(pa * pb, d, two_j));
      break;
    }
    case ScenarioId::kDephaseSingle: {
      push(res, "q_ico", f_tt);
      double half = kNaN;
      if (pa == 0.5 && pb == 0.5) {
        const auto re_s = [&](double t) {
          ParamPoint q = pt;
          q.set("theta", t);
          return build_scenario(id, q, opts).catalog.s.real();
        };
        try {
          half = dephasing_halfhalf_qfi(pt.at("theta"), re_s);
        } catch (const std::domain_error&) {
          res.flags.push_back("q_half_singular");
        }
      }
      push(res, "q_half", half);
      report_ratio(f_tt, dephasing_dco_qfi());
      break;
    }
    case ScenarioId::kAmpdampSingle: {
      const double q = control_qfi();
      push(res, "qfi_ico", q);
      push(res, "fi_ico", f_tt);
      push(res, "q_small", q_ico_damp_small_p(pt.at("theta"), pa, pb));
      report_ratio(q, pa * pb);
      break;
    }
    case ScenarioId::kAmpdampParallel: {
      const int n = built.catalog.n_qubits;
      const double q = control_qfi();
      const double ghz = n * n * ghz_damping_qfi(n, pa, pb);
      const double par = n * pa * pb;
      push(res, "qfi_ico", q);
      push(res, "fi_ico", f_tt);
      push(res, "q_dco_ghz", ghz);
      push(res, "q_dco_parallel", par);
      report_ratio(q, std::max(ghz, par));
      break;
    }
    case ScenarioId::kDepolMulti:
      report_variance_ratio(q_dco_depol_bound(pa * pb, d, two_j));
      break;
    case ScenarioId::kDephaseMulti:
      report_variance_ratio(dephasing_dco_qfi());
      break;
    case ScenarioId::kAmpdampMulti:
      report_variance_ratio(pa * pb);
      break;
    case ScenarioId::kDephasePhaseAxis:
      break;
    case ScenarioId::kAmpdampPhaseAxis: {
      const double cov_TT = cov && contains(est, "Theta") ? cov->at("Theta", "Theta") : kNaN;
      push(res, "norm_var_theta", pa * pb * cov_tt);
      push(res, "norm_var_Theta", pa * pb * cov_TT);
      break;
    }
    case ScenarioId::kCopiesThree:
      report_variance_ratio(q_dco_depol_bound(pa * pb * built.catalog.p_C, d, 3.0 * two_j));
      break;
    case ScenarioId::kCopiesD: {
      const int copies = opts.copies;
      push(res, "fi_ico", f_tt);
      report_ratio(f_tt, q_dco_depol_bound(std::pow(pt.at("p"), copies), d,
                                           static_cast<double>(copies) * two_j));
      break;
    }
  }
  return res;
}

std::vector<double> grid_values(const GridAxis& axis, const ParamSpec& spec,
                                std::vector<bool>* nudged) {
  if (axis.count < 1) throw std::invalid_argument("grid count must be at least 1");
  std::vector<double> out(static_cast<std::size_t>(axis.count));
  std::vector<bool> flags(out.size(), false);
  for (int k = 0; k < axis.count; ++k) {
    out[k] = axis.count == 1 ? axis.min
                             : axis.min + (axis.max - axis.min) * k / static_cast<double>(axis.count - 1);
  }
  if (axis.count > 0) out.back() = axis.count == 1 ? axis.min : axis.max;
  auto is_singular = [&](double x) {
    return std::find(spec.singular.begin(), spec.singular.end(), x) != spec.singular.end();
  };
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!is_singular(out[k])) continue;
    // Move toward the interior of the grid, or of the domain for a single point.
    const double toward = axis.count == 1 ? (out[k] >= spec.hi ? -1.0 : 1.0)
                          : k == 0        ? (axis.max >= axis.min ? 1.0 : -1.0)
                                          : (axis.max >= axis.min ? -1.0 : 1.0);
    out[k] += toward * kNudge;
    flags[k] = true;
  }
  if (nudged) *nudged = flags;
  return out;
}

void validate_config(const ScenarioConfig& config) {
  const ScenarioInfo& info = scenario_info(config.id);
  std::vector<std::string> seen;
  for (const auto& g : config.grid) {
    const ParamSpec* spec = find_param(info, g.name);
    if (spec == nullptr) {
      throw std::invalid_argument("grid parameter " + g.name + " is not defined for " +
                                  to_string(config.id));
    }
    if (contains(seen, g.name)) throw std::invalid_argument("grid parameter " + g.name + " repeated");
    seen.push_back(g.name);
    if (g.count < 1) throw std::invalid_argument("grid count for " + g.name + " must be >= 1");
    for (double x : {g.min, g.max}) {
      if (!(x >= spec->lo && x <= spec->hi)) {
        throw std::invalid_argument("grid bounds for " + g.name + " leave its domain");
      }
    }
  }
  for (const auto& [name, value] : config.fixed.values()) {
    if (contains(seen, name)) {
      throw std::invalid_argument("parameter " + name + " is both gridded and fixed");
    }
  }
  if (config.threads < 0) throw std::invalid_argument("threads must be nonnegative");
  scenario_dim(config.id, config.options);
}

namespace {

std::vector<std::string> select_columns(const ScenarioConfig& config, const PointResult& sample) {
  std::vector<std::string> available;
  for (const auto& [n, v] : sample.quantities) available.push_back(n);
  std::vector<std::string> requested =
      config.columns.empty() ? scenario_info(config.id).default_columns : config.columns;
  if (requested.size() == 1 && requested.front() == "all") return available;
  std::vector<std::string> out;
  for (const auto& r : requested) {
    if (!r.empty() && r.back() == '*') {
      const std::string prefix = r.substr(0, r.size() - 1);
      for (const auto& a : available)
        if (a.rfind(prefix, 0) == 0 && !contains(out, a)) out.push_back(a);
      continue;
    }
    if (!contains(available, r)) {
      throw std::invalid_argument("column " + r + " is not produced by " + to_string(config.id));
    }
    if (!contains(out, r)) out.push_back(r);
  }
  return out;
}

}  // namespace

SweepResult run_sweep(const ScenarioConfig& config) {
  validate_config(config);
  const ScenarioInfo& info = scenario_info(config.id);

  std::vector<std::vector<double>> axes;
  std::vector<std::vector<bool>> nudges;
  SweepResult result;
  for (const auto& g : config.grid) {
    std::vector<bool> nudged;
    axes.push_back(grid_values(g, *find_param(info, g.name), &nudged));
    nudges.push_back(std::move(nudged));
    result.param_names.push_back(g.name);
  }
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();

  auto point_at = [&](std::size_t index, std::vector<double>& values, std::vector<std::string>& flags) {
    ParamPoint given = config.fixed;
    std::size_t rem = index;
    values.assign(axes.size(), 0.0);
    for (std::size_t k = axes.size(); k-- > 0;) {
      const std::size_t i = rem % axes[k].size();
      rem /= axes[k].size();
      values[k] = axes[k][i];
      given.set(config.grid[k].name, values[k]);
      if (nudges[k][i]) flags.push_back("nudged:" + config.grid[k].name);
    }
    return resolve_point(config.id, given, config.options);
  };

  // Resolve the column set from the first point before the parallel pass.
  {
    std::vector<double> values;
    std::vector<std::string> flags;
    const PointResult sample = evaluate_point(config.id, point_at(0, values, flags), config.options);
    result.columns = select_columns(config, sample);
  }

  result.rows.resize(total);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(total);
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      try {
        SweepRow& row = result.rows[i];
        const ParamPoint pt = point_at(i, row.params, row.flags);
        const PointResult pr = evaluate_point(config.id, pt, config.options);
        row.values.reserve(result.columns.size());
        for (const auto& c : result.columns) row.values.push_back(pr.get(c));
        row.flags.insert(row.flags.end(), pr.flags.begin(), pr.flags.end());
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                         : static_cast<unsigned>(config.threads);
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return result;
}

}  // namespace qswitch

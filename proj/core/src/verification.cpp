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

#include "qswitch/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qswitch {

namespace {

constexpr double kPi = std::numbers::pi;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int pick(std::mt19937_64& rng, const std::vector<int>& options) {
  return options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
}

Axis random_axis(std::mt19937_64& rng) {
  return {std::acos(uniform(rng, -1.0, 1.0)), uniform(rng, 0.0, 2 * kPi)};
}

void track(SuiteResult& s, double dev) {
  s.max_deviation = std::max(s.max_deviation, std::isnan(dev) ? INFINITY : dev);
  ++s.samples;
}

SuiteResult switch_validity(std::mt19937_64& rng) {
  SuiteResult s{"switch-validity", 0.0, 1e-10, 0};
  for (ScenarioId id : all_scenarios()) {
    for (int rep = 0; rep < 3; ++rep) {
      OracleDraw draw = random_oracle_draw(id, rng);
      if (id == ScenarioId::kAmpdampParallel) draw.options.dim = 4;
      const ParamPoint pt = resolve_point(id, draw.point, draw.options);
      const BuiltScenario b = build_scenario(id, pt, draw.options);
      const std::size_t n = b.spec.control_dim() * b.spec.probe_dim();
      ComplexMatrix sum(n, n);
      for (const auto& k : switch_kraus_operators(b.spec)) sum += k.adjoint() * k;
      track(s, max_abs_diff(sum, ComplexMatrix::identity(n)));
      const ComplexMatrix r = r_matrix(b.spec, b.probe);
      for (std::size_t j = 0; j < r.rows(); ++j) track(s, std::abs(r(j, j) - 1.0));
      track(s, hermiticity_defect(r));
      for (const auto& z : r.entries()) track(s, std::max(0.0, std::abs(z) - 1.0));
      const ComplexMatrix rc = control_state(b.spec, b.probe);
      track(s, std::abs(rc.trace() - 1.0));
      track(s, std::max(0.0, -min_eigenvalue(rc)));
      ComplexMatrix prep(b.spec.control_dim(), b.spec.control_dim());
      for (std::size_t a = 0; a < prep.rows(); ++a)
        for (std::size_t c = 0; c < prep.cols(); ++c)
          prep(a, c) = b.spec.control_amplitudes[a] * std::conj(b.spec.control_amplitudes[c]);
      const ComplexMatrix joint = evolve_joint(b.spec, prep, b.probe);
      track(s, max_abs_diff(partial_trace(joint, b.spec.control_dim(), b.spec.probe_dim(),
                                          Subsystem::kFirst),
                            rc));
    }
  }
  return s;
}

SuiteResult gauge_invariance(std::mt19937_64& rng) {
  SuiteResult s{"kraus-gauge-invariance", 0.0, 1e-10, 0};
  for (ScenarioId id : {ScenarioId::kDepolSingle, ScenarioId::kDepolMulti}) {
    for (int rep = 0; rep < 20; ++rep) {
      ScenarioOptions opts;
      opts.dim = 2;
      opts.probe = random_density(2, rng);
      ParamPoint given{{"theta", uniform(rng, 0, 2 * kPi)},
                       {"p_A", uniform(rng, 0, 1)},
                       {"p_B", uniform(rng, 0, 1)}};
      const ParamPoint pt = resolve_point(id, given, opts);
      const BuiltScenario a = build_scenario(id, pt, opts);
      opts.gauge = DepolGauge::kPauli;
      const BuiltScenario b = build_scenario(id, pt, opts);
      track(s, max_abs_diff(control_state(a.spec, a.probe), control_state(b.spec, b.probe)));
    }
  }
  return s;
}

SuiteResult phi_independence(std::mt19937_64& rng) {
  SuiteResult s{"phi-independence", 0.0, 1e-12, 0};
  for (ScenarioId id : {ScenarioId::kDephasePhaseAxis, ScenarioId::kAmpdampPhaseAxis}) {
    for (int rep = 0; rep < 10; ++rep) {
      ScenarioOptions opts;
      opts.control_labels = {0, 1, 2, 4};
      ParamPoint given{{"theta", uniform(rng, 0, 2 * kPi)},
                       {"Theta", uniform(rng, 0, kPi)},
                       {"p_A", uniform(rng, 0, 1)},
                       {"p_B", uniform(rng, 0, 1)},
                       {"Phi", 0.0}};
      opts.estimate = {"theta"};
      const auto r0 = [&] {
        const BuiltScenario b = build_scenario(id, resolve_point(id, given, opts), opts);
        return r_matrix(b.spec, b.probe);
      }();
      for (int k = 1; k < 12; ++k) {
        given.set("Phi", 2 * kPi * k / 12.0);
        const BuiltScenario b = build_scenario(id, resolve_point(id, given, opts), opts);
        track(s, max_abs_diff(r_matrix(b.spec, b.probe), r0));
      }
    }
  }
  return s;
}

SuiteResult probe_independence(std::mt19937_64& rng) {
  SuiteResult s{"probe-independence", 0.0, 1e-11, 0};
  for (int rep = 0; rep < 10; ++rep) {
    SwitchSpec spec;
    for (int c = 0; c < 3; ++c) {
      const int kind = pick(rng, {0, 1, 2});
      const auto dir = random_axis(rng).direction();
      const ComplexMatrix sigma = dir[0] * pauli_x() + dir[1] * pauli_y() + dir[2] * pauli_z();
      if (kind == 0) spec.channels.push_back(dephasing_channel(uniform(rng, 0, 1), sigma));
      if (kind == 1) spec.channels.push_back(depolarizing_channel_pauli(uniform(rng, 0, 1)));
      if (kind == 2) {
        spec.channels.push_back(unitary_channel(su2_unitary(uniform(rng, 0, 2 * kPi), random_axis(rng), 1)));
      }
    }
    auto orders = all_orders(3);
    std::shuffle(orders.begin(), orders.end(), rng);
    orders.resize(static_cast<std::size_t>(pick(rng, {2, 3, 4})));
    spec.orders = orders;
    spec.control_amplitudes = equal_amplitudes(orders.size());
    const ComplexMatrix ref = r_matrix(spec, random_density(2, rng));
    for (int k = 0; k < 100; ++k) {
      const ComplexMatrix r = r_matrix(spec, random_density(2, rng));
      double dev = 0.0;
      for (std::size_t i = 0; i < r.entries().size(); ++i) {
        dev = std::max(dev, std::abs(r.entries()[i].real() - ref.entries()[i].real()));
      }
      track(s, dev);
    }
  }
  return s;
}

SuiteResult symmetries(std::mt19937_64& rng) {
  SuiteResult s{"swap-symmetries", 0.0, 1e-10, 0};
  for (int rep = 0; rep < 20; ++rep) {
    const double th = uniform(rng, 0, 2 * kPi);
    const double pa = uniform(rng, 0, 1);
    const double pb = uniform(rng, 0, 1);
    ScenarioOptions opts;
    opts.dim = pick(rng, {2, 3});
    auto r01 = [&](ScenarioId id, double t, double a, double b) {
      const ParamPoint pt = resolve_point(id, {{"theta", t}, {"p_A", a}, {"p_B", b}}, opts);
      const BuiltScenario built = build_scenario(id, pt, opts);
      return r_element(built.spec, 0, 1, built.probe);
    };
    track(s, std::abs(r01(ScenarioId::kDepolSingle, th, pa, pb) -
                      std::conj(r01(ScenarioId::kDepolSingle, th, pb, pa))));
    opts.dim = 2;
    track(s, std::abs(r01(ScenarioId::kAmpdampSingle, th, pa, pb) -
                      std::conj(r01(ScenarioId::kAmpdampSingle, th, pb, pa))));
    track(s, std::abs(r01(ScenarioId::kAmpdampSingle, th, pa, pb) -
                      r01(ScenarioId::kAmpdampSingle, 2 * kPi - th, pb, pa)));
  }
  return s;
}

SuiteResult copies_three_reduction(std::mt19937_64& rng) {
  SuiteResult s{"copies-three-equal-p-reduction", 0.0, 1e-12, 0};
  for (int rep = 0; rep < 50; ++rep) {
    const OracleDraw draw = random_oracle_draw(ScenarioId::kCopiesThree, rng);
    const double p = uniform(rng, 0, 1);
    ParamPoint given = draw.point;
    ParamPoint eq;
    for (const auto& [k, v] : given.values())
      if (k[0] != 'p') eq.set(k, v);
    eq.set("p_A", p);
    eq.set("p_B", p);
    eq.set("p_C", p);
    ScenarioOptions opts = draw.options;
    opts.estimate = {"theta"};
    const BuiltScenario b =
        build_scenario(ScenarioId::kCopiesThree, resolve_point(ScenarioId::kCopiesThree, eq, opts), opts);
    const RCatalog full = r_catalog(ScenarioId::kCopiesThree, b.catalog);
    const RCatalog reduced = copies_three_equal_p(p, b.catalog);
    for (const auto& [key, value] : full) track(s, std::abs(value - reduced.at(key)));
  }
  return s;
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

ComplexMatrix random_density(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> n01;
  ComplexMatrix g(d, d);
  for (auto* z = g.data(); z != g.data() + d * d; ++z) *z = Complex(n01(rng), n01(rng));
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return rho;
}

OracleDraw random_oracle_draw(ScenarioId id, std::mt19937_64& rng) {
  OracleDraw draw;
  ParamPoint& pt = draw.point;
  ScenarioOptions& opts = draw.options;
  pt.set("theta", uniform(rng, 0, 2 * kPi));
  auto probs = [&](std::initializer_list<const char*> names) {
    for (const char* n : names) pt.set(n, uniform(rng, 0, 1));
  };
  switch (id) {
    case ScenarioId::kDepolSingle:
    case ScenarioId::kDepolMulti:
      opts.dim = pick(rng, {2, 3});
      opts.probe = random_density(static_cast<std::size_t>(opts.dim), rng);
      probs({"p_A", "p_B"});
      break;
    case ScenarioId::kDephaseSingle:
      opts.dim = pick(rng, {2, 3});
      opts.dephasing_axis = random_axis(rng);
      opts.probe = random_density(static_cast<std::size_t>(opts.dim), rng);
      probs({"p_A", "p_B"});
      break;
    case ScenarioId::kDephaseMulti:
      opts.dephasing_axis = Axis{kPi / 2, uniform(rng, 0, 2 * kPi)};
      probs({"p_A", "p_B"});
      break;
    case ScenarioId::kAmpdampSingle:
    case ScenarioId::kAmpdampMulti:
      probs({"p_A", "p_B"});
      break;
    case ScenarioId::kAmpdampParallel:
      opts.dim = pick(rng, {2, 4, 8});
      probs({"p_A", "p_B"});
      break;
    case ScenarioId::kDephasePhaseAxis:
    case ScenarioId::kAmpdampPhaseAxis:
      opts.control_labels = {0, 1, 2, 4};
      opts.estimate = {"theta", "Theta"};
      pt.set("Theta", uniform(rng, 0, kPi));
      pt.set("Phi", uniform(rng, 0, 2 * kPi));
      probs({"p_A", "p_B"});
      break;
    case ScenarioId::kCopiesThree:
      opts.dim = pick(rng, {2, 3});
      opts.estimate = {"theta"};
      pt.set("Theta", uniform(rng, 0, kPi));
      pt.set("Phi", uniform(rng, 0, 2 * kPi));
      probs({"p_A", "p_B", "p_C"});
      break;
    case ScenarioId::kCopiesD:
      opts.dim = pick(rng, {2, 3});
      opts.copies = pick(rng, {3, 4});
      pt.set("Theta", uniform(rng, 0, kPi));
      pt.set("Phi", uniform(rng, 0, 2 * kPi));
      pt.set("p", uniform(rng, 0, 0.01));
      break;
  }
  return draw;
}

std::vector<SuiteResult> oracle_equivalence(std::uint64_t seed, int draws, bool derived) {
  std::vector<SuiteResult> out;
  std::mt19937_64 rng(seed);
  for (ScenarioId id : all_scenarios()) {
    if (id == ScenarioId::kCopiesD) continue;
    std::vector<SuiteResult> local;
    for (int k = 0; k < draws; ++k) {
      const OracleDraw draw = random_oracle_draw(id, rng);
      const ParamPoint pt = resolve_point(id, draw.point, draw.options);
      const BuiltScenario b = build_scenario(id, pt, draw.options);
      const auto entries = catalog_for(id, b, derived);
      const ComplexMatrix r = r_matrix(b.spec, b.probe);
      if (local.empty()) {
        for (const auto& [key, value] : entries) {
          local.push_back({std::string(derived ? "derived:" : "oracle:") + to_string(id) + ":r" +
                               std::to_string(b.labels[key.first]) +
                               std::to_string(b.labels[key.second]),
                           0.0, 1e-10, 0});
        }
      }
      for (std::size_t e = 0; e < entries.size(); ++e) {
        const auto& [key, value] = entries[e];
        track(local[e], std::abs(r(key.first, key.second) - value));
      }
    }
    out.insert(out.end(), local.begin(), local.end());
  }
  return out;
}

VerificationReport run_verification(std::uint64_t seed) {
  VerificationReport rep;
  rep.suites = oracle_equivalence(seed, 50, false);
  const auto derived = oracle_equivalence(seed + 1, 50, true);
  rep.suites.insert(rep.suites.end(), derived.begin(), derived.end());
  std::mt19937_64 rng(seed + 2);
  rep.suites.push_back(copies_three_reduction(rng));
  rep.suites.push_back(switch_validity(rng));
  rep.suites.push_back(gauge_invariance(rng));
  rep.suites.push_back(phi_independence(rng));
  rep.suites.push_back(probe_independence(rng));
  rep.suites.push_back(symmetries(rng));
  return rep;
}

}  // namespace qswitch

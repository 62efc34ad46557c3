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

#include "qswitch/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qswitch {

namespace {

constexpr Complex kI(0.0, 1.0);

const std::vector<std::pair<ScenarioId, std::string>>& id_names() {
  static const std::vector<std::pair<ScenarioId, std::string>> names = {
      {ScenarioId::kDepolSingle, "depol-single"},
      {ScenarioId::kDephaseSingle, "dephase-single"},
      {ScenarioId::kAmpdampSingle, "ampdamp-single"},
      {ScenarioId::kAmpdampParallel, "ampdamp-parallel"},
      {ScenarioId::kDepolMulti, "depol-multi"},
      {ScenarioId::kDephaseMulti, "dephase-multi"},
      {ScenarioId::kAmpdampMulti, "ampdamp-multi"},
      {ScenarioId::kDephasePhaseAxis, "dephase-phase-axis"},
      {ScenarioId::kAmpdampPhaseAxis, "ampdamp-phase-axis"},
      {ScenarioId::kCopiesThree, "copies-three"},
      {ScenarioId::kCopiesD, "copies-D"},
  };
  return names;
}

Complex ampdamp_single_r01(double theta, double pa, double pb) {
  return 0.5 * (1.0 - std::polar(1.0, theta) * (pa - 1.0) * std::sqrt(pb) -
                std::polar(1.0, -theta) * std::sqrt(pa) * (pb - 1.0) + pa * pb);
}

double dephase_axis_g(double theta, double big_theta) {
  const double st = std::sin(big_theta);
  return std::cos(2 * big_theta) + 2 * st * st * std::cos(theta);
}

}  // namespace

const std::vector<ScenarioId>& all_scenarios() {
  static const std::vector<ScenarioId> ids = [] {
    std::vector<ScenarioId> v;
    for (const auto& [id, name] : id_names()) v.push_back(id);
    return v;
  }();
  return ids;
}

std::string to_string(ScenarioId id) {
  for (const auto& [i, name] : id_names())
    if (i == id) return name;
  throw std::invalid_argument("unknown scenario id");
}

ScenarioId parse_scenario_id(const std::string& text) {
  for (const auto& [id, name] : id_names())
    if (name == text) return id;
  throw std::invalid_argument("unknown scenario: " + text);
}

RCatalog r_catalog(ScenarioId id, const CatalogInputs& in) {
  const double pa = in.p_A;
  const double pb = in.p_B;
  const double pc = in.p_C;
  const double d = in.d;
  const double th = in.theta;
  RCatalog r;
  switch (id) {
    case ScenarioId::kDepolSingle:
      r[{0, 1}] = pa * (1 - pb) / d * std::conj(in.tr_u) * in.exp_u +
                  pb * (1 - pa) / d * in.tr_u * in.exp_udag + (1 - pa) * (1 - pb) / (d * d) +
                  pa * pb;
      break;
    case ScenarioId::kDephaseSingle:
      r[{0, 1}] = pa * (1 - pb) * in.s + pb * (1 - pa) * std::conj(in.s) + (1 - pa) * (1 - pb) +
                  pa * pb;
      break;
    case ScenarioId::kAmpdampSingle:
      r[{0, 1}] = ampdamp_single_r01(th, pa, pb);
      break;
    case ScenarioId::kAmpdampParallel:
      r[{0, 1}] = std::pow(ampdamp_single_r01(th, pa, pb), in.n_qubits);
      break;
    case ScenarioId::kDepolMulti: {
      const Complex w = in.exp_u * std::conj(in.tr_u);
      r[{0, 1}] = pa * pb + (1 - pa * pb) / d * w;
      r[{0, 2}] = pa + (1 - pa) * (1 - pb) / (d * d) + pb * (1 - pa) / d * w;
      r[{1, 2}] = pb + (1 - pa) * (1 - pb) / (d * d) + pa * (1 - pb) / d * std::conj(w);
      break;
    }
    case ScenarioId::kDephaseMulti: {
      const double c = std::cos(th);
      r[{0, 1}] = (pa + pb - 2 * pa * pb) * c + 2 * pa * pb - pa - pb + 1;
      r[{0, 2}] = pa * (1 - c) + c;
      r[{1, 2}] = pb * (1 - c) + c;
      break;
    }
    case ScenarioId::kAmpdampMulti: {
      const double sa = std::sqrt(pa);
      const double sb = std::sqrt(pb);
      r[{0, 1}] = 0.5 * (std::polar(1.0, -th) * (1 - pa * pb) + pa * pb + 1.0);
      r[{0, 2}] = 0.5 * (-(pa - 1) * sb * std::polar(1.0, -th) + pa * pb - sa * (pb - 1) + 1.0);
      r[{1, 2}] = 0.5 * (-sa * (pb - 1) * std::polar(1.0, th) + pa * pb - (pa - 1) * sb + 1.0);
      break;
    }
    case ScenarioId::kDephasePhaseAxis: {
      const double g = dephase_axis_g(th, in.Theta);
      const double sq = std::sqrt(std::max(0.0, (pa - 1) * pa * (pb - 1) * pb));
      r[{0, 1}] = 0.5 * (g * (-2 * pa * pb + pa + pb) + 2 * pa * pb - pa - pb + 2);
      r[{0, 2}] = 0.5 * (-(pa - 1) * g + pa + 1);
      r[{1, 2}] = 0.5 * (-(pb - 1) * g + pb + 1);
      r[{2, 4}] = 0.5 * (g * (pa * (pb - 1) + sq - pb + 1) + 3 * pa * pb + 3 * sq - pa - pb + 1);
      break;
    }
    case ScenarioId::kAmpdampPhaseAxis: {
      const double sa = std::sqrt(pa);
      const double sb = std::sqrt(pb);
      const double sab = std::sqrt(pa * pb);
      const double ct = std::cos(th);
      const double st = std::sin(th);
      const double ctt = std::cos(in.Theta);
      const double stt = std::sin(in.Theta);
      const double c2tt = std::cos(2 * in.Theta);
      const double s2 = std::sin(th / 2) * std::sin(th / 2);
      const double m = stt * stt * sab + pa * pb * ctt * ctt;
      r[{0, 1}] = 0.5 * (m - ct * (m - 1) + kI * ctt * (pa * pb - 1) * st + 1.0);
      r[{0, 2}] = 0.125 * (2 * sb * (c2tt * (pa * sb - 2 * sab + pa + sb - 1) * s2 +
                                     2.0 * kI * (pa - 1) * ctt * st) +
                           ((sa - 1) * (sa - 1) * pb - 3 * (pa - 1) * sb) * ct - 2 * sa * (pb - 2) +
                           pa * (3 * pb - sb) - pb + sb + 4.0);
      r[{1, 2}] = 0.125 * (2 * c2tt * (2 * pa * (pb - sb) + sa * (pb - 1) - pb + 1) * s2 -
                           4.0 * kI * sa * (pb - 1) * ctt * st +
                           (-3 * sa * (pb - 1) + 2 * pa * (pb - sb) - pb + 1) * ct +
                           (2 * pa - sa + 1) * pb - 2 * (pa - 2) * sb + sa + 3.0);
      r[{0, 4}] = 0.5 * (pa * (pb - sb) - sa * (pb - 1) + sb + 1);
      break;
    }
    case ScenarioId::kCopiesThree: {
      const Complex t2 = in.tr_u2 * in.exp_u2dag;
      const Complex t1 = in.tr_u * in.exp_udag;
      r[{0, 1}] = pa * pb * pc + (pa * pb + pa * pc + pb * pc - 3 * pa * pb * pc) / d * t2 +
                  (1 - pa * pb - pa * pc - pb * pc + 2 * pa * pb * pc) / (d * d);
      r[{0, 2}] = pa * pb * pc + pa * (1 - pb * pc) / d * t1 + (1 - pa) * pb * pc / d * t2 +
                  (1 - pa) * (1 - pb * pc) / (d * d);
      r[{1, 2}] = pc + pa * pb * (1 - pc) / d * std::conj(in.tr_u) * in.exp_u +
                  (1 - pa) * pb * (1 - pc) / (d * d) * std::norm(in.tr_u) +
                  (1 - pb) * (1 - pc) / (d * d);
      break;
    }
    case ScenarioId::kCopiesD: {
      const double p = pa;
      r[{0, 1}] = (1 - p) / (d * d) + p / d * in.tr_u * in.exp_udag;
      break;
    }
  }
  return r;
}

RCatalog r_catalog_derived(ScenarioId id, const CatalogInputs& in) {
  const double pa = in.p_A;
  const double pb = in.p_B;
  const double pc = in.p_C;
  const double qa = 1 - pa;
  const double qb = 1 - pb;
  const double qc = 1 - pc;
  const double d = in.d;
  RCatalog r;
  if (id == ScenarioId::kCopiesThree) {
    const Complex t2 = in.tr_u2 * in.exp_u2dag / d;
    const Complex t2c = std::conj(in.tr_u2) * in.exp_u2 / d;
    const Complex t1 = in.tr_u * in.exp_udag / d;
    const Complex t1c = std::conj(in.tr_u) * in.exp_u / d;
    const double m = std::norm(in.tr_u) / (d * d);
    r[{0, 1}] = pa * pb * pc + pa * pb * qc * t2 + pa * qb * pc + qa * pb * pc * t2c +
                (pa * qb * qc + qa * pb * qc + qa * qb * pc + qa * qb * qc) / (d * d);
    r[{0, 2}] = pa * pb * pc + (pa * pb * qc + pa * qb * pc + pa * qb * qc) * t1 +
                qa * pb * pc * t2c + (qa * pb * qc + qa * qb * pc + qa * qb * qc) / (d * d);
    r[{1, 2}] = pa * pb * pc + pa * pb * qc * t1c + pa * qb * pc * t1 + pa * qb * qc / (d * d) +
                qa * pb * pc + (qa * pb * qc + qa * qb * pc) * m + qa * qb * qc / (d * d);
  } else if (id == ScenarioId::kDephasePhaseAxis) {
    const double ctt = std::cos(in.Theta);
    const double stt = std::sin(in.Theta);
    r[{2, 4}] = pa + qa * (ctt * ctt + stt * stt * std::cos(in.theta));
  }
  return r;
}

RCatalog copies_three_equal_p(double p, const CatalogInputs& in) {
  const double d = in.d;
  const Complex t2 = in.tr_u2 * in.exp_u2dag;
  const Complex t1 = in.tr_u * in.exp_udag;
  RCatalog r;
  r[{0, 1}] = p * p * p + 3 * p * p * (1 - p) / d * t2 + (1 - 3 * p * p + 2 * p * p * p) / (d * d);
  r[{0, 2}] = p * p * p + p * (1 - p * p) / d * t1 + p * p * (1 - p) / d * t2 +
              (1 - p) * (1 - p * p) / (d * d);
  r[{1, 2}] = p + p * p * (1 - p) / d * std::conj(in.tr_u) * in.exp_u +
              (1 - p) * (1 - p) * p / (d * d) * std::norm(in.tr_u) + (1 - p) * (1 - p) / (d * d);
  return r;
}

double q_ico_depol(double /*theta*/, double p_A, double p_B, int d, double u, double du_dtheta) {
  const double c = p_A + p_B - 2 * p_A * p_B;
  const double d2 = static_cast<double>(d) * d;
  const double inner = (1 - p_A) * (1 - p_B) + c * u + d2 * p_A * p_B;
  const double den = d2 * d2 - inner * inner;
  const double num = c * c * du_dtheta * du_dtheta;
  if (den == 0.0) {
    if (num == 0.0) return 0.0;
    throw std::domain_error("q_ico_depol: singular denominator");
  }
  return num / den;
}

double q_dco_depol_bound(double p_eff, int d, double gap) {
  if (p_eff == 0.0) return 0.0;
  return p_eff * p_eff / (p_eff + (1 - p_eff) / (d / 2.0)) * gap * gap;
}

double ghz_damping_qfi(int n, double p_A, double p_B) {
  if (n < 1) throw std::invalid_argument("ghz_damping_qfi: n must be at least 1");
  const double q = std::pow(p_A * p_B, n);
  return 2 * q / (1 + std::pow(1 - p_A * p_B, n) + q);
}

double dephasing_halfhalf_qfi(double theta, const std::function<double(double)>& re_s) {
  const double h = 1e-5;
  const double d1 = (re_s(theta + h) - re_s(theta - h)) / (2 * h);
  const double d2 = (re_s(theta + h / 2) - re_s(theta - h / 2)) / h;
  const double ds = (4 * d2 - d1) / 3;
  const double s = re_s(theta);
  const double den = 3 - 2 * s - s * s;
  if (den <= 0.0) {
    if (ds == 0.0) return 0.0;
    throw std::domain_error("dephasing_halfhalf_qfi: singular point");
  }
  return ds * ds / den;
}

double q_ico_damp_small_p(double theta, double p_A, double p_B) {
  const double diff = std::sqrt(p_A) - std::sqrt(p_B);
  const double st = std::sin(theta);
  return diff * diff / 4 + st * st * (p_A + p_B + 14 * std::sqrt(p_A * p_B)) / 12;
}

SpinCharacter spin_character(double theta, int two_j) {
  Complex t = 0.0;
  Complex dt = 0.0;
  for (int k = 0; k <= two_j; ++k) {
    const double m = two_j / 2.0 - k;
    const Complex e = std::polar(1.0, theta * m);
    t += e;
    dt += kI * m * e;
  }
  return {std::norm(t), 2 * (std::conj(t) * dt).real()};
}

Matrix3 depol_multi_fisher_noiseless(int d, double u, double du) {
  const double d2 = static_cast<double>(d) * d;
  const double d4 = d2 * d2;
  const double diag = (d4 - 2 * d2 + (u - 2) * u + 2) / (3 * (d4 - 1));
  const double off = 2 * (u - 1) / (3 * (d2 + 1));
  return {{{du * du / (3 * d4 - 3 * u * u), 0.0, 0.0}, {0.0, diag, off}, {0.0, off, diag}}};
}

Matrix2 depol_multi_fisher_large_d(double p_A, double p_B) {
  const double a2 = p_A * p_A;
  const double b2 = p_B * p_B;
  const double off = p_A * p_B / (3 - 3 * a2 * b2);
  return {{{((1 - 2 * a2) * b2 + 1) / (3 * (a2 - 1) * (a2 * b2 - 1)), off},
           {off, ((1 - 2 * b2) * a2 + 1) / (3 * (b2 - 1) * (a2 * b2 - 1))}}};
}

Matrix3 dephase_multi_inverse_half(double theta) {
  const double c = std::cos(theta);
  const double csc = 1 / std::sin(theta);
  const double csc_half2 = 1 / (std::sin(theta / 2) * std::sin(theta / 2));
  const double tp = 1.5 * (c + 3) * csc;
  const double diag = 3 * csc_half2 - 1.5;
  const double off = 0.375 * (c + 3) * csc_half2;
  return {{{3 + 6 / (c + 1), tp, tp}, {tp, diag, off}, {tp, off, diag}}};
}

}  // namespace qswitch

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

#include "qswitch/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qswitch {

namespace {

constexpr double kBaseStep = 1e-5;
constexpr double kExcludedProbability = 1e-14;
constexpr double kExcludedDerivative = 1e-10;
constexpr double kSldCutoff = 1e-10;
constexpr double kRankCutoff = 1e-10;
constexpr double kSingularRatio = 1e-12;

enum class Stencil { kCentral, kForward, kBackward };

struct Step {
  double h;
  Stencil stencil;
};

Step choose_step(const std::string& name, double x) {
  if (!is_probability_param(name)) return {kBaseStep, Stencil::kCentral};
  const double h = std::min({kBaseStep, x / 2, (1.0 - x) / 2});
  if (h > 0.0) return {h, Stencil::kCentral};
  return {kBaseStep, x <= 0.0 ? Stencil::kForward : Stencil::kBackward};
}

std::vector<double> combine(const std::vector<double>& a, double ca, const std::vector<double>& b,
                            double cb) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
  return out;
}

std::vector<double> flatten(const ComplexMatrix& m) {
  std::vector<double> out;
  out.reserve(2 * m.entries().size());
  for (const auto& z : m.entries()) {
    out.push_back(z.real());
    out.push_back(z.imag());
  }
  return out;
}

ComplexMatrix unflatten(const std::vector<double>& v, std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n * n; ++i) m.data()[i] = Complex(v[2 * i], v[2 * i + 1]);
  return m;
}

std::size_t support_rank(const ComplexMatrix& rho) {
  const auto ev = herm_eig(rho).eigenvalues;
  return static_cast<std::size_t>(
      std::count_if(ev.begin(), ev.end(), [](double x) { return x > kRankCutoff; }));
}

}  // namespace

double ParamPoint::at(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw std::invalid_argument("ParamPoint: missing parameter " + name);
  return it->second;
}

double ParamPoint::get(const std::string& name, double fallback) const {
  auto it = values_.find(name);
  return it == values_.end() ? fallback : it->second;
}

bool is_probability_param(const std::string& name) { return !name.empty() && name[0] == 'p'; }

FisherMatrix::FisherMatrix(std::vector<std::string> names, FisherKind kind)
    : names_(std::move(names)), entries_(names_.size() * names_.size(), 0.0), kind_(kind) {}

std::size_t FisherMatrix::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::invalid_argument("FisherMatrix: unknown parameter " + name);
  return static_cast<std::size_t>(it - names_.begin());
}

double FisherMatrix::at(const std::string& a, const std::string& b) const {
  return (*this)(index_of(a), index_of(b));
}

std::vector<double> FisherMatrix::eigenvalues() const {
  ComplexMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) m(i, j) = (*this)(i, j);
  return herm_eig(m).eigenvalues;
}

double FisherMatrix::determinant() const {
  double det = 1.0;
  for (double e : eigenvalues()) det *= e;
  return det;
}

Povm pm_basis_povm(std::size_t d) {
  if (d < 2) throw std::invalid_argument("pm_basis_povm: control dimension must be at least 2");
  Povm povm;
  const double w = 1.0 / (2.0 * static_cast<double>(d - 1));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (int sign : {+1, -1}) {
        ComplexMatrix e(d, d);
        e(i, i) = w;
        e(j, j) = w;
        e(i, j) = sign * w;
        e(j, i) = sign * w;
        povm.elements.push_back(std::move(e));
        povm.labels.push_back(std::to_string(i) + std::to_string(j) + (sign > 0 ? "+" : "-"));
      }
  return povm;
}

Povm imag_basis_povm(std::size_t d) {
  if (d < 2) throw std::invalid_argument("imag_basis_povm: control dimension must be at least 2");
  Povm povm;
  const double w = 1.0 / (2.0 * static_cast<double>(d - 1));
  const Complex iu(0.0, 1.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (int sign : {+1, -1}) {
        // (|i> + s i|j>)(<i| - s i<j|)
        ComplexMatrix e(d, d);
        e(i, i) = w;
        e(j, j) = w;
        e(i, j) = -static_cast<double>(sign) * iu * w;
        e(j, i) = static_cast<double>(sign) * iu * w;
        povm.elements.push_back(std::move(e));
        povm.labels.push_back(std::to_string(i) + std::to_string(j) + (sign > 0 ? "+i" : "-i"));
      }
  return povm;
}

Povm pm_imag_povm(std::size_t d) {
  Povm a = pm_basis_povm(d);
  Povm b = imag_basis_povm(d);
  Povm out;
  for (auto* src : {&a, &b})
    for (std::size_t k = 0; k < src->elements.size(); ++k) {
      out.elements.push_back(0.5 * src->elements[k]);
      out.labels.push_back(src->labels[k]);
    }
  return out;
}

std::vector<double> outcome_probs(const Povm& povm, const ComplexMatrix& rho) {
  std::vector<double> out;
  out.reserve(povm.elements.size());
  for (const auto& e : povm.elements) {
    if (e.rows() != rho.rows() || !rho.is_square()) {
      throw std::invalid_argument("outcome_probs: dimension mismatch");
    }
    double p = trace_product(e, rho).real();
    if (p < 0.0 && p > -1e-12) p = 0.0;
    out.push_back(p);
  }
  return out;
}

std::vector<double> finite_difference(const std::function<std::vector<double>(const ParamPoint&)>& f,
                                      const ParamPoint& at, const std::string& param) {
  const double x = at.at(param);
  const Step step = choose_step(param, x);
  auto eval = [&](double shift) {
    ParamPoint q = at;
    q.set(param, x + shift);
    return f(q);
  };
  auto diff = [&](double h) {
    switch (step.stencil) {
      case Stencil::kCentral:
        return combine(eval(h), 0.5 / h, eval(-h), -0.5 / h);
      case Stencil::kForward:
        return combine(eval(h), 1.0 / h, eval(0.0), -1.0 / h);
      case Stencil::kBackward:
        break;
    }
    return combine(eval(0.0), 1.0 / h, eval(-h), -1.0 / h);
  };
  const auto coarse = diff(step.h);
  const auto fine = diff(step.h / 2);
  if (step.stencil == Stencil::kCentral) return combine(fine, 4.0 / 3.0, coarse, -1.0 / 3.0);
  return combine(fine, 2.0, coarse, -1.0);
}

FisherMatrix classical_fisher(const ProbModel& model, const ParamPoint& at,
                              const std::vector<std::string>& params) {
  const std::vector<double> p = model(at);
  std::vector<std::vector<double>> dp;
  dp.reserve(params.size());
  for (const auto& name : params) {
    dp.push_back(finite_difference(model, at, name));
    if (dp.back().size() != p.size()) {
      throw FisherEvaluationError("classical_fisher: model changed its outcome count");
    }
  }
  FisherMatrix f(params, FisherKind::kClassical);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] < kExcludedProbability) {
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (std::abs(dp[i][x]) >= kExcludedDerivative) {
          std::ostringstream msg;
          msg << "classical_fisher: outcome " << x << " has probability " << p[x]
              << " but derivative " << dp[i][x] << " along " << params[i];
          throw FisherEvaluationError(msg.str());
        }
      }
      continue;
    }
    for (std::size_t i = 0; i < params.size(); ++i)
      for (std::size_t j = i; j < params.size(); ++j) f(i, j) += dp[i][x] * dp[j][x] / p[x];
  }
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) f(i, j) = f(j, i);
  return f;
}

FisherMatrix qfi_matrix(const StateModel& model, const ParamPoint& at,
                        const std::vector<std::string>& params) {
  const ComplexMatrix rho = model(at);
  const std::size_t n = rho.rows();
  const EigenSystem es = herm_eig(rho);
  const std::size_t rank = static_cast<std::size_t>(std::count_if(
      es.eigenvalues.begin(), es.eigenvalues.end(), [](double x) { return x > kRankCutoff; }));
  const ComplexMatrix v = es.eigenvectors;
  const ComplexMatrix vdag = v.adjoint();

  auto flat_model = [&](const ParamPoint& q) {
    const ComplexMatrix r = model(q);
    if (support_rank(r) != rank) {
      throw FisherEvaluationError("qfi_matrix: state rank changes within the difference stencil");
    }
    return flatten(r);
  };

  std::vector<ComplexMatrix> sld;
  sld.reserve(params.size());
  for (const auto& name : params) {
    ComplexMatrix drho = unflatten(finite_difference(flat_model, at, name), n);
    drho = 0.5 * (drho + drho.adjoint());
    const ComplexMatrix d_eig = vdag * drho * v;
    ComplexMatrix l(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = 0; m < n; ++m) {
        const double s = es.eigenvalues[k] + es.eigenvalues[m];
        if (s >= kSldCutoff) l(k, m) = 2.0 * d_eig(k, m) / s;
      }
    sld.push_back(std::move(l));
  }
  FisherMatrix q(params, FisherKind::kQuantum);
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i; j < params.size(); ++j) {
      // In the eigenbasis rho is diag(lambda).
      const ComplexMatrix anti = sld[i] * sld[j] + sld[j] * sld[i];
      double t = 0.0;
      for (std::size_t k = 0; k < n; ++k) t += es.eigenvalues[k] * anti(k, k).real();
      q(i, j) = q(j, i) = 0.5 * t;
    }
  return q;
}

FisherMatrix invert_fisher(const FisherMatrix& f) {
  const std::size_t n = f.size();
  if (n == 0) throw std::invalid_argument("invert_fisher: empty matrix");
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = 0.5 * (f(i, j) + f(j, i));
  const EigenSystem es = herm_eig(m);
  const double lo = es.eigenvalues.front();
  const double hi = es.eigenvalues.back();
  if (!(hi > 0.0) || lo <= kSingularRatio * hi) {
    std::vector<double> null(n);
    std::size_t big = 0;
    for (std::size_t i = 0; i < n; ++i) {
      null[i] = es.eigenvectors(i, 0).real();
      if (std::abs(null[i]) > std::abs(null[big])) big = i;
    }
    if (null[big] < 0) {
      for (auto& x : null) x = -x;
    }
    std::ostringstream msg;
    msg << "singular Fisher matrix; unidentifiable direction (";
    for (std::size_t i = 0; i < n; ++i) {
      msg << (i ? ", " : "") << f.param_names()[i] << ": " << null[i];
    }
    msg << ")";
    throw SingularFisherError(msg.str(), f.param_names(), null);
  }
  FisherMatrix inv(f.param_names(), FisherKind::kCovariance);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        s += (es.eigenvectors(i, k) * std::conj(es.eigenvectors(j, k))).real() / es.eigenvalues[k];
      }
      inv(i, j) = s;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) inv(i, j) = inv(j, i) = 0.5 * (inv(i, j) + inv(j, i));
  return inv;
}

}  // namespace qswitch

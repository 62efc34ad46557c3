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

#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qswitch/matrix.hpp"

namespace qswitch {

/// Named real parameters. Names starting with 'p' are probabilities.
class ParamPoint {
 public:
  ParamPoint() = default;
  ParamPoint(std::initializer_list<std::pair<const std::string, double>> init) : values_(init) {}

  double at(const std::string& name) const;
  double get(const std::string& name, double fallback) const;
  bool has(const std::string& name) const { return values_.count(name) != 0; }
  void set(const std::string& name, double value) { values_[name] = value; }
  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

bool is_probability_param(const std::string& name);

enum class FisherKind { kClassical, kQuantum, kCovariance };

class FisherMatrix {
 public:
  FisherMatrix() = default;
  FisherMatrix(std::vector<std::string> names, FisherKind kind);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& param_names() const { return names_; }
  FisherKind kind() const { return kind_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * size() + j]; }
  double at(const std::string& a, const std::string& b) const;
  std::size_t index_of(const std::string& name) const;

  /// Eigenvalues, ascending.
  std::vector<double> eigenvalues() const;
  double determinant() const;

 private:
  std::vector<std::string> names_;
  std::vector<double> entries_;
  FisherKind kind_ = FisherKind::kClassical;
};

/// Raised when the Fisher matrix has no inverse. Carries the null direction.
class SingularFisherError : public std::runtime_error {
 public:
  SingularFisherError(const std::string& what, std::vector<std::string> names,
                      std::vector<double> null_vector)
      : std::runtime_error(what), names_(std::move(names)), null_vector_(std::move(null_vector)) {}
  const std::vector<std::string>& param_names() const { return names_; }
  const std::vector<double>& null_vector() const { return null_vector_; }

 private:
  std::vector<std::string> names_;
  std::vector<double> null_vector_;
};

/// Raised when the numerical derivative is not trustworthy at the point.
class FisherEvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Povm {
  std::vector<ComplexMatrix> elements;
  std::vector<std::string> labels;
};

/// Projections onto (|i> +- |j>)/sqrt2, weighted 1/(D-1).
Povm pm_basis_povm(std::size_t d);
/// Projections onto (|i> +- i|j>)/sqrt2, weighted 1/(D-1).
Povm imag_basis_povm(std::size_t d);
/// Both POVMs, each weighted 1/2.
Povm pm_imag_povm(std::size_t d);

std::vector<double> outcome_probs(const Povm& povm, const ComplexMatrix& rho);

using ProbModel = std::function<std::vector<double>(const ParamPoint&)>;
using StateModel = std::function<ComplexMatrix(const ParamPoint&)>;

FisherMatrix classical_fisher(const ProbModel& model, const ParamPoint& at,
                              const std::vector<std::string>& params);

FisherMatrix qfi_matrix(const StateModel& model, const ParamPoint& at,
                        const std::vector<std::string>& params);

/// Cramer-Rao covariance bound. Throws SingularFisherError when the smallest
/// eigenvalue is at most 1e-12 times the largest.
FisherMatrix invert_fisher(const FisherMatrix& f);

/// Central or one-sided derivative of a vector-valued function with one
/// Richardson level, using the step rules shared by the Fisher routines.
std::vector<double> finite_difference(const std::function<std::vector<double>(const ParamPoint&)>& f,
                                      const ParamPoint& at, const std::string& param);

}  // namespace qswitch

// Copyright 2026 The Symcos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMCOS_TRANSFORMS_HPP_
#define SYMCOS_TRANSFORMS_HPP_

#include <functional>
#include <span>
#include <vector>

#include "symcos/grids.hpp"
#include "symcos/quadrature.hpp"

namespace symcos {

// Function values on a kind's grid, aligned with LabeledGrid::entries.
struct SampleSet {
  TransformKind kind;
  int N = 0;
  std::vector<double> values;
};

// Expansion coefficients A_k, aligned with LabeledGrid::labels.
struct Spectrum {
  TransformKind kind;
  int N = 0;
  std::vector<double> coefficients;
};

// A_k = norm_k^{-1} sum_s measure_s f(s) basis_k(s). O(|grid|^2).
Spectrum forward(const LabeledGrid& grid, const SampleSet& samples);

// Interpolant psi(x) = sum_k A_k basis_k(x), evaluated anywhere.
class Interpolant {
 public:
  Interpolant(const LabeledGrid& grid, Spectrum spectrum);

  double operator()(std::span<const double> x) const;

  // Reusable per-thread scratch for tight evaluation loops.
  struct Workspace {
    std::vector<double> cos_table;
  };
  double eval(std::span<const double> x, Workspace* ws) const;

  const Spectrum& spectrum() const { return spectrum_; }

 private:
  int n_;
  bool symmetric_;
  bool shifted_;
  std::int64_t max_component_;                 // max integer label component
  std::vector<std::vector<std::int64_t>> keys_;  // label components per entry
  std::vector<double> coeffs_;
  Spectrum spectrum_;
};

// psi(x) for a one-off evaluation.
double inverse(const LabeledGrid& grid, const Spectrum& spectrum,
               std::span<const double> x);

// Weighted discrete inner products of the kind's basis functions; the test
// surface for the discrete orthogonality statements.
std::vector<std::vector<double>> gram_matrix(const LabeledGrid& grid);

// The Gaussian bump exp(-|x-center|^2 / (2 alpha^2) + beta).
std::function<double(std::span<const double>)> model_function(
    double alpha, double beta, std::vector<double> center);

// int_F |f - psi_N|^2 dx with the configured simplex quadrature.
// Throws QuadratureError when the result is non-finite.
double interpolation_error(
    TransformKind kind, int N, int n,
    const std::function<double(std::span<const double>)>& f,
    const QuadratureConfig& cfg = {});

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace symcos

#endif  // SYMCOS_TRANSFORMS_HPP_

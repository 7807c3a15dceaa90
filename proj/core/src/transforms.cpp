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

#include "symcos/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "symcos/kernels.hpp"
#include "symcos/numeric.hpp"

namespace symcos {

Spectrum forward(const LabeledGrid& grid, const SampleSet& samples) {
  if (samples.values.size() != grid.entries.size())
    throw std::invalid_argument("forward: sample count does not match the grid");
  const std::size_t K = grid.labels.size();
  Spectrum spec{grid.kind, grid.N, std::vector<double>(K, 0.0)};

  // independent output entries; distribute across workers
  parallel_chunks(K, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t i = begin; i < end; ++i) {
      const Label basis = grid.basis_label(i);
      const bool sym = grid.kind.symmetric();
      CompensatedSum acc;
      for (std::size_t s = 0; s < grid.entries.size(); ++s) {
        const GridEntry& e = grid.entries[s];
        const double b = sym ? eval_cos_sym(basis, e.xd)
                             : eval_cos_anti(basis, e.xd);
        acc.add(to_double(e.measure) * samples.values[s] * b);
      }
      spec.coefficients[i] = acc.value() / to_double(grid.labels[i].norm);
    }
  });
  return spec;
}

Interpolant::Interpolant(const LabeledGrid& grid, Spectrum spectrum)
    : n_(grid.n),
      symmetric_(grid.kind.symmetric()),
      shifted_(grid.kind.shifted_basis()),
      max_component_(0),
      spectrum_(std::move(spectrum)) {
  if (spectrum_.coefficients.size() != grid.labels.size())
    throw std::invalid_argument("Interpolant: spectrum does not match the grid");
  keys_.reserve(grid.labels.size());
  coeffs_ = spectrum_.coefficients;
  for (const auto& le : grid.labels) {
    std::vector<std::int64_t> key(n_);
    for (int i = 0; i < n_; ++i) {
      key[i] = le.k.integer_component(i);
      max_component_ = std::max(max_component_, key[i]);
    }
    keys_.push_back(std::move(key));
  }
}

double Interpolant::eval(std::span<const double> x, Workspace* ws) const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("Interpolant: point dimension mismatch");
  const std::int64_t values = max_component_ + 1;
  ws->cos_table.resize(static_cast<std::size_t>(values) * n_);
  double* table = ws->cos_table.data();
  const double shift = shifted_ ? 0.5 : 0.0;
  for (std::int64_t v = 0; v < values; ++v)
    for (int j = 0; j < n_; ++j)
      table[v * n_ + j] =
          std::cos(std::numbers::pi * (static_cast<double>(v) + shift) * x[j]);

  const auto& pt = permutations(n_);
  CompensatedSum acc;
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    const auto& k = keys_[i];
    double basis = 0.0;
    for (std::size_t s = 0; s < pt.perms.size(); ++s) {
      const auto& p = pt.perms[s];
      double prod = symmetric_ ? 1.0 : static_cast<double>(pt.signs[s]);
      for (int j = 0; j < n_; ++j) prod *= table[k[p[j]] * n_ + j];
      basis += prod;
    }
    acc.add(coeffs_[i] * basis);
  }
  return acc.value();
}

double Interpolant::operator()(std::span<const double> x) const {
  Workspace ws;
  return eval(x, &ws);
}

double inverse(const LabeledGrid& grid, const Spectrum& spectrum,
               std::span<const double> x) {
  if (spectrum.coefficients.size() != grid.labels.size())
    throw std::invalid_argument("inverse: spectrum does not match the grid");
  CompensatedSum acc;
  for (std::size_t i = 0; i < grid.labels.size(); ++i) {
    const Label basis = grid.basis_label(i);
    const double b = grid.kind.symmetric() ? eval_cos_sym(basis, x)
                                           : eval_cos_anti(basis, x);
    acc.add(spectrum.coefficients[i] * b);
  }
  return acc.value();
}

std::vector<std::vector<double>> gram_matrix(const LabeledGrid& grid) {
  const std::size_t K = grid.labels.size();
  std::vector<std::vector<double>> G(K, std::vector<double>(K, 0.0));

  // basis values at every grid point, once
  std::vector<std::vector<double>> B(K, std::vector<double>(grid.entries.size()));
  parallel_chunks(K, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t i = begin; i < end; ++i) {
      const Label basis = grid.basis_label(i);
      for (std::size_t s = 0; s < grid.entries.size(); ++s)
        B[i][s] = grid.kind.symmetric()
                      ? eval_cos_sym(basis, grid.entries[s].xd)
                      : eval_cos_anti(basis, grid.entries[s].xd);
    }
  });

  std::vector<double> measure(grid.entries.size());
  for (std::size_t s = 0; s < measure.size(); ++s)
    measure[s] = to_double(grid.entries[s].measure);

  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i; j < K; ++j) {
      CompensatedSum acc;
      for (std::size_t s = 0; s < measure.size(); ++s)
        acc.add(measure[s] * B[i][s] * B[j][s]);
      G[i][j] = G[j][i] = acc.value();
    }
  return G;
}

std::function<double(std::span<const double>)> model_function(
    double alpha, double beta, std::vector<double> center) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("model_function: alpha must be positive");
  return [alpha, beta, center = std::move(center)](std::span<const double> x) {
    if (x.size() != center.size())
      throw std::invalid_argument("model_function: dimension mismatch");
    double d2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - center[i];
      d2 += d * d;
    }
    return std::exp(-d2 / (2.0 * alpha * alpha) + beta);
  };
}

double interpolation_error(
    TransformKind kind, int N, int n,
    const std::function<double(std::span<const double>)>& f,
    const QuadratureConfig& cfg) {
  const LabeledGrid grid = point_grid(kind, N, n);
  SampleSet samples{kind, N, {}};
  samples.values.reserve(grid.entries.size());
  for (const auto& e : grid.entries) samples.values.push_back(f(e.xd));
  const Interpolant psi(grid, forward(grid, samples));

  std::vector<Interpolant::Workspace> scratch(worker_count());
  const double err = integrate_simplex_chunked(
      n,
      [&](std::span<const double> x, std::size_t chunk) {
        const double d = f(x) - psi.eval(x, &scratch[chunk]);
        return d * d;
      },
      cfg);
  if (!std::isfinite(err))
    throw QuadratureError("interpolation_error: quadrature did not converge");
  return err;
}

}  // namespace symcos

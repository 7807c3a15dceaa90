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

#include "symcos/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "symcos/numeric.hpp"

namespace symcos {

void gauss_legendre_01(int m, std::vector<double>* nodes,
                       std::vector<double>* weights) {
  if (m < 1) throw std::invalid_argument("gauss_legendre_01: m must be >= 1");
  nodes->assign(m, 0.0);
  weights->assign(m, 0.0);
  // Newton iteration on P_m over [-1, 1]; nodes are symmetric.
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= m; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    (*nodes)[i] = 0.5 * (1.0 - x);  // map [-1,1] -> [0,1], ascending
    (*nodes)[m - 1 - i] = 0.5 * (1.0 + x);
    (*weights)[i] = 0.5 * w;
    (*weights)[m - 1 - i] = 0.5 * w;
  }
}

void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t,
                                              std::size_t)>& body,
                     std::size_t num_chunks) {
  if (count == 0) return;
  const unsigned workers = worker_count();
  if (num_chunks == 0) num_chunks = workers;
  num_chunks = std::min<std::size_t>(num_chunks, count);
  if (num_chunks <= 1) {
    body(0, count, 0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(num_chunks);
  const std::size_t step = (count + num_chunks - 1) / num_chunks;
  for (std::size_t c = 0; c < num_chunks; ++c) {
    const std::size_t begin = c * step;
    const std::size_t end = std::min(count, begin + step);
    if (begin >= end) break;
    threads.emplace_back([&body, begin, end, c] { body(begin, end, c); });
  }
  for (auto& t : threads) t.join();
}

double integrate_simplex_chunked(
    int n,
    const std::function<double(std::span<const double>, std::size_t)>& f,
    const QuadratureConfig& cfg) {
  if (n < 1) throw std::invalid_argument("integrate_simplex: n must be >= 1");
  const int m = cfg.points_per_axis;
  std::vector<double> u, w;
  gauss_legendre_01(m, &u, &w);

  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(m);

  const unsigned workers = worker_count();
  std::vector<double> partial(workers, 0.0);
  parallel_chunks(
      total,
      [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        CompensatedSum acc;
        std::vector<double> x(n);
        std::vector<std::size_t> idx(n);
        for (std::size_t flat = begin; flat < end; ++flat) {
          std::size_t rem = flat;
          for (int i = n - 1; i >= 0; --i) {
            idx[i] = rem % m;
            rem /= m;
          }
          double weight = 1.0;
          double prod = 1.0;
          for (int i = 0; i < n; ++i) {
            weight *= w[idx[i]];
            prod *= u[idx[i]];
            x[i] = prod;
            // cube-map Jacobian: u_1^{n-1} u_2^{n-2} ... u_{n-1}
            for (int e = 0; e < n - 1 - i; ++e) weight *= u[idx[i]];
          }
          acc.add(weight * f(x, chunk));
        }
        partial[chunk] = acc.value();
      },
      workers);

  CompensatedSum out;
  for (double p : partial) out.add(p);
  return out.value();
}

double integrate_simplex(int n,
                         const std::function<double(std::span<const double>)>& f,
                         const QuadratureConfig& cfg) {
  return integrate_simplex_chunked(
      n, [&f](std::span<const double> x, std::size_t) { return f(x); }, cfg);
}

}  // namespace symcos

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

#ifndef SYMCOS_QUADRATURE_HPP_
#define SYMCOS_QUADRATURE_HPP_

#include <functional>
#include <span>

namespace symcos {

struct QuadratureConfig {
  int points_per_axis = 48;
};

// Integral of f over the simplex 1 >= x_1 >= ... >= x_n >= 0, by mapping the
// unit cube through x_1 = u_1, x_2 = u_1 u_2, ..., x_n = u_1...u_n (Jacobian
// u_1^{n-1} u_2^{n-2} ... u_{n-1}) and tensor Gauss-Legendre.
double integrate_simplex(
    int n, const std::function<double(std::span<const double>)>& f,
    const QuadratureConfig& cfg = {});

// Variant passing the worker chunk index, so callers can keep per-thread
// scratch state.
double integrate_simplex_chunked(
    int n,
    const std::function<double(std::span<const double>, std::size_t chunk)>& f,
    const QuadratureConfig& cfg = {});

}  // namespace symcos

#endif  // SYMCOS_QUADRATURE_HPP_

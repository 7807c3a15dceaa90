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

#include "symcos/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace symcos {

namespace {

void check_dims(const Label& label, std::span<const double> x) {
  if (label.dim() != static_cast<int>(x.size()))
    throw std::invalid_argument("cosine kernel: label/point dimension mismatch");
  if (label.dim() < 1 || label.dim() > kMaxDim)
    throw std::invalid_argument("cosine kernel: dimension outside [1, 8]");
}

using CosTable = std::array<std::array<double, kMaxDim>, kMaxDim>;

// table[i][j] = cos(pi * label_i * x_j)
void fill_table(const Label& label, std::span<const double> x, CosTable* t) {
  const int n = label.dim();
  for (int i = 0; i < n; ++i) {
    const double li = 0.5 * static_cast<double>(label.twice(i));
    for (int j = 0; j < n; ++j)
      (*t)[i][j] = std::cos(std::numbers::pi * li * x[j]);
  }
}

double lu_determinant(CosTable& m, int n) {
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    if (m[c][c] == 0.0) return 0.0;
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      const double f = m[r][c] / m[c][c];
      for (int k = c + 1; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace

const PermutationTable& permutations(int n) {
  static std::array<PermutationTable, kMaxDim + 1> cache;
  static std::array<std::once_flag, kMaxDim + 1> flags;
  if (n < 1 || n > kMaxDim)
    throw std::invalid_argument("permutations: dimension outside [1, 8]");
  std::call_once(flags[n], [n] {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    PermutationTable t;
    do {
      int sign = 1;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (p[i] > p[j]) sign = -sign;
      t.perms.push_back(p);
      t.signs.push_back(sign);
    } while (std::next_permutation(p.begin(), p.end()));
    cache[n] = std::move(t);
  });
  return cache[n];
}

double eval_cos_sym(const Label& label, std::span<const double> x) {
  check_dims(label, x);
  const int n = label.dim();
  CosTable t;
  fill_table(label, x, &t);
  const auto& pt = permutations(n);
  double sum = 0.0;
  for (const auto& p : pt.perms) {
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= t[p[i]][i];
    sum += prod;
  }
  return sum;
}

double eval_cos_anti_enumerated(const Label& label, std::span<const double> x) {
  check_dims(label, x);
  const int n = label.dim();
  CosTable t;
  fill_table(label, x, &t);
  const auto& pt = permutations(n);
  double sum = 0.0;
  for (std::size_t s = 0; s < pt.perms.size(); ++s) {
    const auto& p = pt.perms[s];
    double prod = pt.signs[s];
    for (int i = 0; i < n; ++i) prod *= t[p[i]][i];
    sum += prod;
  }
  return sum;
}

double eval_cos_anti_determinant(const Label& label, std::span<const double> x) {
  check_dims(label, x);
  const int n = label.dim();
  CosTable t;
  fill_table(label, x, &t);
  return lu_determinant(t, n);
}

double eval_cos_anti(const Label& label, std::span<const double> x) {
  return label.dim() >= 6 ? eval_cos_anti_determinant(label, x)
                          : eval_cos_anti_enumerated(label, x);
}

double eval_special_product(SpecialProduct which, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  if (n < 1 || n > kMaxDim)
    throw std::invalid_argument("eval_special_product: dimension outside [1, 8]");
  const double half_pi = 0.5 * std::numbers::pi;
  if (which == SpecialProduct::rho_sym) {
    double p = 1.0;
    for (int i = 2; i <= n; ++i) p *= i;
    for (int i = 0; i < n; ++i) p *= std::cos(half_pi * x[i]);
    return p;
  }
  const int k = (n % 2 == 1) ? (n - 1) / 2 : n / 2;
  double pair_prod = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      pair_prod *= std::sin(half_pi * (x[i] + x[j])) *
                   std::sin(half_pi * (x[i] - x[j]));
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  if (which == SpecialProduct::rho1_anti)
    return sign * std::ldexp(pair_prod, (n - 1) * (n - 1));
  double cos_prod = 1.0;
  for (int i = 0; i < n; ++i) cos_prod *= std::cos(half_pi * x[i]);
  return sign * std::ldexp(cos_prod * pair_prod, n * (n - 1));
}

std::vector<double> fundamental_fold(std::span<const double> x) {
  // mod-2 reduction, then sign flip, then sort: each step preserves the
  // symmetric cosine values with integer labels.
  std::vector<double> y(x.begin(), x.end());
  for (auto& v : y) {
    v = std::fmod(v, 2.0);
    if (v < 0.0) v += 2.0;
    if (v > 1.0) v = 2.0 - v;
  }
  std::sort(y.begin(), y.end(), std::greater<>());
  return y;
}

bool in_fundamental_domain(std::span<const double> x, double tol) {
  double prev = 1.0 + tol;
  for (double v : x) {
    if (v > prev + tol || v < -tol) return false;
    prev = v;
  }
  return true;
}

}  // namespace symcos

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

#include "symcos/grids.hpp"

#include <algorithm>
#include <stdexcept>

namespace symcos {

namespace {

// Per-kind grid geometry. c-coefficients are always taken at the threshold N
// of the label range actually used by the kind.
struct KindInfo {
  int label_range;              // labels/indices run over [0, label_range-1]
  int c_threshold;              // c_r halves at r = 0 and r = c_threshold
  Rational x_num_offset;        // x = (2r + off) / x_den  as exact rational
  std::int64_t x_den;
  int eps_shift;                // eps uses c_{r + eps_shift}; -1 => eps = 1
};

KindInfo kind_info(DctType t, int N) {
  switch (t) {
    case DctType::I:    return {N + 1, N, Rational(0), 2L * N, 0};
    case DctType::II:   return {N, N, Rational(1), 2L * N, -1};
    case DctType::III:  return {N, N, Rational(0), 2L * N, 0};
    case DctType::IV:   return {N, N, Rational(1), 2L * N, -1};
    case DctType::V:    return {N, N, Rational(0), 2L * N - 1, 0};
    case DctType::VI:   return {N, N, Rational(1), 2L * N - 1, 1};
    case DctType::VII:  return {N, N, Rational(0), 2L * N - 1, 0};
    case DctType::VIII: return {N, N, Rational(1), 2L * N + 1, -1};
  }
  throw std::logic_error("kind_info");
}

// Descending-lexicographic enumeration of D_M^+/- restricted tuples.
void enumerate_decreasing(int M, int n, bool strict,
                          std::vector<std::vector<std::int64_t>>* out) {
  std::vector<std::int64_t> cur(n);
  auto rec = [&](auto&& self, int depth, std::int64_t hi) -> void {
    if (depth == n) {
      out->push_back(cur);
      return;
    }
    for (std::int64_t v = hi; v >= 0; --v) {
      cur[depth] = v;
      self(self, depth + 1, strict ? v - 1 : v);
    }
  };
  rec(rec, 0, M - 1);
}

}  // namespace

std::string TransformKind::str() const {
  return to_string(type) + (symmetric() ? "/sym" : "/anti");
}

std::string to_string(DctType t) {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII"};
  return names[static_cast<int>(t) - 1];
}

std::string to_string(Symmetry s) {
  return s == Symmetry::symmetric ? "sym" : "anti";
}

DctType dct_type_from_string(const std::string& s) {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII"};
  for (int i = 0; i < 8; ++i)
    if (s == names[i]) return static_cast<DctType>(i + 1);
  throw std::invalid_argument("unknown DCT type '" + s + "'");
}

Symmetry symmetry_from_string(const std::string& s) {
  if (s == "sym" || s == "symmetric") return Symmetry::symmetric;
  if (s == "anti" || s == "antisymmetric") return Symmetry::antisymmetric;
  throw std::invalid_argument("unknown symmetry '" + s + "'");
}

std::vector<TransformKind> all_transform_kinds() {
  std::vector<TransformKind> out;
  for (int t = 1; t <= 8; ++t)
    for (Symmetry s : {Symmetry::symmetric, Symmetry::antisymmetric})
      out.push_back({static_cast<DctType>(t), s});
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Label> label_set(TransformKind kind, int N, int n) {
  if (N < 1 || n < 1) throw std::invalid_argument("label_set: N, n must be >= 1");
  const KindInfo info = kind_info(kind.type, N);
  std::vector<std::vector<std::int64_t>> tuples;
  enumerate_decreasing(info.label_range, n, !kind.symmetric(), &tuples);
  std::vector<Label> out;
  out.reserve(tuples.size());
  for (auto& t : tuples) out.push_back(Label::integers(std::move(t)));
  return out;
}

Rational spectral_norm(TransformKind kind, const Label& k, int N) {
  const int n = k.dim();
  const KindInfo info = kind_info(kind.type, N);
  if (!k.integral() || !k.is_canonical())
    throw std::invalid_argument("spectral_norm: label must be canonical integer");
  for (int i = 0; i < n; ++i) {
    const std::int64_t ki = k.integer_component(i);
    if (ki < 0 || ki >= info.label_range)
      throw std::invalid_argument("spectral_norm: label outside the kind's set");
  }
  if (!kind.symmetric() && !k.strictly_decreasing())
    throw std::invalid_argument("spectral_norm: label outside the kind's set");

  Rational base;
  switch (kind.type) {
    case DctType::I:
    case DctType::II:
    case DctType::III:
    case DctType::IV:
      base = rational(N, 2);
      break;
    case DctType::V:
    case DctType::VI:
    case DctType::VII:
      base = rational(2L * N - 1, 4);
      break;
    case DctType::VIII:
      base = rational(2L * N + 1, 4);
      break;
  }
  Rational norm = 1;
  for (int i = 0; i < n; ++i) norm *= base;

  // spectral-side c-product: d_k for I, II, V, VI; d~_k for VII; none for
  // III, IV, VIII.
  Rational d = 1;
  switch (kind.type) {
    case DctType::I:
    case DctType::II:
    case DctType::V:
    case DctType::VI:
      for (int i = 0; i < n; ++i)
        d *= c_coefficient(k.integer_component(i), info.c_threshold);
      break;
    case DctType::VII:
      for (int i = 0; i < n; ++i)
        d *= c_coefficient(k.integer_component(i) + 1, info.c_threshold);
      break;
    default:
      break;
  }
  norm /= d;
  if (kind.symmetric()) norm *= stabilizer_order(k);
  return norm;
}

LabeledGrid point_grid(TransformKind kind, int N, int n) {
  if (N < 1 || n < 1)
    throw std::invalid_argument("point_grid: N, n must be >= 1");
  const KindInfo info = kind_info(kind.type, N);
  LabeledGrid g;
  g.kind = kind;
  g.N = N;
  g.n = n;

  std::vector<std::vector<std::int64_t>> tuples;
  enumerate_decreasing(info.label_range, n, !kind.symmetric(), &tuples);

  for (const auto& t : tuples) {
    LabelEntry le;
    le.k = Label::integers(t);
    le.norm = spectral_norm(kind, le.k, N);
    g.labels.push_back(std::move(le));
  }

  // entries ascend lexicographically in r
  std::reverse(tuples.begin(), tuples.end());
  for (auto& r : tuples) {
    GridEntry e;
    e.eps = 1;
    e.x.reserve(n);
    e.xd.reserve(n);
    for (int i = 0; i < n; ++i) {
      Rational xi = (Rational(2 * r[i]) + info.x_num_offset) / info.x_den;
      xi.canonicalize();
      e.xd.push_back(to_double(xi));
      e.x.push_back(std::move(xi));
      if (info.eps_shift >= 0)
        e.eps *= c_coefficient(r[i] + info.eps_shift, info.c_threshold);
    }
    e.stabilizer = stabilizer_order(Label::integers(r));
    e.measure = kind.symmetric() ? e.eps / e.stabilizer : e.eps;
    e.r = std::move(r);
    g.entries.push_back(std::move(e));
  }
  return g;
}

Label LabeledGrid::basis_label(std::size_t i) const {
  const Label& k = labels[i].k;
  if (!kind.shifted_basis()) return k;
  return k.shifted_by(Label::rho(n));
}

}  // namespace symcos

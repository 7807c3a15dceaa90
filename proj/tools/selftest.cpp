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

#include "selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "symcos/cubature.hpp"
#include "symcos/grids.hpp"
#include "symcos/kernels.hpp"
#include "symcos/numeric.hpp"
#include "symcos/polynomial.hpp"
#include "symcos/transforms.hpp"

#include "golden_tables.inc"

namespace symcos::selftest {

namespace {

struct Reporter {
  int failures = 0;
  void check(const std::string& name, bool ok, double worst) {
    std::printf("  [%s] %-40s worst %.3e\n", ok ? "ok" : "FAIL", name.c_str(),
                worst);
    if (!ok) ++failures;
  }
};

bool want(const Options& o, const std::string& suite) {
  return o.suite == "all" || o.suite == suite;
}

void run_kernels(const Options& o, Reporter* rep) {
  std::mt19937 rng(o.seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  double worst = 0.0;
  for (int n = 1; n <= std::min(o.n + 1, 4); ++n)
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> x(n);
      for (auto& v : x) v = coord(rng);
      worst = std::max(worst,
                       std::abs(eval_special_product(SpecialProduct::rho_sym, x) -
                                eval_cos_sym(Label::rho(n), x)));
      worst = std::max(worst,
                       std::abs(eval_special_product(SpecialProduct::rho1_anti, x) -
                                eval_cos_anti(Label::rho1(n), x)));
      worst = std::max(worst,
                       std::abs(eval_special_product(SpecialProduct::rho2_anti, x) -
                                eval_cos_anti(Label::rho2(n), x)));
    }
  rep->check("special product forms", worst <= 1e-12, worst);

  double worst_fold = 0.0;
  std::uniform_real_distribution<double> wide(-3.0, 3.0);
  std::uniform_int_distribution<int> comp(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % std::max(1, o.n);
    std::vector<double> x(n);
    for (auto& v : x) v = wide(rng);
    std::vector<std::int64_t> k(n);
    for (auto& v : k) v = comp(rng);
    const auto folded = fundamental_fold(x);
    const Label lab = Label::integers(k);
    worst_fold = std::max(worst_fold, std::abs(eval_cos_sym(lab, folded) -
                                               eval_cos_sym(lab, x)));
  }
  rep->check("fundamental fold invariance", worst_fold <= 1e-10, worst_fold);
}

void run_gram(const Options& o, Reporter* rep) {
  double worst = 0.0;
  for (const auto kind : all_transform_kinds())
    for (int n = 1; n <= o.n; ++n)
      for (int N = 2; N <= o.N; ++N) {
        if (!kind.symmetric() && N < n + 1) continue;
        const auto g = point_grid(kind, N, n);
        if (g.entries.empty()) continue;
        const auto G = gram_matrix(g);
        double scale = 0.0;
        for (std::size_t i = 0; i < G.size(); ++i)
          scale = std::max(scale, std::abs(G[i][i]));
        for (std::size_t i = 0; i < G.size(); ++i)
          for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) {
              const double d = to_double(g.labels[i].norm);
              worst = std::max(worst, std::abs(G[i][i] - d) / std::abs(d));
            } else {
              worst = std::max(worst, std::abs(G[i][j]) / scale);
            }
          }
      }
  rep->check("discrete orthogonality (16 kinds)", worst <= 1e-10, worst);
}

void run_roundtrip(const Options& o, Reporter* rep) {
  std::mt19937 rng(o.seed + 1);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  double worst = 0.0;
  for (const auto kind : all_transform_kinds())
    for (int n = 1; n <= o.n; ++n)
      for (int N = std::max(2, n + 1); N <= o.N; ++N) {
        const auto g = point_grid(kind, N, n);
        if (g.entries.empty()) continue;
        SampleSet s{kind, N, {}};
        for (std::size_t i = 0; i < g.entries.size(); ++i)
          s.values.push_back(val(rng));
        const Spectrum spec = forward(g, s);
        const Interpolant psi(g, spec);
        for (std::size_t i = 0; i < g.entries.size(); ++i)
          worst = std::max(worst, std::abs(psi(g.entries[i].xd) - s.values[i]));
      }
  rep->check("forward/inverse round trip", worst <= 1e-10, worst);
}

void run_tables(const Options&, Reporter* rep) {
  int mismatches = 0;
  for (const auto& row : golden_table_rows()) {
    RationalPolynomial want(3);
    for (const auto& t : row.terms)
      want.add_term({t.a1, t.a2, t.a3}, rational(t.num, t.den));
    const RationalPolynomial& got =
        family_polynomial(row.fam, Label::integers({row.k1, row.k2, row.k3}));
    if (!(got == want)) ++mismatches;
  }
  rep->check("polynomial coefficient tables (exact)", mismatches == 0,
             static_cast<double>(mismatches));
}

void run_jacobian(const Options& o, Reporter* rep) {
  std::mt19937 rng(o.seed + 2);
  std::uniform_real_distribution<double> coord(0.05, 0.95);
  double worst = 0.0;
  for (int n = 1; n <= o.n; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> x(n);
      for (auto& v : x) v = coord(rng);
      std::sort(x.begin(), x.end(), std::greater<>());
      bool close = false;
      for (int i = 0; i + 1 < n && !close; ++i)
        close = x[i] - x[i + 1] < 1e-3;
      if (close) continue;
      const double h = 1e-6;
      std::vector<std::vector<double>> J(n, std::vector<double>(n));
      for (int c = 0; c < n; ++c) {
        auto xp = x, xm = x;
        xp[c] += h;
        xm[c] -= h;
        const auto Xp = phi_map(xp), Xm = phi_map(xm);
        for (int r = 0; r < n; ++r) J[r][c] = (Xp[r] - Xm[r]) / (2 * h);
      }
      double det = 1.0;
      for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
          if (std::abs(J[r][c]) > std::abs(J[p][c])) p = r;
        if (p != c) {
          std::swap(J[p], J[c]);
          det = -det;
        }
        det *= J[c][c];
        for (int r = c + 1; r < n; ++r) {
          const double f = J[r][c] / J[c][c];
          for (int k2 = c + 1; k2 < n; ++k2) J[r][k2] -= f * J[c][k2];
        }
      }
      worst = std::max(worst, std::abs(jacobian_eval(x) - det) /
                                  (1.0 + std::abs(det)));
    }
  rep->check("jacobian vs finite differences", worst <= 1e-6, worst);
}

void run_cubature(const Options& o, Reporter* rep) {
  std::mt19937 rng(o.seed + 3);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  double worst = 0.0;
  for (Family fam : {Family::I_plus, Family::I_minus, Family::III_plus,
                     Family::III_minus}) {
    for (DctType t : {DctType::I, DctType::II, DctType::III, DctType::IV,
                      DctType::V, DctType::VI, DctType::VII, DctType::VIII}) {
      const TransformKind kind{t, family_symmetric(fam)
                                      ? Symmetry::symmetric
                                      : Symmetry::antisymmetric};
      if (!pairing_supported(fam, kind)) continue;
      const int n = std::min(o.n, 3);
      const int N = std::max(o.N, pairing_min_N(fam, t, n));
      const auto rule = build_rule(fam, kind, N, n);
      std::uniform_int_distribution<int> axis(0, n - 1);
      std::uniform_int_distribution<int> deg(0, rule.exact_degree);
      for (int trial = 0; trial < 10; ++trial) {
        RationalPolynomial f(n);
        for (int term = 0; term < 5; ++term) {
          Exponents a(n, 0);
          const int d = deg(rng);
          for (int i = 0; i < d; ++i) ++a[axis(rng)];
          f.add_term(a, rational(num(rng), den(rng)));
        }
        const double got = integrate(rule, f);
        const double oracle = to_double(exact_integral(fam, f, n));
        worst = std::max(worst,
                         std::abs(got - oracle) / (1.0 + std::abs(oracle)));
      }
    }
  }
  rep->check("cubature exactness (16 pairings)", worst <= 1e-9, worst);
}

}  // namespace

int run(const Options& opts) {
  Reporter rep;
  if (want(opts, "kernels")) run_kernels(opts, &rep);
  if (want(opts, "gram")) run_gram(opts, &rep);
  if (want(opts, "roundtrip")) run_roundtrip(opts, &rep);
  if (want(opts, "tables")) run_tables(opts, &rep);
  if (want(opts, "jacobian")) run_jacobian(opts, &rep);
  if (want(opts, "cubature")) run_cubature(opts, &rep);
  std::printf("%s\n", rep.failures == 0 ? "selftest: all suites passed"
                                        : "selftest: FAILURES");
  return rep.failures;
}

}  // namespace symcos::selftest

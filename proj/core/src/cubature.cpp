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

#include "symcos/cubature.hpp"

#include <stdexcept>

#include "symcos/kernels.hpp"
#include "symcos/numeric.hpp"

namespace symcos {

namespace {

bool family_uses_type(Family f, DctType t) {
  const bool first_kind = (f == Family::I_plus || f == Family::I_minus);
  switch (t) {
    case DctType::I:
    case DctType::II:
    case DctType::V:
    case DctType::VI:
      return first_kind;
    case DctType::III:
    case DctType::IV:
    case DctType::VII:
    case DctType::VIII:
      return !first_kind;
  }
  return false;
}

void require_supported(Family family, TransformKind kind) {
  if (!pairing_supported(family, kind))
    throw std::invalid_argument("cubature: unsupported (family, kind) pairing");
}

double seed_squared_at(Family f, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  switch (f) {
    case Family::I_plus:
      return 1.0;
    case Family::I_minus: {
      const double v = eval_cos_anti(Label::rho1(n), x);
      return v * v;
    }
    case Family::III_plus: {
      const double v = eval_cos_sym(Label::rho(n), x);
      return v * v;
    }
    case Family::III_minus: {
      const double v = eval_cos_anti(Label::rho2(n), x);
      return v * v;
    }
  }
  throw std::logic_error("seed_squared_at");
}

bool formula_has_jacobian_factor(Family f) { return f != Family::I_plus; }

}  // namespace

bool pairing_supported(Family family, TransformKind kind) {
  if (!family_uses_type(family, kind.type)) return false;
  return family_symmetric(family) == kind.symmetric();
}

int pairing_min_N(Family family, DctType type, int n) {
  const bool gaussian_grid = (type == DctType::II || type == DctType::VIII);
  const bool type_I_or = (type == DctType::I);
  switch (family) {
    case Family::I_plus:
    case Family::III_plus:
      // N >= 1 for the Gaussian grids and type I; N >= 2 otherwise
      return (gaussian_grid || type_I_or) ? 1 : 2;
    case Family::I_minus:
    case Family::III_minus:
      // N >= n for the Gaussian grids and type I; N > n otherwise
      return (gaussian_grid || type_I_or) ? n : n + 1;
  }
  throw std::logic_error("pairing_min_N");
}

int degree_of_exactness(Family family, TransformKind kind, int N, int n) {
  require_supported(family, kind);
  if (N < pairing_min_N(family, kind.type, n))
    throw std::invalid_argument("degree_of_exactness: N below the stated range");
  const bool gaussian_grid =
      (kind.type == DctType::II || kind.type == DctType::VIII);
  switch (family) {
    case Family::I_plus:
      // 2N-1 on the Gaussian grid and type I; 2(N-1) on V, VI
      return (gaussian_grid || kind.type == DctType::I) ? 2 * N - 1
                                                        : 2 * (N - 1);
    case Family::III_plus:
      if (gaussian_grid) return 2 * N - 1;
      return kind.type == DctType::VII ? 2 * (N - 1) - 1 : 2 * (N - 1);
    case Family::I_minus:
      return (gaussian_grid || kind.type == DctType::I) ? 2 * (N - n) + 1
                                                        : 2 * (N - n);
    case Family::III_minus:
      if (gaussian_grid) return 2 * (N - n) + 1;
      return kind.type == DctType::VII ? 2 * (N - n) - 1 : 2 * (N - n);
  }
  throw std::logic_error("degree_of_exactness");
}

CubatureRule build_rule(Family family, TransformKind kind, int N, int n) {
  require_supported(family, kind);
  CubatureRule rule;
  rule.family = family;
  rule.kind = kind;
  rule.N = N;
  rule.n = n;
  rule.exact_degree = degree_of_exactness(family, kind, N, n);

  // grid prefactor: (1/N)^n for types I-IV, (2/(2N-1))^n or (2/(2N+1))^n
  Rational pref = 1;
  Rational axis;
  switch (kind.type) {
    case DctType::I:
    case DctType::II:
    case DctType::III:
    case DctType::IV:
      axis = rational(1, N);
      break;
    case DctType::V:
    case DctType::VI:
    case DctType::VII:
      axis = rational(2, 2L * N - 1);
      break;
    case DctType::VIII:
      axis = rational(2, 2L * N + 1);
      break;
  }
  for (int i = 0; i < n; ++i) pref *= axis;

  // epsilon enters except on the unit-weight grids (II, IV, VIII)
  const bool use_eps = !(kind.type == DctType::II || kind.type == DctType::IV ||
                         kind.type == DctType::VIII);
  const bool jac = formula_has_jacobian_factor(family);

  const LabeledGrid grid = point_grid(kind, N, n);
  rule.nodes.reserve(grid.entries.size());
  for (const auto& e : grid.entries) {
    CubatureNode node;
    node.preimage = e.xd;
    node.Y = phi_map(e.xd);
    node.comb_weight = pref;
    if (use_eps) node.comb_weight *= e.eps;
    if (kind.symmetric()) node.comb_weight /= e.stabilizer;
    node.j_part = jac ? seed_squared_at(family, e.xd) : 1.0;
    node.weight = to_double(node.comb_weight) * node.j_part;
    rule.nodes.push_back(std::move(node));
  }
  return rule;
}

double integrate(const CubatureRule& rule, const RationalPolynomial& f) {
  if (f.dim() != rule.n)
    throw std::invalid_argument("integrate: polynomial arity mismatch");
  CompensatedSum acc;
  for (const auto& node : rule.nodes) acc.add(node.weight * f.eval(node.Y));
  return acc.value();
}

Rational exact_integral(Family family, const RationalPolynomial& f, int n) {
  if (f.dim() != n)
    throw std::invalid_argument("exact_integral: polynomial arity mismatch");
  // u = expansion of f o X in integer symmetric cosines
  CosExpansion u(CosBasis::sym_int);
  for (const auto& [alpha, c] : f.terms())
    u.add_scaled(monomial_to_cos(Family::I_plus, alpha), c);
  // v = expansion of seed^2; for I+ the square of the constant seed
  CosExpansion v(CosBasis::sym_int);
  {
    const CosExpansion& s0 = monomial_to_cos(family, Exponents(n, 0));
    for (const auto& [la, ca] : s0.terms())
      for (const auto& [lb, cb] : s0.terms())
        v.add_scaled(product_rule(la, s0.basis(), lb, s0.basis()), ca * cb);
  }
  // int over F of the product: sum_l u_l v_l h_l H_l by continuous
  // orthogonality of the integer symmetric cosines
  Rational total = 0;
  for (const auto& [lab, uc] : u.terms()) {
    const Rational vc = v.coefficient(lab);
    if (vc == 0) continue;
    total += uc * vc * h_weight(lab) * stabilizer_order(lab);
  }
  return total;
}

std::vector<Label> labels_with_first(int first, int n) {
  std::vector<Label> out;
  std::vector<std::int64_t> cur(n);
  cur[0] = first;
  auto rec = [&](auto&& self, int depth, std::int64_t hi) -> void {
    if (depth == n) {
      out.push_back(Label::integers(cur));
      return;
    }
    for (std::int64_t v = hi; v >= 0; --v) {
      cur[depth] = v;
      self(self, depth + 1, v);
    }
  };
  if (n == 1) {
    out.push_back(Label::integers(cur));
    return out;
  }
  rec(rec, 1, first);
  return out;
}

double node_vanishing_check(Family family, TransformKind kind, int N, int n) {
  require_supported(family, kind);
  if (kind.type != DctType::II && kind.type != DctType::VIII)
    throw std::invalid_argument("node_vanishing_check: not a Gaussian pairing");
  const int k1 = family_symmetric(family) ? N : N - n + 1;
  if (k1 < 0) throw std::invalid_argument("node_vanishing_check: N too small");
  const CubatureRule rule = build_rule(family, kind, N, n);
  double worst = 0.0;
  for (const Label& k : labels_with_first(k1, n)) {
    const RationalPolynomial& p = family_polynomial(family, k);
    for (const auto& node : rule.nodes)
      worst = std::max(worst, std::abs(p.eval(node.Y)));
  }
  return worst;
}

}  // namespace symcos

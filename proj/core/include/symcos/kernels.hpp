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

#ifndef SYMCOS_KERNELS_HPP_
#define SYMCOS_KERNELS_HPP_

#include <span>
#include <vector>

#include "symcos/label.hpp"

namespace symcos {

// Dimensions are capped here; the permanent path enumerates S_n.
inline constexpr int kMaxDim = 8;

// Permanent-form symmetric cosine: sum over S_n of prod_i cos(pi l_{s(i)} x_i).
double eval_cos_sym(const Label& label, std::span<const double> x);

// Determinant-form antisymmetric cosine. Uses S_n enumeration for small n and
// the O(n^3) numeric determinant for n >= 6.
double eval_cos_anti(const Label& label, std::span<const double> x);

// The two evaluation routes, exposed for agreement checks.
double eval_cos_anti_enumerated(const Label& label, std::span<const double> x);
double eval_cos_anti_determinant(const Label& label, std::span<const double> x);

// Closed product forms of cos^-_{rho1}, cos^-_{rho2}, cos^+_{rho}.
enum class SpecialProduct { rho1_anti, rho2_anti, rho_sym };
double eval_special_product(SpecialProduct which, std::span<const double> x);

// Unique point of the closed fundamental domain 1 >= x_1 >= ... >= x_n >= 0
// reachable from x by 2Z^n shifts, sign flips, and permutations.
std::vector<double> fundamental_fold(std::span<const double> x);

bool in_fundamental_domain(std::span<const double> x, double tol = 0.0);

// Permutations of {0..n-1} with signs, in lexicographic order. Cached.
struct PermutationTable {
  std::vector<std::vector<int>> perms;
  std::vector<int> signs;
};
const PermutationTable& permutations(int n);

}  // namespace symcos

#endif  // SYMCOS_KERNELS_HPP_

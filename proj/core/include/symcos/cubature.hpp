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

#ifndef SYMCOS_CUBATURE_HPP_
#define SYMCOS_CUBATURE_HPP_

#include <vector>

#include "symcos/grids.hpp"
#include "symcos/polynomial.hpp"

namespace symcos {

struct CubatureNode {
  std::vector<double> Y;        // node in X-space, the image of the grid point
  std::vector<double> preimage; // the grid point s with phi(s) = Y
  Rational comb_weight;         // exact combinatorial factor of the weight
  double j_part = 1.0;          // seed(s)^2 where the formula carries a J-poly
  double weight = 0.0;          // comb_weight * j_part
};

// One of the 16 weighted integration rules on the transformed domain.
struct CubatureRule {
  Family family;
  TransformKind kind;
  int N = 0;
  int n = 0;
  int exact_degree = 0;
  std::vector<CubatureNode> nodes;
};

// The published family/type pairings: I+- with types {I, II, V, VI} and
// III+- with {III, IV, VII, VIII}; symmetry matching the family sign.
bool pairing_supported(Family family, TransformKind kind);

// Smallest N for which the pairing's formula is stated.
int pairing_min_N(Family family, DctType type, int n);

// Published degree-of-exactness bound for the pairing. Table-driven.
int degree_of_exactness(Family family, TransformKind kind, int N, int n);

CubatureRule build_rule(Family family, TransformKind kind, int N, int n);

// sum_j weight_j f(Y_j), compensated.
double integrate(const CubatureRule& rule, const RationalPolynomial& f);

// Exact value of int f * w_family over the transformed domain: expand
// (f o X) * seed^2 into integer symmetric cosines and read off the constant
// coefficient, which is the exact integral since only cos^+_0 survives.
Rational exact_integral(Family family, const RationalPolynomial& f, int n);

// Gaussian pairings only ((I+,II), (III+,VIII), (I-,II), (III-,VIII)):
// max |P_k(Y)| over nodes and over the k with k_1 = N (symmetric families)
// or k_1 = N-n+1 (antisymmetric).
double node_vanishing_check(Family family, TransformKind kind, int N, int n);

// Helper: all canonical k in P^+ with k_1 equal to `first` (n components).
std::vector<Label> labels_with_first(int first, int n);

}  // namespace symcos

#endif  // SYMCOS_CUBATURE_HPP_

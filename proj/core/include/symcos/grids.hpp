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

#ifndef SYMCOS_GRIDS_HPP_
#define SYMCOS_GRIDS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "symcos/label.hpp"
#include "symcos/rational.hpp"

namespace symcos {

enum class DctType : int { I = 1, II, III, IV, V, VI, VII, VIII };
enum class Symmetry { symmetric, antisymmetric };

// One of the 16 transform kinds: DCT boundary type x symmetrization.
struct TransformKind {
  DctType type;
  Symmetry symmetry;

  bool symmetric() const { return symmetry == Symmetry::symmetric; }
  // Basis functions carry the rho shift (cos_{k+rho}) for these types.
  bool shifted_basis() const {
    return type == DctType::III || type == DctType::IV ||
           type == DctType::VII || type == DctType::VIII;
  }
  std::string str() const;

  friend bool operator==(const TransformKind&, const TransformKind&) = default;
};

DctType dct_type_from_string(const std::string& s);
Symmetry symmetry_from_string(const std::string& s);
std::string to_string(DctType t);
std::string to_string(Symmetry s);

// All 16 kinds, types I..VIII x {sym, anti}.
std::vector<TransformKind> all_transform_kinds();

struct GridEntry {
  std::vector<std::int64_t> r;   // integer grid multi-index
  std::vector<Rational> x;       // exact point coordinates
  std::vector<double> xd;        // cached double coordinates
  Rational eps;                  // epsilon_s, epsilon~_s, or 1 per kind
  std::int64_t stabilizer;       // H_r
  Rational measure;              // full discrete measure: eps (anti), eps/H (sym)
};

struct LabelEntry {
  Label k;
  Rational norm;  // diagonal of the discrete Gram matrix
};

// Square transform data: points with weights and labels with norms.
// Entries ascend lexicographically in r; labels descend lexicographically.
struct LabeledGrid {
  TransformKind kind;
  int N = 0;
  int n = 0;
  std::vector<GridEntry> entries;
  std::vector<LabelEntry> labels;

  // cos_{k} or cos_{k+rho} label actually evaluated for labels[i].
  Label basis_label(std::size_t i) const;
};

// Label set of the kind: D_N^- (strict) or D_N^+ (weak) over [0, N-1]
// components, D_{N+1} for type I. Empty (not an error) when the
// antisymmetric set has no strictly decreasing tuples.
std::vector<Label> label_set(TransformKind kind, int N, int n);

LabeledGrid point_grid(TransformKind kind, int N, int n);

// Exact diagonal of the discrete Gram matrix for label k.
Rational spectral_norm(TransformKind kind, const Label& k, int N);

// |D_N^+| = C(N+n-1, n); |D_N^-| = C(N, n).
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace symcos

#endif  // SYMCOS_GRIDS_HPP_

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

#ifndef SYMCOS_LABEL_HPP_
#define SYMCOS_LABEL_HPP_

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "symcos/rational.hpp"

namespace symcos {

// Which half-integer shift produced a label's fractional pattern. Metadata
// only: equality and ordering of labels ignore it.
enum class ShiftTag : std::uint8_t { none, rho, rho1, rho2 };

// An n-component label vector whose entries are integers or half-odd
// integers. Components are stored doubled, so every value is exact.
//
// A canonical label has non-negative components sorted non-increasing.
class Label {
 public:
  Label() = default;

  static Label integers(std::vector<std::int64_t> k,
                        ShiftTag tag = ShiftTag::none);
  // Components are twice[i] / 2.
  static Label halves(std::vector<std::int64_t> twice, ShiftTag tag);

  // rho = (1/2,...,1/2), rho1 = (n-1,...,1,0), rho2 = (n-1/2,...,3/2,1/2).
  static Label rho(int n);
  static Label rho1(int n);
  static Label rho2(int n);

  // The label with j leading ones, labeling the variable X_j.
  static Label ones(int j, int n);

  int dim() const { return static_cast<int>(twice_.size()); }
  std::int64_t twice(int i) const { return twice_[i]; }
  const std::vector<std::int64_t>& twice_components() const { return twice_; }
  Rational component(int i) const { return rational(twice_[i], 2); }
  ShiftTag shift_tag() const { return tag_; }

  // True when every component is an integer (all doubled entries even).
  bool integral() const;
  // True when every component is a half-odd integer.
  bool half_odd() const;
  std::int64_t integer_component(int i) const;  // requires integral()

  bool is_canonical() const;          // sorted non-increasing, non-negative
  bool weakly_decreasing() const;     // P^+ membership for canonical labels
  bool strictly_decreasing() const;   // P^++ membership

  Label shifted_by(const Label& shift) const;  // componentwise sum

  friend bool operator==(const Label& a, const Label& b) {
    return a.twice_ == b.twice_;
  }
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    return a.twice_ <=> b.twice_;
  }

  std::string str() const;

 private:
  std::vector<std::int64_t> twice_;
  ShiftTag tag_ = ShiftTag::none;
};

// Unique S_n x sign-flip representative; the symmetric cosine value is
// unchanged. Works on any label.
Label canonicalize_symmetric(const Label& label);

// Canonical representative with the sign relating cos^- on input and output:
// cos^-(input) = sign * cos^-(canonical). sign == 0 iff two components
// coincide after taking absolute values (the determinant vanishes).
std::pair<Label, int> canonicalize_antisymmetric(const Label& label);

// H_k: order of the stabilizer of k under S_n; the product of factorials of
// the multiplicities of the distinct component values.
std::int64_t stabilizer_order(const Label& k);

// h_k = prod h_{k_i} with h_0 = 1 and h_m = 1/2 otherwise. Integer labels.
Rational h_weight(const Label& k);

// c_r: 1/2 at the ends r = 0 and r = N of the grid range, 1 inside.
// Rejects r outside [0, N].
Rational c_coefficient(std::int64_t r, int N);

// (d_k, d~_k) = (prod c_{k_i}, prod c_{k_i + 1}) for k in D_N.
std::pair<Rational, Rational> d_weights(const Label& k, int N);

}  // namespace symcos

#endif  // SYMCOS_LABEL_HPP_

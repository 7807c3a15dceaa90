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

#include "symcos/label.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace symcos {

Label Label::integers(std::vector<std::int64_t> k, ShiftTag tag) {
  Label l;
  l.twice_.resize(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) l.twice_[i] = 2 * k[i];
  l.tag_ = tag;
  return l;
}

Label Label::halves(std::vector<std::int64_t> twice, ShiftTag tag) {
  Label l;
  l.twice_ = std::move(twice);
  l.tag_ = tag;
  return l;
}

Label Label::rho(int n) {
  return halves(std::vector<std::int64_t>(n, 1), ShiftTag::rho);
}

Label Label::rho1(int n) {
  std::vector<std::int64_t> t(n);
  for (int i = 0; i < n; ++i) t[i] = 2 * (n - 1 - i);
  return halves(std::move(t), ShiftTag::rho1);
}

Label Label::rho2(int n) {
  std::vector<std::int64_t> t(n);
  for (int i = 0; i < n; ++i) t[i] = 2 * (n - i) - 1;
  return halves(std::move(t), ShiftTag::rho2);
}

Label Label::ones(int j, int n) {
  std::vector<std::int64_t> k(n, 0);
  for (int i = 0; i < j; ++i) k[i] = 1;
  return integers(std::move(k));
}

bool Label::integral() const {
  for (auto t : twice_)
    if (t % 2 != 0) return false;
  return true;
}

bool Label::half_odd() const {
  for (auto t : twice_)
    if (t % 2 == 0) return false;
  return true;
}

std::int64_t Label::integer_component(int i) const {
  if (twice_[i] % 2 != 0)
    throw std::logic_error("Label: component is not an integer");
  return twice_[i] / 2;
}

bool Label::is_canonical() const {
  for (std::size_t i = 0; i < twice_.size(); ++i) {
    if (twice_[i] < 0) return false;
    if (i + 1 < twice_.size() && twice_[i] < twice_[i + 1]) return false;
  }
  return true;
}

bool Label::weakly_decreasing() const {
  for (std::size_t i = 0; i + 1 < twice_.size(); ++i)
    if (twice_[i] < twice_[i + 1]) return false;
  return true;
}

bool Label::strictly_decreasing() const {
  for (std::size_t i = 0; i + 1 < twice_.size(); ++i)
    if (twice_[i] <= twice_[i + 1]) return false;
  return true;
}

Label Label::shifted_by(const Label& shift) const {
  if (shift.dim() != dim())
    throw std::invalid_argument("Label::shifted_by: dimension mismatch");
  Label out = *this;
  for (int i = 0; i < dim(); ++i) out.twice_[i] += shift.twice_[i];
  out.tag_ = shift.tag_;
  return out;
}

std::string Label::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ",";
    if (twice_[i] % 2 == 0)
      os << twice_[i] / 2;
    else
      os << twice_[i] << "/2";
  }
  os << ")";
  return os.str();
}

Label canonicalize_symmetric(const Label& label) {
  std::vector<std::int64_t> t = label.twice_components();
  for (auto& v : t) v = std::abs(v);
  std::sort(t.begin(), t.end(), std::greater<>());
  return Label::halves(std::move(t), label.shift_tag());
}

std::pair<Label, int> canonicalize_antisymmetric(const Label& label) {
  std::vector<std::int64_t> t = label.twice_components();
  for (auto& v : t) v = std::abs(v);
  // selection sort, tracking the permutation parity
  int sign = 1;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t m = i;
    for (std::size_t j = i + 1; j < n; ++j)
      if (t[j] > t[m]) m = j;
    if (m != i) {
      std::swap(t[i], t[m]);
      sign = -sign;
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (t[i] == t[i + 1]) sign = 0;
  return {Label::halves(std::move(t), label.shift_tag()), sign};
}

std::int64_t stabilizer_order(const Label& k) {
  std::map<std::int64_t, int> mult;
  for (auto t : k.twice_components()) ++mult[t];
  std::int64_t h = 1;
  for (auto& [v, m] : mult)
    for (int i = 2; i <= m; ++i) h *= i;
  return h;
}

Rational h_weight(const Label& k) {
  if (!k.integral())
    throw std::invalid_argument("h_weight: label must have integer components");
  Rational h = 1;
  for (auto t : k.twice_components())
    if (t != 0) h /= 2;
  return h;
}

Rational c_coefficient(std::int64_t r, int N) {
  if (r < 0 || r > N)
    throw std::invalid_argument("c_coefficient: r outside [0, N]");
  return (r == 0 || r == N) ? rational(1, 2) : Rational(1);
}

std::pair<Rational, Rational> d_weights(const Label& k, int N) {
  if (!k.integral())
    throw std::invalid_argument("d_weights: label must have integer components");
  Rational d = 1, dt = 1;
  for (int i = 0; i < k.dim(); ++i) {
    std::int64_t ki = k.integer_component(i);
    if (ki < 0 || ki > N - 1)
      throw std::invalid_argument("d_weights: component outside [0, N-1]");
    d *= c_coefficient(ki, N);
    dt *= c_coefficient(ki + 1, N);
  }
  return {d, dt};
}

}  // namespace symcos

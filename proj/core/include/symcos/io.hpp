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

#ifndef SYMCOS_IO_HPP_
#define SYMCOS_IO_HPP_

#include <filesystem>
#include <functional>
#include <string>

#include "symcos/cubature.hpp"
#include "symcos/grids.hpp"
#include "symcos/polynomial.hpp"
#include "symcos/transforms.hpp"

namespace symcos {

// Writes via a temp file in the same directory plus an atomic rename, so a
// failing writer leaves no partial output behind.
void atomic_write(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& writer);

// Grid CSV: r_1..r_n, x_1..x_n (decimal), weight ("p/q", the full discrete
// measure of the kind's scalar product).
void write_grid_csv(const LabeledGrid& grid, const std::filesystem::path& path);

// Node CSV in X-space: Y_1..Y_n, weight; 17 significant digits.
void write_rule_csv(const CubatureRule& rule, const std::filesystem::path& path);
// JSON header: family, kind, N, exact_degree, node count.
void write_rule_header_json(const CubatureRule& rule,
                            const std::filesystem::path& path);

// Sample CSV: r_1..r_n, value. Order and indices must match the grid.
void write_samples_csv(const LabeledGrid& grid, const SampleSet& samples,
                       const std::filesystem::path& path);
SampleSet read_samples_csv(const LabeledGrid& grid,
                           const std::filesystem::path& path);
void write_samples_json(const LabeledGrid& grid, const SampleSet& samples,
                        const std::filesystem::path& path);

// Spectrum CSV: k_1..k_n, value; JSON mirrors it with kind metadata.
void write_spectrum_csv(const LabeledGrid& grid, const Spectrum& spectrum,
                        const std::filesystem::path& path);
void write_spectrum_json(const LabeledGrid& grid, const Spectrum& spectrum,
                         const std::filesystem::path& path);

// Polynomial JSON: {"family": ..., "k": [...], "terms": [{"alpha": [...],
// "num": ..., "den": ...}]}. family/k may be absent for free polynomials.
std::string polynomial_to_json(const RationalPolynomial& p,
                               const std::string& family = "",
                               const std::vector<std::int64_t>& k = {});
RationalPolynomial polynomial_from_json_text(const std::string& text);
RationalPolynomial read_polynomial_json(const std::filesystem::path& path);
void write_polynomial_json(const RationalPolynomial& p,
                           const std::filesystem::path& path,
                           const std::string& family = "",
                           const std::vector<std::int64_t>& k = {});

}  // namespace symcos

#endif  // SYMCOS_IO_HPP_

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

#ifndef SYMCOS_NUMERIC_HPP_
#define SYMCOS_NUMERIC_HPP_

#include <cmath>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace symcos {

// Neumaier-compensated accumulator. The discrete orthogonality and
// round-trip acceptance bands sit at 1e-10, close enough to the naive
// summation error of the larger grids to warrant compensation.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Chunked parallel map over [0, count). Chunk results are combined in index
// order so reductions stay deterministic regardless of thread count.
void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t begin, std::size_t end,
                                              std::size_t chunk_index)>& body,
                     std::size_t num_chunks = 0);

inline unsigned worker_count() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

// Nodes and weights of the m-point Gauss-Legendre rule on [0, 1].
void gauss_legendre_01(int m, std::vector<double>* nodes,
                       std::vector<double>* weights);

}  // namespace symcos

#endif  // SYMCOS_NUMERIC_HPP_

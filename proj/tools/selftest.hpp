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

#ifndef SYMCOS_TOOLS_SELFTEST_HPP_
#define SYMCOS_TOOLS_SELFTEST_HPP_

#include <cstdint>
#include <string>

namespace symcos::selftest {

struct Options {
  std::string suite = "all";  // all|kernels|gram|roundtrip|tables|cubature|jacobian
  int n = 3;                  // upper bound on the dimension sweep
  int N = 5;                  // upper bound on the resolution sweep
  std::uint64_t seed = 1;
};

// Runs the requested invariant suites at desk scale; prints one line per
// check group. Returns the number of failed groups.
int run(const Options& opts);

}  // namespace symcos::selftest

#endif  // SYMCOS_TOOLS_SELFTEST_HPP_

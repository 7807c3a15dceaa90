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

#include "symcos/io.hpp"

#include <gtest/gtest.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace symcos {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    dir_ = fs::temp_directory_path() /
           ("symcos_io_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~TempDir() { fs::remove_all(dir_); }
  fs::path operator/(const std::string& f) const { return dir_ / f; }

 private:
  fs::path dir_;
};

TEST(Rational, FractionStrings) {
  EXPECT_EQ(to_fraction_string(rational(3, 4)), "3/4");
  EXPECT_EQ(to_fraction_string(rational(-6, 8)), "-3/4");
  EXPECT_EQ(to_fraction_string(rational(5)), "5");
  EXPECT_EQ(rational_from_string("3/4"), rational(3, 4));
  EXPECT_EQ(rational_from_string("-7"), rational(-7));
  EXPECT_THROW(rational_from_string("x/y"), std::invalid_argument);
}

TEST(AtomicWrite, NoPartialFileOnError) {
  TempDir tmp;
  const fs::path target = tmp / "out.csv";
  EXPECT_THROW(atomic_write(target,
                            [](std::ostream& os) {
                              os << "half a line";
                              throw std::runtime_error("boom");
                            }),
               std::runtime_error);
  EXPECT_FALSE(fs::exists(target));
  // and the temp file is cleaned up too
  EXPECT_TRUE(fs::is_empty(fs::path(target).remove_filename()));
  atomic_write(target, [](std::ostream& os) { os << "done\n"; });
  EXPECT_TRUE(fs::exists(target));
}

TEST(GridCsv, HeaderAndWeights) {
  TempDir tmp;
  const auto g = point_grid({DctType::V, Symmetry::symmetric}, 3, 2);
  const fs::path p = tmp / "grid.csv";
  write_grid_csv(g, p);
  std::ifstream is(p);
  std::string header;
  std::getline(is, header);
  EXPECT_EQ(header, "r1,r2,x1,x2,weight");
  std::string first;
  std::getline(is, first);
  // ascending: first row is r = (0,0) with measure eps/H = (1/4)/2
  EXPECT_EQ(first, "0,0,0,0,1/8");
}

TEST(SamplesCsv, RoundTripAndValidation) {
  TempDir tmp;
  const auto g = point_grid({DctType::VI, Symmetry::antisymmetric}, 4, 2);
  SampleSet s{g.kind, g.N, {}};
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  for (std::size_t i = 0; i < g.entries.size(); ++i) s.values.push_back(val(rng));
  const fs::path p = tmp / "samples.csv";
  write_samples_csv(g, s, p);
  const SampleSet back = read_samples_csv(g, p);
  ASSERT_EQ(back.values.size(), s.values.size());
  for (std::size_t i = 0; i < s.values.size(); ++i)
    EXPECT_DOUBLE_EQ(back.values[i], s.values[i]);

  // misaligned rows are rejected
  std::ofstream bad(tmp / "bad.csv");
  bad << "r1,r2,value\n9,9,1.0\n";
  bad.close();
  EXPECT_THROW(read_samples_csv(g, tmp / "bad.csv"), std::runtime_error);
}

TEST(PolynomialJson, RoundTrip) {
  RationalPolynomial p(3);
  p.add_term({2, 0, 0}, rational(1));
  p.add_term({0, 1, 0}, rational(-4));
  p.add_term({0, 0, 0}, rational(-6));
  const std::string text = polynomial_to_json(p, "I+", {2, 0, 0});
  const RationalPolynomial q = polynomial_from_json_text(text);
  EXPECT_EQ(p, q);

  TempDir tmp;
  write_polynomial_json(p, tmp / "p.json", "I+", {2, 0, 0});
  EXPECT_EQ(read_polynomial_json(tmp / "p.json"), p);
}

TEST(RuleExport, CsvAndHeader) {
  TempDir tmp;
  const auto rule =
      build_rule(Family::III_minus, {DctType::VIII, Symmetry::antisymmetric}, 4, 2);
  write_rule_csv(rule, tmp / "rule.csv");
  write_rule_header_json(rule, tmp / "rule.json");
  std::ifstream is(tmp / "rule.csv");
  std::string header;
  std::getline(is, header);
  EXPECT_EQ(header, "Y1,Y2,weight");
  std::size_t rows = 0;
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) ++rows;
  EXPECT_EQ(rows, rule.nodes.size());

  std::ifstream js(tmp / "rule.json");
  std::stringstream ss;
  ss << js.rdbuf();
  EXPECT_NE(ss.str().find("\"exact_degree\": 5"), std::string::npos);
  EXPECT_NE(ss.str().find("\"family\": \"III-\""), std::string::npos);
}

TEST(SamplesJson, Export) {
  TempDir tmp;
  const auto g = point_grid({DctType::II, Symmetry::symmetric}, 3, 2);
  SampleSet s{g.kind, g.N, std::vector<double>(g.entries.size(), 2.0)};
  write_samples_json(g, s, tmp / "s.json");
  std::ifstream is(tmp / "s.json");
  std::stringstream ss;
  ss << is.rdbuf();
  EXPECT_NE(ss.str().find("\"values\""), std::string::npos);
  EXPECT_NE(ss.str().find("\"type\": \"II\""), std::string::npos);
}

TEST(SpectrumExport, CsvLabelsMatchGridOrder) {
  TempDir tmp;
  const auto g = point_grid({DctType::V, Symmetry::antisymmetric}, 3, 2);
  Spectrum spec{g.kind, g.N, {1.5, -2.5, 0.25}};
  write_spectrum_csv(g, spec, tmp / "spec.csv");
  std::ifstream is(tmp / "spec.csv");
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "k1,k2,value");
  std::getline(is, line);
  EXPECT_EQ(line, "2,1,1.5");  // labels descend lexicographically
  write_spectrum_json(g, spec, tmp / "spec.json");
  std::ifstream js(tmp / "spec.json");
  std::stringstream ss;
  ss << js.rdbuf();
  EXPECT_NE(ss.str().find("\"symmetry\": \"anti\""), std::string::npos);
}

}  // namespace
}  // namespace symcos

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

#include <json.hpp>

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace symcos {

namespace {

using nlohmann::json;

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// shortest representation that round-trips exactly
std::string format_shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void atomic_write(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& writer) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp = dir / (path.filename().string() + ".tmp");
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    try {
      writer(os);
    } catch (...) {
      os.close();
      fs::remove(tmp);
      throw;
    }
    os.flush();
    if (!os) {
      os.close();
      fs::remove(tmp);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

void write_grid_csv(const LabeledGrid& grid, const std::filesystem::path& path) {
  atomic_write(path, [&](std::ostream& os) {
    for (int i = 0; i < grid.n; ++i) os << "r" << (i + 1) << ",";
    for (int i = 0; i < grid.n; ++i) os << "x" << (i + 1) << ",";
    os << "weight\n";
    for (const auto& e : grid.entries) {
      for (auto r : e.r) os << r << ",";
      for (auto& xd : e.xd) os << format_shortest(xd) << ",";
      os << to_fraction_string(e.measure) << "\n";
    }
  });
}

void write_rule_csv(const CubatureRule& rule, const std::filesystem::path& path) {
  atomic_write(path, [&](std::ostream& os) {
    for (int i = 0; i < rule.n; ++i) os << "Y" << (i + 1) << ",";
    os << "weight\n";
    for (const auto& node : rule.nodes) {
      for (double y : node.Y) os << format17(y) << ",";
      os << format17(node.weight) << "\n";
    }
  });
}

void write_rule_header_json(const CubatureRule& rule,
                            const std::filesystem::path& path) {
  json j;
  j["family"] = family_name(rule.family);
  j["kind"] = {{"type", to_string(rule.kind.type)},
               {"symmetry", to_string(rule.kind.symmetry)}};
  j["N"] = rule.N;
  j["n"] = rule.n;
  j["exact_degree"] = rule.exact_degree;
  j["nodes"] = rule.nodes.size();
  atomic_write(path, [&](std::ostream& os) { os << j.dump(2) << "\n"; });
}

void write_samples_csv(const LabeledGrid& grid, const SampleSet& samples,
                       const std::filesystem::path& path) {
  if (samples.values.size() != grid.entries.size())
    throw std::invalid_argument("write_samples_csv: size mismatch");
  atomic_write(path, [&](std::ostream& os) {
    for (int i = 0; i < grid.n; ++i) os << "r" << (i + 1) << ",";
    os << "value\n";
    for (std::size_t s = 0; s < grid.entries.size(); ++s) {
      for (auto r : grid.entries[s].r) os << r << ",";
      os << format_shortest(samples.values[s]) << "\n";
    }
  });
}

SampleSet read_samples_csv(const LabeledGrid& grid,
                           const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error("empty sample file " + path.string());
  SampleSet out{grid.kind, grid.N, {}};
  std::size_t row = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != static_cast<std::size_t>(grid.n) + 1)
      throw std::runtime_error("sample row has wrong arity");
    if (row >= grid.entries.size())
      throw std::runtime_error("more samples than grid points");
    for (int i = 0; i < grid.n; ++i)
      if (std::stoll(fields[i]) != grid.entries[row].r[i])
        throw std::runtime_error("sample row misaligned with the grid");
    out.values.push_back(std::stod(fields[grid.n]));
    ++row;
  }
  if (out.values.size() != grid.entries.size())
    throw std::runtime_error("fewer samples than grid points");
  return out;
}

void write_samples_json(const LabeledGrid& grid, const SampleSet& samples,
                        const std::filesystem::path& path) {
  if (samples.values.size() != grid.entries.size())
    throw std::invalid_argument("write_samples_json: size mismatch");
  json j;
  j["kind"] = {{"type", to_string(grid.kind.type)},
               {"symmetry", to_string(grid.kind.symmetry)}};
  j["N"] = grid.N;
  j["n"] = grid.n;
  json values = json::array();
  for (std::size_t s = 0; s < grid.entries.size(); ++s) {
    json item;
    item["r"] = grid.entries[s].r;
    item["value"] = samples.values[s];
    values.push_back(std::move(item));
  }
  j["values"] = std::move(values);
  atomic_write(path, [&](std::ostream& os) { os << j.dump(2) << "\n"; });
}

void write_spectrum_csv(const LabeledGrid& grid, const Spectrum& spectrum,
                        const std::filesystem::path& path) {
  atomic_write(path, [&](std::ostream& os) {
    for (int i = 0; i < grid.n; ++i) os << "k" << (i + 1) << ",";
    os << "value\n";
    for (std::size_t i = 0; i < grid.labels.size(); ++i) {
      for (int c = 0; c < grid.n; ++c)
        os << grid.labels[i].k.integer_component(c) << ",";
      os << format_shortest(spectrum.coefficients[i]) << "\n";
    }
  });
}

void write_spectrum_json(const LabeledGrid& grid, const Spectrum& spectrum,
                         const std::filesystem::path& path) {
  json j;
  j["kind"] = {{"type", to_string(grid.kind.type)},
               {"symmetry", to_string(grid.kind.symmetry)}};
  j["N"] = grid.N;
  j["n"] = grid.n;
  json coeffs = json::array();
  for (std::size_t i = 0; i < grid.labels.size(); ++i) {
    json item;
    json k = json::array();
    for (int c = 0; c < grid.n; ++c)
      k.push_back(grid.labels[i].k.integer_component(c));
    item["k"] = std::move(k);
    item["value"] = spectrum.coefficients[i];
    coeffs.push_back(std::move(item));
  }
  j["coefficients"] = std::move(coeffs);
  atomic_write(path, [&](std::ostream& os) { os << j.dump(2) << "\n"; });
}

std::string polynomial_to_json(const RationalPolynomial& p,
                               const std::string& family,
                               const std::vector<std::int64_t>& k) {
  json j;
  if (!family.empty()) j["family"] = family;
  if (!k.empty()) j["k"] = k;
  j["n"] = p.dim();
  json terms = json::array();
  for (const auto& [alpha, c] : p.terms()) {
    json t;
    t["alpha"] = alpha;
    t["num"] = to_int64(c.get_num());
    t["den"] = to_int64(c.get_den());
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump(2);
}

RationalPolynomial polynomial_from_json_text(const std::string& text) {
  const json j = json::parse(text);
  const int n = j.at("n").get<int>();
  RationalPolynomial p(n);
  for (const auto& t : j.at("terms")) {
    Exponents alpha = t.at("alpha").get<Exponents>();
    const auto num = t.at("num").get<std::int64_t>();
    const auto den = t.at("den").get<std::int64_t>();
    p.add_term(alpha, rational(num, den));
  }
  return p;
}

RationalPolynomial read_polynomial_json(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return polynomial_from_json_text(ss.str());
}

void write_polynomial_json(const RationalPolynomial& p,
                           const std::filesystem::path& path,
                           const std::string& family,
                           const std::vector<std::int64_t>& k) {
  atomic_write(path, [&](std::ostream& os) {
    os << polynomial_to_json(p, family, k) << "\n";
  });
}

}  // namespace symcos

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

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "selftest.hpp"
#include "symcos/cubature.hpp"
#include "symcos/io.hpp"
#include "symcos/polynomial.hpp"
#include "symcos/transforms.hpp"

namespace {

using namespace symcos;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

struct CommonFlags {
  int n = 3;
  int N = 5;
  std::string kind_type = "V";
  std::string symmetry = "sym";
  std::string family;
  std::string input;
  std::string output;
  int quad_points = 48;
  std::uint64_t seed = 1;
};

TransformKind parse_kind(const CommonFlags& f) {
  return {dct_type_from_string(f.kind_type), symmetry_from_string(f.symmetry)};
}

double parse_number(const std::string& s) {
  if (s.find('/') != std::string::npos)
    return to_double(rational_from_string(s));
  return std::stod(s);
}

// Built-in function catalogue for sampling and error sweeps:
//   "model"                                       the published Gaussian bump
//   "model:alpha=A,beta=B,center=c1/c2/.../cn"    custom parameters
//   "poly:<path.json>"                            polynomial in x_1..x_n
std::function<double(std::span<const double>)> parse_function(
    const std::string& spec, int n) {
  if (spec.empty() || spec == "model") {
    if (n != 3)
      throw CLI::ValidationError(
          "the default model function is 3-dimensional; pass explicit "
          "model:... parameters for other n");
    return model_function(0.079, 3.0, {0.8, 0.54, 0.3});
  }
  if (spec.rfind("model:", 0) == 0) {
    double alpha = 0.079, beta = 3.0;
    std::vector<double> center(n, 0.5);
    std::string rest = spec.substr(6);
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw CLI::ValidationError("bad model parameter '" + item + "'");
      const std::string key = item.substr(0, eq);
      const std::string val = item.substr(eq + 1);
      if (key == "alpha") {
        alpha = parse_number(val);
      } else if (key == "beta") {
        beta = parse_number(val);
      } else if (key == "center") {
        center.clear();
        std::stringstream cs(val);
        std::string c;
        while (std::getline(cs, c, '/')) center.push_back(std::stod(c));
        if (static_cast<int>(center.size()) != n)
          throw CLI::ValidationError("center arity does not match --n");
      } else {
        throw CLI::ValidationError("unknown model parameter '" + key + "'");
      }
    }
    return model_function(alpha, beta, std::move(center));
  }
  if (spec.rfind("poly:", 0) == 0) {
    RationalPolynomial p = read_polynomial_json(spec.substr(5));
    if (p.dim() != n)
      throw CLI::ValidationError("polynomial arity does not match --n");
    return [p = std::move(p)](std::span<const double> x) { return p.eval(x); };
  }
  throw CLI::ValidationError("unknown function spec '" + spec + "'");
}

int cmd_nodes(const CommonFlags& flags, bool image) {
  const TransformKind kind = parse_kind(flags);
  const LabeledGrid grid = point_grid(kind, flags.N, flags.n);
  write_grid_csv(grid, flags.output);
  if (image) {
    std::filesystem::path p(flags.output);
    p.replace_extension(".image.csv");
    atomic_write(p, [&](std::ostream& os) {
      for (int i = 0; i < grid.n; ++i) os << "Y" << (i + 1) << ",";
      os << "weight\n";
      for (const auto& e : grid.entries) {
        const auto Y = phi_map(e.xd);
        char buf[64];
        for (double y : Y) {
          std::snprintf(buf, sizeof buf, "%.17g", y);
          os << buf << ",";
        }
        os << to_fraction_string(e.measure) << "\n";
      }
    });
    std::printf("wrote %s and %s (%zu rows)\n", flags.output.c_str(),
                p.c_str(), grid.entries.size());
  } else {
    std::printf("wrote %s (%zu rows)\n", flags.output.c_str(),
                grid.entries.size());
  }
  return kExitOk;
}

int cmd_transform(const CommonFlags& flags, const std::string& function_spec,
                  const std::string& eval_plane, int eval_res) {
  const TransformKind kind = parse_kind(flags);
  const LabeledGrid grid = point_grid(kind, flags.N, flags.n);
  if (flags.input.empty() == function_spec.empty())
    throw CLI::ValidationError("pass exactly one of --input / --function");
  SampleSet samples{kind, flags.N, {}};
  if (!flags.input.empty()) {
    samples = read_samples_csv(grid, flags.input);
  } else {
    const auto f = parse_function(function_spec, flags.n);
    for (const auto& e : grid.entries) samples.values.push_back(f(e.xd));
  }
  const Spectrum spec = forward(grid, samples);
  write_spectrum_json(grid, spec, flags.output);
  std::printf("wrote %s (%zu coefficients)\n", flags.output.c_str(),
              spec.coefficients.size());

  if (!eval_plane.empty()) {
    // plot-ready data on the plane cut x_n = z: "x3=1/3" or "z=0.25"
    const auto eq = eval_plane.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--eval-plane expects e.g. x3=1/3");
    const double z = parse_number(eval_plane.substr(eq + 1));
    if (flags.n < 2)
      throw CLI::ValidationError("--eval-plane requires n >= 2");
    const Interpolant psi(grid, spec);
    std::filesystem::path p(flags.output);
    p.replace_extension(".plane.csv");
    atomic_write(p, [&](std::ostream& os) {
      os << "x1,x2,psi\n";
      char buf[160];
      Interpolant::Workspace ws;
      // triangular lattice over the cut z <= x2 <= x1 <= 1
      for (int i = 0; i <= eval_res; ++i) {
        std::vector<double> x(flags.n, z);
        x[0] = z + (1.0 - z) * i / eval_res;
        for (int j = 0; j <= std::max(i, 1); ++j) {
          if (i == 0 && j > 0) break;
          x[1] = z + (x[0] - z) * j / std::max(i, 1);
          const double v = psi.eval(x, &ws);
          std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", x[0], x[1], v);
          os << buf;
        }
      }
    });
    std::printf("wrote %s\n", p.c_str());
  }
  return kExitOk;
}

int cmd_interp_error(const CommonFlags& flags, const std::string& function_spec,
                     std::vector<int> N_list, bool long_run) {
  const TransformKind kind = parse_kind(flags);
  if (N_list.empty()) N_list = {flags.N};
  const auto f = parse_function(function_spec, flags.n);
  std::printf("kind %s, quad %d points/axis\n", kind.str().c_str(),
              flags.quad_points);
  for (int N : N_list) {
    if (N > 15 && !long_run) {
      std::printf("  N=%-3d skipped (enable with --long)\n", N);
      continue;
    }
    const double err = interpolation_error(kind, N, flags.n, f,
                                           {.points_per_axis = flags.quad_points});
    std::printf("  N=%-3d integral error %.6f\n", N, err);
  }
  return kExitOk;
}

int cmd_poly_table(const CommonFlags& flags, int max_k1) {
  const Family fam = family_from_string(flags.family);
  // all k in P^+ with k_1 <= max_k1, descending-lexicographic rows
  std::vector<std::vector<std::int64_t>> ks;
  std::vector<std::int64_t> cur(flags.n);
  auto rec = [&](auto&& self, int depth, std::int64_t hi) -> void {
    if (depth == flags.n) {
      ks.push_back(cur);
      return;
    }
    for (std::int64_t v = hi; v >= 0; --v) {
      cur[depth] = v;
      self(self, depth + 1, v);
    }
  };
  rec(rec, 0, max_k1);

  // union of monomials, ordered by degree then X1-major
  struct Column {
    Exponents alpha;
    std::string name;
  };
  std::map<std::pair<int, Exponents>, Column> columns;
  std::vector<std::pair<std::vector<std::int64_t>, const RationalPolynomial*>> rows;
  for (const auto& k : ks) {
    const RationalPolynomial& p = family_polynomial(fam, Label::integers(k));
    rows.push_back({k, &p});
    for (const auto& [a, c] : p.terms()) {
      int deg = 0;
      std::string name;
      Exponents neg(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        deg += a[i];
        neg[i] = -a[i];
        if (a[i] >= 1) name += "X" + std::to_string(i + 1);
        if (a[i] > 1) name += "^" + std::to_string(a[i]);
      }
      if (name.empty()) name = "1";
      columns[{deg, std::move(neg)}] = Column{a, std::move(name)};
    }
  }
  atomic_write(flags.output, [&](std::ostream& os) {
    os << "k";
    for (const auto& [key, col] : columns) os << "," << col.name;
    os << "\n";
    for (const auto& [k, p] : rows) {
      os << "\"(";
      for (std::size_t i = 0; i < k.size(); ++i)
        os << (i ? "," : "") << k[i];
      os << ")\"";
      for (const auto& [key, col] : columns) {
        auto it = p->terms().find(col.alpha);
        os << ",";
        if (it != p->terms().end()) os << to_fraction_string(it->second);
      }
      os << "\n";
    }
  });
  // JSON alongside, one polynomial object per row
  std::filesystem::path jp(flags.output);
  jp.replace_extension(".json");
  atomic_write(jp, [&](std::ostream& os) {
    os << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << polynomial_to_json(*rows[i].second, family_name(fam), rows[i].first);
      os << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "]\n";
  });
  std::printf("wrote %s and %s (%zu polynomials)\n", flags.output.c_str(),
              jp.c_str(), rows.size());
  return kExitOk;
}

int cmd_cubature(const CommonFlags& flags) {
  const Family fam = family_from_string(flags.family);
  const TransformKind kind = parse_kind(flags);
  const CubatureRule rule = build_rule(fam, kind, flags.N, flags.n);
  RationalPolynomial f = flags.input.empty()
                             ? RationalPolynomial::constant(flags.n, 1)
                             : read_polynomial_json(flags.input);
  if (f.dim() != flags.n)
    throw CLI::ValidationError("polynomial arity does not match --n");
  const double got = integrate(rule, f);
  const Rational oracle = exact_integral(fam, f, flags.n);
  const double want = to_double(oracle);
  const double abs_err = std::abs(got - want);
  const double rel_err = abs_err / (1.0 + std::abs(want));
  const bool within_budget = f.total_degree() <= rule.exact_degree;
  std::printf("family %s, kind %s, N=%d, n=%d, nodes %zu, exact degree %d\n",
              family_name(fam), kind.str().c_str(), flags.N, flags.n,
              rule.nodes.size(), rule.exact_degree);
  std::printf("polynomial degree %d (%s)\n", f.total_degree(),
              within_budget ? "within budget" : "beyond guaranteed degree");
  std::printf("rule    %.17g\n", got);
  std::printf("oracle  %.17g (= %s)\n", want, to_fraction_string(oracle).c_str());
  std::printf("abs err %.3e, rel err %.3e\n", abs_err, rel_err);
  if (!flags.output.empty()) {
    write_rule_csv(rule, flags.output);
    std::filesystem::path jp(flags.output);
    jp.replace_extension(".json");
    write_rule_header_json(rule, jp);
    std::printf("wrote %s and %s\n", flags.output.c_str(), jp.c_str());
  }
  if (within_budget && rel_err > 1e-9) {
    std::printf("verdict: FAILED exactness within budget\n");
    return kExitNumerical;
  }
  std::printf("verdict: %s\n", within_budget ? "exact" : "beyond guaranteed degree");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "symcos: (anti)symmetric multivariate cosine transforms, Chebyshev-like "
      "polynomial families, and cubature rules"};
  app.require_subcommand(1);

  CommonFlags flags;
  bool image = false;
  bool long_run = false;
  std::vector<int> N_list;
  std::string eval_plane;
  std::string function_spec;
  int eval_res = 64;
  int max_k1 = 2;
  selftest::Options self;

  auto add_common = [&flags](CLI::App* cmd, bool with_kind = true) {
    cmd->add_option("--n", flags.n, "dimension (1..8)")
        ->check(CLI::Range(1, 8));
    cmd->add_option("--N", flags.N, "resolution parameter")->check(CLI::Range(1, 1000));
    if (with_kind) {
      cmd->add_option("--kind", flags.kind_type, "DCT type I..VIII");
      cmd->add_option("--symmetry", flags.symmetry, "sym or anti");
    }
    cmd->add_option("--seed", flags.seed, "random seed for sweeps");
  };

  CLI::App* nodes = app.add_subcommand("nodes", "export a grid as CSV");
  add_common(nodes);
  nodes->add_option("--output", flags.output, "output CSV path")->required();
  nodes->add_flag("--image", image, "also export phi-images (X-space nodes)");

  CLI::App* transform = app.add_subcommand(
      "transform", "forward transform of sampled data; spectrum as JSON");
  add_common(transform);
  transform->add_option("--input", flags.input, "sample CSV aligned with the grid");
  transform->add_option("--function", function_spec,
                        "sample a catalogue function instead of reading --input");
  transform->add_option("--output", flags.output, "spectrum JSON path")->required();
  transform->add_option("--eval-plane", eval_plane,
                        "emit interpolant values on a plane cut, e.g. x3=1/3");
  transform->add_option("--eval-res", eval_res, "plane lattice resolution")
      ->check(CLI::Range(2, 4096));

  CLI::App* interp = app.add_subcommand(
      "interp-error", "interpolation error sweep over N");
  add_common(interp);
  interp->add_option("--N-list", N_list, "list of N values");
  interp->add_option("--function", function_spec,
                     "catalogue function to interpolate (default: model)");
  interp->add_option("--quad-points", flags.quad_points,
                     "Gauss-Legendre points per axis")
      ->check(CLI::Range(4, 256));
  interp->add_flag("--long", long_run, "enable the long N > 15 runs");

  CLI::App* table = app.add_subcommand("poly-table",
                                       "coefficient tables of a family");
  add_common(table, false);
  table->add_option("--family", flags.family, "I+, I-, III+, III-")->required();
  table->add_option("--max-k1", max_k1, "largest k1")->check(CLI::Range(0, 16));
  table->add_option("--output", flags.output, "output CSV path")->required();

  CLI::App* cub = app.add_subcommand("cubature",
                                     "run a cubature rule against the oracle");
  add_common(cub);
  cub->add_option("--family", flags.family, "I+, I-, III+, III-")->required();
  cub->add_option("--input", flags.input, "polynomial JSON (default: f == 1)");
  cub->add_option("--output", flags.output, "optional rule CSV export");

  CLI::App* selfcmd = app.add_subcommand("selftest", "run the invariant suites");
  selfcmd->add_option("--suite", self.suite,
                      "all|kernels|gram|roundtrip|tables|jacobian|cubature");
  selfcmd->add_option("--n", self.n, "max dimension")->check(CLI::Range(1, 4));
  selfcmd->add_option("--N", self.N, "max resolution")->check(CLI::Range(2, 12));
  selfcmd->add_option("--seed", self.seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (nodes->parsed()) return cmd_nodes(flags, image);
    if (transform->parsed())
      return cmd_transform(flags, function_spec, eval_plane, eval_res);
    if (interp->parsed())
      return cmd_interp_error(flags, function_spec, N_list, long_run);
    if (table->parsed()) return cmd_poly_table(flags, max_k1);
    if (cub->parsed()) return cmd_cubature(flags);
    if (selfcmd->parsed())
      return selftest::run(self) == 0 ? kExitOk : kExitNumerical;
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const QuadratureError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::filesystem::filesystem_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kExitIo;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kExitIo;
  }
  return kExitValidation;
}

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

#include "symcos/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "symcos/kernels.hpp"
#include "symcos/numeric.hpp"

namespace symcos {

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial RationalPolynomial::constant(int n, const Rational& c) {
  RationalPolynomial p(n);
  p.add_term(Exponents(n, 0), c);
  return p;
}

RationalPolynomial RationalPolynomial::monomial(Exponents alpha,
                                                const Rational& c) {
  RationalPolynomial p(static_cast<int>(alpha.size()));
  p.add_term(alpha, c);
  return p;
}

int RationalPolynomial::total_degree() const {
  int d = 0;
  for (const auto& [a, c] : terms_)
    d = std::max(d, std::accumulate(a.begin(), a.end(), 0));
  return d;
}

void RationalPolynomial::add_term(const Exponents& alpha, const Rational& c) {
  if (static_cast<int>(alpha.size()) != n_)
    throw std::invalid_argument("RationalPolynomial: exponent arity mismatch");
  auto it = terms_.find(alpha);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(alpha, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a,
                             const RationalPolynomial& b) {
  if (a.n_ != b.n_)
    throw std::invalid_argument("RationalPolynomial: arity mismatch in product");
  RationalPolynomial out(a.n_);
  Exponents key(a.n_, 0);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.n_; ++i) key[i] = ea[i] + eb[i];
      out.add_term(key, ca * cb);
    }
  return out;
}

double RationalPolynomial::eval(std::span<const double> X) const {
  // The weight identities cancel from term magnitudes ~1e4 down to O(1)
  // values; extended precision keeps the 1e-9 relative bands honest.
  long double sum = 0.0L, comp = 0.0L;
  for (const auto& [a, c] : terms_) {
    long double t = static_cast<long double>(c.get_num().get_d()) /
                    static_cast<long double>(c.get_den().get_d());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (int e = 0; e < a[i]; ++e) t *= static_cast<long double>(X[i]);
    const long double s = sum + t;
    if (std::abs(sum) >= std::abs(t))
      comp += (sum - s) + t;
    else
      comp += (t - s) + sum;
    sum = s;
  }
  return static_cast<double>(sum + comp);
}

std::string RationalPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_fraction_string(c);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      os << "*X" << (i + 1);
      if (a[i] > 1) os << "^" << a[i];
    }
  }
  return os.str();
}

double eval_polynomial(const RationalPolynomial& p, std::span<const double> X) {
  return p.eval(X);
}

// ---------------------------------------------------------------------------
// CosExpansion

bool basis_symmetric(CosBasis b) {
  return b == CosBasis::sym_int || b == CosBasis::sym_half;
}
bool basis_half(CosBasis b) {
  return b == CosBasis::sym_half || b == CosBasis::anti_half;
}

Rational CosExpansion::coefficient(const Label& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CosExpansion::accumulate(const Label& label, const Rational& c) {
  if (c == 0) return;
  Label canon;
  Rational coef = c;
  if (basis_symmetric(basis_)) {
    canon = canonicalize_symmetric(label);
  } else {
    auto [cl, sign] = canonicalize_antisymmetric(label);
    if (sign == 0) return;
    canon = std::move(cl);
    if (sign < 0) coef = -coef;
  }
  auto it = terms_.find(canon);
  if (it == terms_.end()) {
    terms_.emplace(std::move(canon), coef);
    return;
  }
  it->second += coef;
  if (it->second == 0) terms_.erase(it);
}

CosExpansion& CosExpansion::operator+=(const CosExpansion& o) {
  return add_scaled(o, 1);
}

CosExpansion& CosExpansion::add_scaled(const CosExpansion& o, const Rational& s) {
  if (o.basis_ != basis_)
    throw std::invalid_argument("CosExpansion: mixed bases");
  for (const auto& [l, c] : o.terms_) {
    auto it = terms_.find(l);
    if (it == terms_.end()) {
      if (s * c != 0) terms_.emplace(l, s * c);
      continue;
    }
    it->second += s * c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

double CosExpansion::eval(std::span<const double> x) const {
  CompensatedSum acc;
  const bool sym = basis_symmetric(basis_);
  for (const auto& [l, c] : terms_)
    acc.add(to_double(c) * (sym ? eval_cos_sym(l, x) : eval_cos_anti(l, x)));
  return acc.value();
}

CosExpansion product_rule(const Label& a, CosBasis basis_a, const Label& b,
                          CosBasis basis_b) {
  const int n = a.dim();
  if (b.dim() != n) throw std::invalid_argument("product_rule: arity mismatch");
  const bool sa = basis_symmetric(basis_a), sb = basis_symmetric(basis_b);
  if (sa && !sb)
    throw std::invalid_argument(
        "product_rule: unsupported combination (sym * anti); swap the factors");
  const bool out_sym = sa || !sb;  // (+,+)->+, (-,+)->-, (-,-)->+
  const bool out_half = basis_half(basis_a) != basis_half(basis_b);
  CosBasis out_basis = out_sym ? (out_half ? CosBasis::sym_half : CosBasis::sym_int)
                               : (out_half ? CosBasis::anti_half : CosBasis::anti_int);
  CosExpansion out(out_basis);
  const bool signed_sigma = !sa && !sb;
  const auto& pt = permutations(n);
  Rational pref = rational(1);
  for (int i = 0; i < n; ++i) pref /= 2;
  std::vector<std::int64_t> lab(n);
  for (std::size_t s = 0; s < pt.perms.size(); ++s) {
    const auto& p = pt.perms[s];
    const Rational term = signed_sigma && pt.signs[s] < 0 ? -pref : pref;
    for (int mask = 0; mask < (1 << n); ++mask) {
      for (int i = 0; i < n; ++i) {
        const std::int64_t bi = b.twice(p[i]);
        lab[i] = a.twice(i) + ((mask >> i) & 1 ? -bi : bi);
      }
      out.accumulate(Label::halves(lab, ShiftTag::none), term);
    }
  }
  return out;
}

CosExpansion multiply_term(const CosExpansion& e, const Label& b,
                           CosBasis basis_b) {
  if (basis_b != CosBasis::sym_int)
    throw std::invalid_argument("multiply_term: only sym_int factors supported");
  CosExpansion out(e.basis());
  for (const auto& [l, c] : e.terms())
    out.add_scaled(product_rule(l, e.basis(), b, basis_b), c);
  return out;
}

// ---------------------------------------------------------------------------
// Families

const char* family_name(Family f) {
  switch (f) {
    case Family::I_plus: return "I+";
    case Family::I_minus: return "I-";
    case Family::III_plus: return "III+";
    case Family::III_minus: return "III-";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "I+") return Family::I_plus;
  if (s == "I-") return Family::I_minus;
  if (s == "III+") return Family::III_plus;
  if (s == "III-") return Family::III_minus;
  throw std::invalid_argument("unknown family '" + s + "'");
}

CosBasis family_basis(Family f) {
  switch (f) {
    case Family::I_plus: return CosBasis::sym_int;
    case Family::I_minus: return CosBasis::anti_int;
    case Family::III_plus: return CosBasis::sym_half;
    case Family::III_minus: return CosBasis::anti_half;
  }
  throw std::logic_error("family_basis");
}

Label family_shift(Family f, int n) {
  switch (f) {
    case Family::I_plus: return Label::integers(std::vector<std::int64_t>(n, 0));
    case Family::I_minus: return Label::rho1(n);
    case Family::III_plus: return Label::rho(n);
    case Family::III_minus: return Label::rho2(n);
  }
  throw std::logic_error("family_shift");
}

bool family_symmetric(Family f) {
  return f == Family::I_plus || f == Family::III_plus;
}

namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// X^0 * seed in the family basis: the seed itself, except that for I+ the
// seed is the constant 1 = (1/n!) cos^+_0.
CosExpansion seed_expansion(Family f, int n) {
  CosExpansion e(family_basis(f));
  if (f == Family::I_plus)
    e.accumulate(family_shift(f, n), rational(1, factorial(n)));
  else
    e.accumulate(family_shift(f, n), 1);
  return e;
}

struct MonoKey {
  Family f;
  Exponents alpha;
  auto operator<=>(const MonoKey&) const = default;
};

struct PolyKey {
  Family f;
  std::vector<std::int64_t> k;
  auto operator<=>(const PolyKey&) const = default;
};

std::mutex g_mono_mutex;
std::map<MonoKey, CosExpansion> g_mono_cache;

std::mutex g_poly_mutex;
std::map<PolyKey, RationalPolynomial> g_poly_cache;

// linear extension of the dominance order: (k1, total sum, lexicographic)
using OrderKey = std::tuple<std::int64_t, std::int64_t, std::vector<std::int64_t>>;

OrderKey order_key(const std::vector<std::int64_t>& l) {
  return {l.empty() ? 0 : l[0], std::accumulate(l.begin(), l.end(), 0LL), l};
}

// l_i = (label_i - shift_i) / 2, the un-shifted integer index of a canonical
// basis label of the family.
std::vector<std::int64_t> unshift(const Label& lab, const Label& shift) {
  std::vector<std::int64_t> l(lab.dim());
  for (int i = 0; i < lab.dim(); ++i) {
    const std::int64_t d = lab.twice(i) - shift.twice(i);
    if (d % 2 != 0 || d < 0)
      throw std::logic_error("family label outside the shifted cone");
    l[i] = d / 2;
  }
  return l;
}

Exponents alpha_of(const std::vector<std::int64_t>& l) {
  Exponents a(l.size());
  for (std::size_t i = 0; i < l.size(); ++i)
    a[i] = static_cast<int>(l[i] - (i + 1 < l.size() ? l[i + 1] : 0));
  return a;
}

}  // namespace

const CosExpansion& monomial_to_cos(Family f, const Exponents& alpha) {
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("monomial_to_cos: negative exponent");
  MonoKey key{f, alpha};
  {
    std::lock_guard<std::mutex> lock(g_mono_mutex);
    auto it = g_mono_cache.find(key);
    if (it != g_mono_cache.end()) return it->second;
  }
  const int n = static_cast<int>(alpha.size());
  CosExpansion result = [&] {
    int j = -1;
    for (int i = n - 1; i >= 0; --i)
      if (alpha[i] > 0) {
        j = i;
        break;
      }
    if (j < 0) return seed_expansion(f, n);
    Exponents prev = alpha;
    --prev[j];
    const CosExpansion& base = monomial_to_cos(f, prev);
    return multiply_term(base, Label::ones(j + 1, n), CosBasis::sym_int);
  }();
  std::lock_guard<std::mutex> lock(g_mono_mutex);
  auto [it, inserted] = g_mono_cache.emplace(std::move(key), std::move(result));
  return it->second;  // first writer wins on a race
}

const RationalPolynomial& family_polynomial(Family f, const Label& k) {
  if (!k.integral() || !k.is_canonical())
    throw std::invalid_argument(
        "family_polynomial: k must be canonical with integer components");
  const int n = k.dim();
  PolyKey key{f, {}};
  key.k.resize(n);
  for (int i = 0; i < n; ++i) key.k[i] = k.integer_component(i);
  {
    std::lock_guard<std::mutex> lock(g_poly_mutex);
    auto it = g_poly_cache.find(key);
    if (it != g_poly_cache.end()) return it->second;
  }

  const Label shift = family_shift(f, n);
  const CosBasis basis = family_basis(f);

  // Peel the largest residual label under the linear order; each monomial
  // expansion is triangular with respect to it.
  CosExpansion residual(basis);
  residual.accumulate(k.shifted_by(shift), 1);
  RationalPolynomial poly(n);
  int guard = 0;
  while (!residual.empty()) {
    if (++guard > 200000)
      throw std::logic_error("family_polynomial: triangular solve diverged");
    const Label* top_lab = nullptr;
    std::vector<std::int64_t> top_l;
    OrderKey top_key;
    for (const auto& [lab, c] : residual.terms()) {
      auto l = unshift(lab, shift);
      auto ok = order_key(l);
      if (top_lab == nullptr || ok > top_key) {
        top_lab = &lab;
        top_l = std::move(l);
        top_key = std::move(ok);
      }
    }
    const Exponents alpha = alpha_of(top_l);
    const CosExpansion& expansion = monomial_to_cos(f, alpha);
    const Rational lead = expansion.coefficient(*top_lab);
    if (lead == 0)
      throw std::logic_error("family_polynomial: zero pivot in triangular solve");
    const Rational c = residual.coefficient(*top_lab) / lead;
    poly.add_term(alpha, c);
    residual.add_scaled(expansion, -c);
  }

  std::lock_guard<std::mutex> lock(g_poly_mutex);
  auto [it, inserted] = g_poly_cache.emplace(std::move(key), std::move(poly));
  return it->second;
}

// ---------------------------------------------------------------------------
// Weight polynomials, phi, Jacobian

namespace {

// Converts a sym_int cosine expansion to a polynomial via cos^+_l = P^{I,+}_l.
RationalPolynomial sym_int_to_polynomial(const CosExpansion& e, int n) {
  RationalPolynomial out(n);
  for (const auto& [lab, c] : e.terms()) {
    std::vector<std::int64_t> l(n);
    for (int i = 0; i < n; ++i) {
      if (lab.twice(i) % 2 != 0)
        throw std::logic_error("sym_int_to_polynomial: half-integer label");
      l[i] = lab.twice(i) / 2;
    }
    RationalPolynomial p = family_polynomial(Family::I_plus, Label::integers(l));
    p *= c;
    out += p;
  }
  return out;
}

// seed^2 always lands in the integer symmetric basis.
CosExpansion square_seed(Family f, int n) {
  const CosExpansion seed = seed_expansion(f, n);
  CosExpansion out(CosBasis::sym_int);
  for (const auto& [la, ca] : seed.terms())
    for (const auto& [lb, cb] : seed.terms())
      out.add_scaled(product_rule(la, seed.basis(), lb, seed.basis()), ca * cb);
  return out;
}

// sin^-_{(1,...,n)} squared, decomposed into integer symmetric cosines:
// 2^{-n} sum_sigma sgn(sigma) sum_a (-1)^{#(a=+1)} cos^+_{(i + a_i sigma(i))}.
CosExpansion squared_sine_determinant(int n) {
  CosExpansion out(CosBasis::sym_int);
  const auto& pt = permutations(n);
  Rational pref = 1;
  for (int i = 0; i < n; ++i) pref /= 2;
  std::vector<std::int64_t> lab(n);
  for (std::size_t s = 0; s < pt.perms.size(); ++s) {
    const auto& p = pt.perms[s];
    for (int mask = 0; mask < (1 << n); ++mask) {
      int positives = 0;
      for (int i = 0; i < n; ++i) {
        const std::int64_t mi = 2 * (p[i] + 1);
        if ((mask >> i) & 1) {
          lab[i] = 2 * (i + 1) - mi;
        } else {
          lab[i] = 2 * (i + 1) + mi;
          ++positives;
        }
      }
      Rational c = pref * pt.signs[s];
      if (positives % 2 != 0) c = -c;
      out.accumulate(Label::halves(lab, ShiftTag::none), c);
    }
  }
  return out;
}

}  // namespace

WeightPolynomial weight_polynomial(WeightKind which, int n) {
  if (n < 1 || n > kMaxDim)
    throw std::invalid_argument("weight_polynomial: dimension outside [1, 8]");
  WeightPolynomial out;
  switch (which) {
    case WeightKind::pI_plus: {
      // J^2 = pi^{2n} * C^2 * sin^-_{(1..n)}^2 with
      // C = (1/2)^{n(n-1)/2} prod (n-i)! i!.
      Rational c2 = 1;
      for (int i = 1; i <= n; ++i) {
        const Rational fi = rational(factorial(n - i) * factorial(i));
        c2 *= fi * fi;
      }
      for (int i = 0; i < n * (n - 1); ++i) c2 /= 2;
      out.poly = sym_int_to_polynomial(squared_sine_determinant(n), n);
      out.poly *= c2;
      out.pi_power = 2 * n;
      return out;
    }
    case WeightKind::JI_minus:
      out.poly = sym_int_to_polynomial(square_seed(Family::I_minus, n), n);
      return out;
    case WeightKind::JIII_plus:
      out.poly = sym_int_to_polynomial(square_seed(Family::III_plus, n), n);
      return out;
    case WeightKind::JIII_minus:
      out.poly = sym_int_to_polynomial(square_seed(Family::III_minus, n), n);
      return out;
  }
  throw std::logic_error("weight_polynomial");
}

std::vector<double> phi_map(std::span<const double> x) {
  // X_j = (n-j)! j! e_j(cos(pi x_1),...,cos(pi x_n))
  const int n = static_cast<int>(x.size());
  if (n < 1 || n > kMaxDim)
    throw std::invalid_argument("phi_map: dimension outside [1, 8]");
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const double c = std::cos(std::numbers::pi * x[i]);
    for (int j = std::min(i + 1, n); j >= 1; --j) e[j] += c * e[j - 1];
  }
  std::vector<double> X(n);
  for (int j = 1; j <= n; ++j)
    X[j - 1] = static_cast<double>(factorial(n - j) * factorial(j)) * e[j];
  return X;
}

double jacobian_eval(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  if (n < 1 || n > kMaxDim)
    throw std::invalid_argument("jacobian_eval: dimension outside [1, 8]");
  double pref = (((n * (n + 1)) / 2) % 2 == 0) ? 1.0 : -1.0;
  pref = std::ldexp(pref, -(n * (n - 1)) / 2);
  pref *= std::pow(std::numbers::pi, n);
  for (int i = 1; i <= n; ++i)
    pref *= static_cast<double>(factorial(n - i) * factorial(i));
  double s = std::ldexp(1.0, n * (n - 1));
  for (int i = 0; i < n; ++i) s *= std::sin(std::numbers::pi * x[i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      s *= std::sin(0.5 * std::numbers::pi * (x[i] + x[j])) *
           std::sin(0.5 * std::numbers::pi * (x[i] - x[j]));
  return pref * s;
}

}  // namespace symcos

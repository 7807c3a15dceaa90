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

#ifndef SYMCOS_POLYNOMIAL_HPP_
#define SYMCOS_POLYNOMIAL_HPP_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "symcos/label.hpp"
#include "symcos/rational.hpp"

namespace symcos {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial in X_1..X_n with exact rational
// coefficients. Zero coefficients are never stored.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(int n) : n_(n) {}

  static RationalPolynomial constant(int n, const Rational& c);
  static RationalPolynomial monomial(Exponents alpha, const Rational& c);

  int dim() const { return n_; }
  bool empty() const { return terms_.empty(); }
  int total_degree() const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& alpha, const Rational& c);

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& c);
  friend RationalPolynomial operator+(RationalPolynomial a,
                                      const RationalPolynomial& b) {
    return a += b;
  }
  friend RationalPolynomial operator-(RationalPolynomial a,
                                      const RationalPolynomial& b) {
    return a -= b;
  }
  friend RationalPolynomial operator*(const RationalPolynomial& a,
                                      const RationalPolynomial& b);
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) {
    return a *= c;
  }
  friend bool operator==(const RationalPolynomial&,
                         const RationalPolynomial&) = default;

  // Direct sparse evaluation with compensated summation.
  double eval(std::span<const double> X) const;

  std::string str() const;

 private:
  int n_ = 0;
  std::map<Exponents, Rational> terms_;
};

// Cosine basis of an expansion: symmetry x label fractionality.
enum class CosBasis { sym_int, anti_int, sym_half, anti_half };

bool basis_symmetric(CosBasis b);
bool basis_half(CosBasis b);

// Exact finite linear combination of canonical-label cosine functions of one
// basis. Antisymmetric bases never hold labels with repeated components.
class CosExpansion {
 public:
  explicit CosExpansion(CosBasis basis) : basis_(basis) {}

  CosBasis basis() const { return basis_; }
  const std::map<Label, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Rational coefficient(const Label& l) const;

  // Accumulates c * cos_{label}, canonicalizing first. Antisymmetric
  // collisions (sign 0) drop out.
  void accumulate(const Label& label, const Rational& c);

  CosExpansion& operator+=(const CosExpansion& o);
  CosExpansion& add_scaled(const CosExpansion& o, const Rational& s);

  // Pointwise value at x (for cross-checks against the kernels).
  double eval(std::span<const double> x) const;

 private:
  CosBasis basis_;
  std::map<Label, Rational> terms_;
};

// Product-to-sum decomposition of cos_a * cos_b: the 2^n n! term sum with
// 1/2^n prefactor (and sgn sigma when both factors are antisymmetric).
// Supported symmetry combinations: (+,+) -> +, (-,+) -> -, (-,-) -> +.
CosExpansion product_rule(const Label& a, CosBasis basis_a, const Label& b,
                          CosBasis basis_b);

// expansion * cos_b, term by term.
CosExpansion multiply_term(const CosExpansion& e, const Label& b,
                           CosBasis basis_b);

// The four polynomial families: degree-k_1 eigenbasis of the weighted
// integrals, one per seed function (1, cos^-_{rho1}, cos^+_{rho},
// cos^-_{rho2}).
enum class Family { I_plus, I_minus, III_plus, III_minus };

const char* family_name(Family f);
Family family_from_string(const std::string& s);
// Basis of expansions of X^alpha * seed for the family.
CosBasis family_basis(Family f);
// Label shift: none, rho1, rho, rho2.
Label family_shift(Family f, int n);
bool family_symmetric(Family f);

// Expansion of X^alpha * seed(family) in the family's cosine basis.
// Memoized; returned reference stays valid for the process lifetime.
const CosExpansion& monomial_to_cos(Family f, const Exponents& alpha);

// The unique polynomial with P(X(x)) * seed(x) = cos_{k+shift}(x).
// k must be canonical with non-negative integer components. Memoized.
const RationalPolynomial& family_polynomial(Family f, const Label& k);

// Exact weight polynomials: evaluation at X(x) equals J(x)^2 (pI_plus, with
// pi^{2n} carried in pi_power), cos^-_{rho1}(x)^2, cos^+_rho(x)^2,
// cos^-_{rho2}(x)^2 respectively.
enum class WeightKind { pI_plus, JI_minus, JIII_plus, JIII_minus };

struct WeightPolynomial {
  RationalPolynomial poly;
  int pi_power = 0;  // multiply by pi^pi_power when evaluating
};

WeightPolynomial weight_polynomial(WeightKind which, int n);

// phi: x -> (X_1(x),...,X_n(x)).
std::vector<double> phi_map(std::span<const double> x);

// Closed-form Jacobian determinant of phi at x.
double jacobian_eval(std::span<const double> x);

double eval_polynomial(const RationalPolynomial& p, std::span<const double> X);

}  // namespace symcos

#endif  // SYMCOS_POLYNOMIAL_HPP_

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

#ifndef SYMCOS_RATIONAL_HPP_
#define SYMCOS_RATIONAL_HPP_

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace symcos {

// Exact arbitrary-precision rational. All coefficient arithmetic in the
// polynomial engine and the integral oracle is carried out in this type;
// doubles appear only at evaluation boundaries.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// mpq_get_d truncates toward zero; for mantissa-sized operands divide in
// extended precision instead so the result is correctly rounded.
inline double to_double(const Rational& q) {
  constexpr double kMantissa = 9007199254740992.0;  // 2^53
  const double num = q.get_num().get_d();
  const double den = q.get_den().get_d();
  if (std::abs(num) < kMantissa && den < kMantissa)
    return static_cast<double>(static_cast<long double>(num) /
                               static_cast<long double>(den));
  return q.get_d();
}

// Serializes as "p" or "p/q", canonical and sign-on-numerator.
inline std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "p" or "p/q".
inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rational_from_string: bad input '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("rational component exceeds int64 range");
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace symcos

#endif  // SYMCOS_RATIONAL_HPP_

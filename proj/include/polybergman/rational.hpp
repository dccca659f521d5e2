// Copyright 2026 The polybergman Authors
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

#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace polybergman {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact complex number with arbitrary-precision rational parts.
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT(implicit)
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(long r) : re(r) {}  // NOLINT(implicit)

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  ComplexRational conj() const { return {re, -im}; }
  /// |x|^2, exact.
  Rational norm() const { return re * re + im * im; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o);
  ComplexRational& operator*=(const Rational& s) {
    re *= s;
    im *= s;
    return *this;
  }
  ComplexRational& operator/=(const Rational& s) {
    re /= s;
    im /= s;
    return *this;
  }
};

inline ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
inline ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
inline ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
inline ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
inline ComplexRational operator*(ComplexRational a, const Rational& s) { return a *= s; }
inline ComplexRational operator*(const Rational& s, ComplexRational a) { return a *= s; }
inline ComplexRational operator/(ComplexRational a, const Rational& s) { return a /= s; }
ComplexRational operator/(const ComplexRational& a, const ComplexRational& b);
inline bool operator==(const ComplexRational& a, const ComplexRational& b) {
  return a.re == b.re && a.im == b.im;
}

ComplexRational pow(const ComplexRational& base, unsigned exponent);

/// Canonical "p/q" (or "p" for integers) string of an exact rational.
std::string to_string(const Rational& q);

/// Parses "p", "p/q" or a finite decimal such as "-0.125" into an exact rational.
Rational parse_rational(const std::string& text);

/// Exact rational equal to the binary value of `x` (every finite double is dyadic).
Rational exact_rational(double x);

/// Exact binomial coefficient C(n, k); zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace polybergman

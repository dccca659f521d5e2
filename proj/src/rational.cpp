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

#include "polybergman/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace polybergman {

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
  const Rational d = b.norm();
  if (sgn(d) == 0) throw std::domain_error("ComplexRational: division by zero");
  return (a * b.conj()) / d;
}

ComplexRational pow(const ComplexRational& base, unsigned exponent) {
  ComplexRational result(1);
  ComplexRational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto dot = text.find('.');
  const auto exp = text.find_first_of("eE");
  if (dot == std::string::npos && exp == std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  // Decimal literal: mantissa digits over a power of ten.
  std::string mantissa = text.substr(0, exp);
  long exponent = 0;
  if (exp != std::string::npos) {
    try {
      exponent = std::stol(text.substr(exp + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in: " + text);
    }
  }
  if (dot != std::string::npos && dot < mantissa.size()) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  if (mantissa.empty() || mantissa == "-" || mantissa == "+") {
    throw std::invalid_argument("bad decimal literal: " + text);
  }
  if (mantissa.front() == '+') mantissa.erase(0, 1);
  Integer digits;
  if (digits.set_str(mantissa, 10) != 0) throw std::invalid_argument("bad decimal literal: " + text);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational q = exponent >= 0 ? Rational(digits * scale) : Rational(digits, scale);
  q.canonicalize();
  return q;
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("exact_rational: non-finite value");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer c;
  if (k > n) return c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

}  // namespace polybergman

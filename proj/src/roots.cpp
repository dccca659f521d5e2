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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <numbers>
#include <stdexcept>

#include <mpfr.h>

#include <Eigen/Eigenvalues>

#include "polybergman/qanalysis.hpp"

namespace polybergman {

namespace {

/// Owning mpfr_t with a fixed precision.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  MpReal(const MpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpReal& operator=(const MpReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

struct MpComplex {
  explicit MpComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
  MpReal re;
  MpReal im;
};

/// Scratch registers for complex arithmetic at one precision.
class Workspace {
 public:
  explicit Workspace(mpfr_prec_t prec) : prec_(prec), t1_(prec), t2_(prec), t3_(prec), t4_(prec) {}

  mpfr_prec_t prec() const { return prec_; }

  // out = a * b; out may alias a or b.
  void mul(MpComplex& out, const MpComplex& a, const MpComplex& b) {
    mpfr_mul(t1_.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2_.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t3_.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_fma(out.im.get(), a.im.get(), b.re.get(), t3_.get(), MPFR_RNDN);
    mpfr_sub(out.re.get(), t1_.get(), t2_.get(), MPFR_RNDN);
  }

  // out = a / b; out may alias a or b.
  void div(MpComplex& out, const MpComplex& a, const MpComplex& b) {
    MpReal& den = t4_;
    mpfr_sqr(den.get(), b.re.get(), MPFR_RNDN);
    mpfr_fma(den.get(), b.im.get(), b.im.get(), den.get(), MPFR_RNDN);
    mpfr_mul(t1_.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_fma(t1_.get(), a.im.get(), b.im.get(), t1_.get(), MPFR_RNDN);
    mpfr_mul(t2_.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t3_.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(t2_.get(), t2_.get(), t3_.get(), MPFR_RNDN);
    mpfr_div(out.re.get(), t1_.get(), den.get(), MPFR_RNDN);
    mpfr_div(out.im.get(), t2_.get(), den.get(), MPFR_RNDN);
  }

  static void sub(MpComplex& out, const MpComplex& a, const MpComplex& b) {
    mpfr_sub(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  }

  static void add(MpComplex& out, const MpComplex& a, const MpComplex& b) {
    mpfr_add(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  }

  /// |a| as a double (magnitude only needs to steer the iteration).
  static double abs(const MpComplex& a) {
    long ere = 0;
    long eim = 0;
    const double mre = mpfr_get_d_2exp(&ere, a.re.get(), MPFR_RNDN);
    const double mim = mpfr_get_d_2exp(&eim, a.im.get(), MPFR_RNDN);
    const long e = std::max(mre != 0.0 ? ere : std::numeric_limits<long>::min() / 2,
                            mim != 0.0 ? eim : std::numeric_limits<long>::min() / 2);
    if (mre == 0.0 && mim == 0.0) return 0.0;
    const double r = std::hypot(std::ldexp(mre, static_cast<int>(std::max(ere - e, -2000L))),
                                std::ldexp(mim, static_cast<int>(std::max(eim - e, -2000L))));
    return std::ldexp(r, static_cast<int>(std::clamp(e, -100000L, 100000L)));
  }

  /// log2 |a|, robust to exponents outside the double range.
  static double log2_abs(const MpComplex& a) {
    long ere = 0;
    long eim = 0;
    const double mre = mpfr_get_d_2exp(&ere, a.re.get(), MPFR_RNDN);
    const double mim = mpfr_get_d_2exp(&eim, a.im.get(), MPFR_RNDN);
    if (mre == 0.0 && mim == 0.0) return -std::numeric_limits<double>::infinity();
    if (mre == 0.0) return std::log2(std::abs(mim)) + static_cast<double>(eim);
    if (mim == 0.0) return std::log2(std::abs(mre)) + static_cast<double>(ere);
    const long e = std::max(ere, eim);
    const double r = std::hypot(std::ldexp(mre, static_cast<int>(std::max(ere - e, -2000L))),
                                std::ldexp(mim, static_cast<int>(std::max(eim - e, -2000L))));
    return std::log2(r) + static_cast<double>(e);
  }

 private:
  mpfr_prec_t prec_;
  MpReal t1_;
  MpReal t2_;
  MpReal t3_;
  MpReal t4_;
};

void set_from(MpComplex& out, const MpComplex& in) {
  mpfr_set(out.re.get(), in.re.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), in.im.get(), MPFR_RNDN);
}

/// Evaluates p and p' at z by Horner.
void horner2(Workspace& ws, const std::vector<MpComplex>& coeffs, const MpComplex& z, MpComplex& p, MpComplex& dp) {
  const std::size_t d = coeffs.size() - 1;
  set_from(p, coeffs[d]);
  mpfr_set_zero(dp.re.get(), 1);
  mpfr_set_zero(dp.im.get(), 1);
  for (std::size_t k = d; k-- > 0;) {
    ws.mul(dp, dp, z);
    Workspace::add(dp, dp, p);
    ws.mul(p, p, z);
    Workspace::add(p, p, coeffs[k]);
  }
}

/// Diagonal similarity (radix 2) equalizing row and column norms, in place.
void balance(Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  for (bool changed = true; changed;) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = m.col(i).cwiseAbs().sum() - std::abs(m(i, i));
      double r = m.row(i).cwiseAbs().sum() - std::abs(m(i, i));
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      while (c < r / 2.0) {
        f *= 2.0;
        c *= 4.0;
      }
      while (c > r * 2.0) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s) {
        changed = true;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

/// log2 |q| for q != 0, valid far outside the double exponent range.
double log2_abs(const Rational& q) {
  MpReal v(64);
  mpfr_set_q(v.get(), q.get_mpq_t(), MPFR_RNDN);
  mpfr_abs(v.get(), v.get(), MPFR_RNDN);
  mpfr_log2(v.get(), v.get(), MPFR_RNDN);
  return v.to_double();
}

/// Starting points on circles whose radii come from the upper convex hull of
/// (k, log2 |c_k|) (the Newton polygon), one circle per hull edge.
std::vector<std::complex<double>> newton_polygon_guesses(const std::vector<Rational>& c) {
  const std::size_t d = c.size() - 1;
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = 0; k <= d; ++k) {
    if (sgn(c[k]) != 0) pts.emplace_back(static_cast<double>(k), log2_abs(c[k]));
  }
  std::vector<std::pair<double, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const double cross = (b.first - a.first) * (p.second - a.second) - (b.second - a.second) * (p.first - a.first);
      if (cross >= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  std::vector<std::complex<double>> out;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const double width = hull[e + 1].first - hull[e].first;
    const double log2_radius = (hull[e].second - hull[e + 1].second) / width;
    const double radius = std::exp2(std::clamp(log2_radius, -1000.0, 1000.0));
    const auto m = static_cast<std::size_t>(width);
    for (std::size_t j = 0; j < m; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m) +
                           2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(d) + 0.7;
      out.push_back(std::polar(radius, theta));
    }
  }
  return out;
}

/// Initial approximations: eigenvalues of the balanced companion matrix of the scaled
/// polynomial p(s tau). Falls back to Newton-polygon circles when the scaled coefficients
/// are not representable in double or the eigenvalues are unusable.
std::vector<std::complex<double>> initial_guesses(const std::vector<Rational>& c, mpfr_prec_t prec) {
  const std::size_t d = c.size() - 1;
  // s = |c_0 / c_d|^{1/d}, the geometric mean of the root moduli.
  const double log2_scale = (log2_abs(c[0]) - log2_abs(c[d])) / static_cast<double>(d);

  // Monic scaled coefficients a_k = c_k s^k / (c_d s^d).
  std::vector<double> a(d);
  bool representable = std::isfinite(log2_scale);
  MpReal lead(prec);
  MpReal tmp(prec);
  MpReal factor(prec);
  mpfr_set_q(lead.get(), c[d].get_mpq_t(), MPFR_RNDN);
  for (std::size_t k = 0; k < d && representable; ++k) {
    mpfr_set_q(tmp.get(), c[k].get_mpq_t(), MPFR_RNDN);
    mpfr_div(tmp.get(), tmp.get(), lead.get(), MPFR_RNDN);
    mpfr_set_d(factor.get(), log2_scale * (static_cast<double>(k) - static_cast<double>(d)), MPFR_RNDN);
    mpfr_exp2(factor.get(), factor.get(), MPFR_RNDN);
    mpfr_mul(tmp.get(), tmp.get(), factor.get(), MPFR_RNDN);
    a[k] = tmp.to_double();
    representable = std::isfinite(a[k]);
  }

  const double scale = std::exp2(log2_scale);
  std::vector<std::complex<double>> guesses;
  if (representable && std::isfinite(scale) && scale > 0.0) {
    const auto n = static_cast<Eigen::Index>(d);
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index k = 0; k < n; ++k) companion(k, n - 1) = -a[static_cast<std::size_t>(k)];
    balance(companion);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() == Eigen::Success) {
      for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) guesses.push_back(scale * solver.eigenvalues()(i));
    }
  }
  bool usable = guesses.size() == d;
  for (std::size_t i = 0; i < guesses.size() && usable; ++i) {
    usable = std::isfinite(guesses[i].real()) && std::isfinite(guesses[i].imag()) && guesses[i] != 0.0;
  }
  if (!usable) guesses = newton_polygon_guesses(c);
  // Coincident starting points stall simultaneous iterations; nudge duplicates apart.
  for (std::size_t i = 0; i < guesses.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (guesses[i] == guesses[j]) {
        guesses[i] *= std::polar(1.0 + 1e-6 * static_cast<double>(i + 1), 1e-3 * static_cast<double>(i + 1));
      }
    }
  }
  return guesses;
}

/// log2 of 4 d 2^-prec sum_k |c_k| |z|^k, a bound on the rounding error of Horner at z.
double noise_floor_log2(const std::vector<MpReal>& abs_coeffs, const MpComplex& z, mpfr_prec_t prec) {
  MpReal r(53);
  MpReal acc(53);
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDU);
  const std::size_t d = abs_coeffs.size() - 1;
  mpfr_set(acc.get(), abs_coeffs[d].get(), MPFR_RNDU);
  for (std::size_t k = d; k-- > 0;) {
    mpfr_mul(acc.get(), acc.get(), r.get(), MPFR_RNDU);
    mpfr_add(acc.get(), acc.get(), abs_coeffs[k].get(), MPFR_RNDU);
  }
  mpfr_log2(acc.get(), acc.get(), MPFR_RNDU);
  return acc.to_double() + std::log2(4.0 * static_cast<double>(d + 1)) - static_cast<double>(prec);
}

/// Aberth-Ehrlich iteration at the workspace precision, in place.
void aberth(Workspace& ws, const std::vector<MpComplex>& coeffs, std::vector<MpComplex>& z) {
  const mpfr_prec_t prec = ws.prec();
  const std::size_t d = z.size();
  std::vector<MpReal> abs_coeffs(coeffs.size(), MpReal(53));
  for (std::size_t k = 0; k < coeffs.size(); ++k) mpfr_abs(abs_coeffs[k].get(), coeffs[k].re.get(), MPFR_RNDU);
  MpComplex p(prec), dp(prec), ratio(prec), diff(prec), w(prec), tmp(prec);
  std::vector<bool> converged(d, false);
  std::vector<double> previous(d, std::numeric_limits<double>::infinity());
  const double tolerance_log2 = -static_cast<double>(prec) + 6.0;
  // Below this relative step size a step that fails to halve means rounding noise.
  const double noise_log2 = -static_cast<double>(prec) / 2.0;
  const int max_iterations = 200 + 4 * static_cast<int>(d);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool all = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (converged[i]) continue;
      horner2(ws, coeffs, z[i], p, dp);
      if (mpfr_zero_p(p.re.get()) && mpfr_zero_p(p.im.get())) {
        converged[i] = true;
        continue;
      }
      // |p(z)| under the rounding error bound of Horner: no further progress at this precision.
      if (Workspace::log2_abs(p) < noise_floor_log2(abs_coeffs, z[i], prec)) {
        converged[i] = true;
        continue;
      }
      ws.div(ratio, p, dp);
      // The Aberth correction only steers the iteration (its fixed points are the roots
      // whatever its accuracy), so it is accumulated in double.
      std::complex<double> sum(0.0, 0.0);
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        Workspace::sub(diff, z[i], z[j]);
        const std::complex<double> dd(diff.re.to_double(), diff.im.to_double());
        if (dd != 0.0) sum += 1.0 / dd;
      }
      const std::complex<double> rd(ratio.re.to_double(), ratio.im.to_double());
      const std::complex<double> denom = 1.0 - rd * sum;
      if (std::isfinite(denom.real()) && std::isfinite(denom.imag()) && denom != 0.0) {
        mpfr_set_d(tmp.re.get(), denom.real(), MPFR_RNDN);
        mpfr_set_d(tmp.im.get(), denom.imag(), MPFR_RNDN);
        ws.div(w, ratio, tmp);
      } else {
        set_from(w, ratio);
      }
      Workspace::sub(z[i], z[i], w);
      const double step = Workspace::log2_abs(w);
      const double size = std::max(Workspace::log2_abs(z[i]), 0.0);
      const double relative = step - size;
      if (relative < tolerance_log2 || (relative < noise_log2 && step > previous[i] - 1.0)) {
        converged[i] = true;
      } else {
        all = false;
      }
      previous[i] = step;
    }
    if (all) break;
  }
}

/// Exact value z = (x + i y) 2^e of a multiprecision point.
struct DyadicPoint {
  Integer x;
  Integer y;
  long e = 0;  // common binary exponent
};

DyadicPoint to_dyadic(const MpComplex& z) {
  // Both parts go on the grid 2^g with g set by the larger part and the precision, so a
  // negligible component cannot inflate the exponent range of the exact evaluation.
  DyadicPoint out;
  const bool re_zero = mpfr_zero_p(z.re.get()) != 0;
  const bool im_zero = mpfr_zero_p(z.im.get()) != 0;
  if (re_zero && im_zero) return out;
  long top = std::numeric_limits<long>::min();
  if (!re_zero) top = std::max(top, static_cast<long>(mpfr_get_exp(z.re.get())));
  if (!im_zero) top = std::max(top, static_cast<long>(mpfr_get_exp(z.im.get())));
  const long grid = top - static_cast<long>(mpfr_get_prec(z.re.get())) - 8;
  auto quantize = [grid](mpfr_srcptr v, Integer& m) {
    if (mpfr_zero_p(v)) {
      m = 0;
      return;
    }
    const long e = mpfr_get_z_2exp(m.get_mpz_t(), v);
    if (e >= grid) {
      m <<= static_cast<mp_bitcnt_t>(e - grid);
    } else {
      mpz_tdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(grid - e));
    }
  };
  quantize(z.re.get(), out.x);
  quantize(z.im.get(), out.y);
  out.e = grid;
  return out;
}

ComplexRational to_rational(const DyadicPoint& p) {
  Rational re(p.x);
  Rational im(p.y);
  if (p.e >= 0) {
    re <<= static_cast<mp_bitcnt_t>(p.e);
    im <<= static_cast<mp_bitcnt_t>(p.e);
  } else {
    re >>= static_cast<mp_bitcnt_t>(-p.e);
    im >>= static_cast<mp_bitcnt_t>(-p.e);
  }
  return {re, im};
}

std::size_t bit_length(const Integer& v) { return sgn(v) == 0 ? 1 : mpz_sizeinbase(v.get_mpz_t(), 2); }

/// Upper bound on |p(z)|: Horner in multiprecision at the exact point z, plus the a priori
/// rounding bound 16 (d + 1) u sum_k |c_k| |z|^k (coefficient rounding included).
void residual_upper_bound(const std::vector<Rational>& c, const DyadicPoint& z, mpfr_prec_t work, MpReal& out) {
  const std::size_t d = c.size() - 1;
  const auto prec = std::max<mpfr_prec_t>(work, static_cast<mpfr_prec_t>(std::max(bit_length(z.x), bit_length(z.y)) + 2));
  Workspace ws(prec);
  MpComplex zz(prec);
  mpfr_set_z(zz.re.get(), z.x.get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(zz.im.get(), z.y.get_mpz_t(), MPFR_RNDN);
  mpfr_mul_2si(zz.re.get(), zz.re.get(), z.e, MPFR_RNDN);
  mpfr_mul_2si(zz.im.get(), zz.im.get(), z.e, MPFR_RNDN);

  constexpr mpfr_prec_t kBound = 64;
  MpReal absz(kBound);
  mpfr_hypot(absz.get(), zz.re.get(), zz.im.get(), MPFR_RNDU);
  MpReal scale(kBound);
  MpReal ck(kBound);

  MpComplex acc(prec);
  MpComplex term(prec);
  for (std::size_t k = d + 1; k-- > 0;) {
    ws.mul(acc, acc, zz);
    mpfr_set_q(term.re.get(), c[k].get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc.re.get(), acc.re.get(), term.re.get(), MPFR_RNDN);
    mpfr_set_q(ck.get(), c[k].get_mpq_t(), MPFR_RNDU);
    mpfr_abs(ck.get(), ck.get(), MPFR_RNDU);
    mpfr_fma(scale.get(), scale.get(), absz.get(), ck.get(), MPFR_RNDU);
  }
  mpfr_hypot(out.get(), acc.re.get(), acc.im.get(), MPFR_RNDU);
  mpfr_mul_ui(scale.get(), scale.get(), 16 * static_cast<unsigned long>(d + 1), MPFR_RNDU);
  mpfr_mul_2si(scale.get(), scale.get(), -static_cast<long>(prec), MPFR_RNDU);
  mpfr_add(out.get(), out.get(), scale.get(), MPFR_RNDU);
}

/// Lower bound on |a - b|, from the exact difference on a common grid.
double distance_lower_bound(const DyadicPoint& a, const DyadicPoint& b, Integer& dx, Integer& dy, MpReal& tmp) {
  const long e = std::min(a.e, b.e);
  const auto sa = static_cast<mp_bitcnt_t>(a.e - e);
  const auto sb = static_cast<mp_bitcnt_t>(b.e - e);
  dx = (a.x << sa) - (b.x << sb);
  dy = (a.y << sa) - (b.y << sb);
  if (sgn(dx) == 0 && sgn(dy) == 0) return 0.0;
  const auto bits = static_cast<mpfr_prec_t>(std::max(bit_length(dx), bit_length(dy)));
  // Keep only the leading bits; truncation toward zero keeps a lower bound.
  const long drop = std::max<long>(0, static_cast<long>(bits) - 80);
  mpz_tdiv_q_2exp(dx.get_mpz_t(), dx.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
  mpz_tdiv_q_2exp(dy.get_mpz_t(), dy.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
  mpz_abs(dx.get_mpz_t(), dx.get_mpz_t());
  mpz_abs(dy.get_mpz_t(), dy.get_mpz_t());
  MpReal other(mpfr_get_prec(tmp.get()));
  mpfr_set_z(tmp.get(), dx.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(other.get(), dy.get_mpz_t(), MPFR_RNDD);
  mpfr_hypot(tmp.get(), tmp.get(), other.get(), MPFR_RNDD);
  mpfr_mul_2si(tmp.get(), tmp.get(), e + drop, MPFR_RNDD);
  return mpfr_get_d(tmp.get(), MPFR_RNDD);
}

/// |p(z)| < tol |c_d| max(1, |z|)^d, with `bound` an upper bound on |p(z)|.
bool residual_small(const MpReal& bound, const MpReal& lead_lower, const DyadicPoint& z, std::size_t d, double tol) {
  MpReal scale(64);
  MpReal im(64);
  // |z| from below; z = (x + i y) 2^e.
  mpfr_set_z(scale.get(), z.x.get_mpz_t(), MPFR_RNDZ);
  mpfr_set_z(im.get(), z.y.get_mpz_t(), MPFR_RNDZ);
  mpfr_hypot(scale.get(), scale.get(), im.get(), MPFR_RNDD);
  mpfr_mul_2si(scale.get(), scale.get(), z.e, MPFR_RNDD);
  if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
  mpfr_pow_ui(scale.get(), scale.get(), static_cast<unsigned long>(d), MPFR_RNDD);
  mpfr_mul(scale.get(), scale.get(), lead_lower.get(), MPFR_RNDD);
  mpfr_mul_d(scale.get(), scale.get(), tol, MPFR_RNDD);
  return mpfr_cmp(bound.get(), scale.get()) < 0;
}

struct Certification {
  std::vector<RootEnclosure> roots;
  bool done = false;
};

Certification certify(const std::vector<Rational>& c, const std::vector<MpComplex>& z, const RootOptions& options) {
  const std::size_t d = c.size() - 1;
  constexpr mpfr_prec_t kBoundPrec = 128;
  const mpfr_prec_t work = 2 * mpfr_get_prec(z.front().re.get()) + 64;

  std::vector<DyadicPoint> pts;
  for (const auto& zi : z) pts.push_back(to_dyadic(zi));

  // Lower bounds on pairwise distances; zero marks coincident points.
  std::vector<std::vector<double>> dist(d, std::vector<double>(d, 0.0));
  MpReal tmp(kBoundPrec);
  Integer dx, dy;
  std::vector<bool> coincident(d, false);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      dist[i][j] = dist[j][i] = distance_lower_bound(pts[i], pts[j], dx, dy, tmp);
      if (sgn(dx) == 0 && sgn(dy) == 0) coincident[i] = coincident[j] = true;
    }
  }

  MpReal lead(kBoundPrec);
  mpfr_set_q(lead.get(), c[d].get_mpq_t(), MPFR_RNDD);
  mpfr_abs(lead.get(), lead.get(), MPFR_RNDD);

  Certification out;
  out.roots.resize(d);
  bool residuals_ok = true;
  for (std::size_t i = 0; i < d; ++i) {
    RootEnclosure& r = out.roots[i];
    r.exact = to_rational(pts[i]);
    r.approximation = r.exact.to_complex();
    MpReal num(kBoundPrec);
    residual_upper_bound(c, pts[i], work, num);
    r.residual = mpfr_get_d(num.get(), MPFR_RNDU);
    if (!residual_small(num, lead, pts[i], d, options.relative_residual)) residuals_ok = false;
    if (coincident[i]) {
      r.radius = std::numeric_limits<double>::infinity();
      continue;
    }
    // Smith: rho_i = d |p(z_i)| / (|c_d| prod_{j != i} |z_i - z_j|).
    MpReal den(kBoundPrec);
    mpfr_set(den.get(), lead.get(), MPFR_RNDD);
    for (std::size_t j = 0; j < d; ++j) {
      if (j != i) mpfr_mul_d(den.get(), den.get(), dist[i][j], MPFR_RNDD);
    }
    mpfr_mul_ui(num.get(), num.get(), static_cast<unsigned long>(d), MPFR_RNDU);
    mpfr_div(num.get(), num.get(), den.get(), MPFR_RNDU);
    r.radius = mpfr_get_d(num.get(), MPFR_RNDU);
  }

  // Overlapping disks form clusters; only isolated disks are certified.
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const double reach = out.roots[i].radius + out.roots[j].radius;
      if (!(dist[i][j] > reach)) parent[find(i)] = find(j);
    }
  }
  std::vector<int> size(d, 0);
  for (std::size_t i = 0; i < d; ++i) ++size[find(i)];
  out.done = true;
  for (std::size_t i = 0; i < d; ++i) {
    RootEnclosure& r = out.roots[i];
    r.multiplicity = size[find(i)];
    r.certified = r.multiplicity == 1 && std::isfinite(r.radius);
    const double target = options.relative_radius * (1.0 + std::abs(r.approximation));
    if (!r.certified || !(r.radius < target)) out.done = false;
  }
  if (!residuals_ok) out.done = false;
  return out;
}

}  // namespace

RootOptions default_root_options() {
  RootOptions o;
  if (const char* v = std::getenv("POLYBERGMAN_ROOT_BITS"); v != nullptr && *v != '\0') {
    char* end = nullptr;
    const long bits = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && bits >= 53 && bits <= 100000) {
      o.initial_bits = bits;
      o.max_bits = std::max(o.max_bits, bits);
    }
  }
  return o;
}

std::vector<RootEnclosure> roots_with_enclosures(const RationalPolynomial& p, const RootOptions& options) {
  if (p.degree() < 1) throw std::invalid_argument("roots_with_enclosures: polynomial degree must be >= 1");
  std::vector<Rational> c = p.coefficients();

  // Exact zero roots.
  std::size_t zeros = 0;
  while (sgn(c[zeros]) == 0) ++zeros;
  std::vector<RootEnclosure> result;
  for (std::size_t k = 0; k < zeros; ++k) {
    RootEnclosure r;
    r.multiplicity = static_cast<int>(zeros);
    r.certified = zeros == 1;
    r.radius = 0.0;
    result.push_back(r);
  }
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  const std::size_t d = c.size() - 1;
  if (d == 0) return result;

  const auto guesses = initial_guesses(c, static_cast<mpfr_prec_t>(options.initial_bits));
  std::vector<MpComplex> z;
  z.reserve(d);
  for (const auto& g : guesses) {
    MpComplex v(static_cast<mpfr_prec_t>(options.initial_bits));
    mpfr_set_d(v.re.get(), g.real(), MPFR_RNDN);
    mpfr_set_d(v.im.get(), g.imag(), MPFR_RNDN);
    z.push_back(std::move(v));
  }

  Certification cert;
  for (long bits = options.initial_bits;; bits *= 2) {
    const auto prec = static_cast<mpfr_prec_t>(std::min(bits, options.max_bits));
    Workspace ws(prec);
    std::vector<MpComplex> coeffs;
    coeffs.reserve(d + 1);
    for (const auto& q : c) {
      MpComplex v(prec);
      mpfr_set_q(v.re.get(), q.get_mpq_t(), MPFR_RNDN);
      coeffs.push_back(std::move(v));
    }
    for (auto& zi : z) {
      mpfr_prec_round(zi.re.get(), prec, MPFR_RNDN);
      mpfr_prec_round(zi.im.get(), prec, MPFR_RNDN);
    }
    aberth(ws, coeffs, z);
    cert = certify(c, z, options);
    if (cert.done || prec >= options.max_bits) break;
  }
  result.insert(result.end(), cert.roots.begin(), cert.roots.end());
  return result;
}

}  // namespace polybergman

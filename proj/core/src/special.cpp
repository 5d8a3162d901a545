#include "xilab/special.hpp"

#include "series.hpp"

#include <boost/math/special_functions/lambert_w.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace xilab {

namespace {

using detail::kLog2E;
using detail::SeriesState;
using detail::with_cancellation_guard;
using detail::log2_mag;



bool is_nonpositive_integer(const BigComplex& b) {
  if (!b.im.is_zero()) return false;
  if (b.re.sign() > 0) return false;
  return floor(b.re) == b.re;
}

// Small arguments need about bits / log2(j) terms, so the cap also scales with precision.
long default_cap(double z_mag, double param_mag, double bits) {
  return static_cast<long>(10.0 * (z_mag + param_mag + 64.0) + 2.0 * bits);
}

BigComplex gamma_hat_impl(const BigComplex& s, const BigReal& x, const PrecisionContext& ctx, long term_cap,
                          int power) {
  if (is_nonpositive_integer(s)) throw DomainError("gamma_lower_normalized: s is a non-positive integer");
  double xm = std::fabs(x.to_double());
  double sm = abs(s).to_double();
  // Alternating terms for x > 0: magnitudes reach about e^x.
  double guard = x.sign() > 0 ? xm * kLog2E : 0.0;
  long cap = term_cap > 0 ? term_cap : default_cap(xm, sm, ctx.mantissa_bits() + guard);
  double tol_log2 = static_cast<double>(ctx.rel_tol_log2()) - 8.0;
  return with_cancellation_guard(ctx, guard, [&]() {
    SeriesState st;
    BigReal t(1L);
    BigReal negx = -x;
    BigReal sre = s.re;
    BigReal sim = s.im;
    BigReal sim2 = sim * sim;
    for (long j = 0;; ++j) {
      if (j > cap) throw NonconvergenceError("gamma_lower_normalized: term cap exceeded");
      if (j > 0) {
        t *= negx;
        t /= j;
      }
      BigReal a = sre + BigReal(j);
      BigComplex term;
      if (sim.is_zero()) {
        BigReal d = power == 1 ? a : a * a;
        term = BigComplex(t / d, BigReal(0));
      } else {
        // 1/(a + i b)^power
        BigReal d = a * a + sim2;
        BigComplex inv(a / d, -sim / d);
        if (power == 2) inv = inv * inv;
        term = inv * t;
      }
      if (power == 2) term = -term;
      if (st.add(term, j, xm, tol_log2)) break;
    }
    return st;
  });
}

}  // namespace

BigReal erfc(const BigReal& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.mantissa_bits());
  BigReal r;
  mpfr_erfc(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigComplex gamma_lower_normalized(const BigComplex& s, const BigReal& x, const PrecisionContext& ctx,
                                  long term_cap) {
  return gamma_hat_impl(s, x, ctx, term_cap, 1);
}

BigComplex gamma_lower_normalized_ds(const BigComplex& s, const BigReal& x, const PrecisionContext& ctx,
                                     long term_cap) {
  return gamma_hat_impl(s, x, ctx, term_cap, 2);
}

namespace {

// Modified Lentz evaluation of Gamma(s, x) e^{x} x^{-s}.
BigComplex gamma_upper_cf(const BigComplex& s, const BigReal& x, const PrecisionContext& ctx) {
  BigReal tiny = exp2i(-(ctx.mantissa_bits() * 4));
  BigReal eps = exp2i(ctx.rel_tol_log2() - 8);
  BigComplex b = BigComplex(x + BigReal(1L)) - s;
  BigComplex c = BigComplex(BigReal(1L) / tiny);
  BigComplex d = reciprocal(b);
  BigComplex h = d;
  for (long i = 1; i < 100000; ++i) {
    BigComplex an = (s - BigComplex(BigReal(i))) * BigReal(i);
    b += BigComplex(BigReal(2L));
    d = an * d + b;
    if (abs(d) < tiny) d = BigComplex(tiny);
    c = b + an / c;
    if (abs(c) < tiny) c = BigComplex(tiny);
    d = reciprocal(d);
    BigComplex del = d * c;
    h *= del;
    if (abs(del - BigComplex(BigReal(1L))) < eps) return h;
  }
  throw NonconvergenceError("gamma_upper: continued fraction did not converge");
}

// int_x^A t^{s-1} e^{-t} dt = sum_j (-1)^j / j! (A^{s+j} - x^{s+j}) / (s+j), with ln(A/x) at s+j = 0.
BigComplex gamma_segment(const BigComplex& s, const BigReal& x, const BigReal& a_hi, const PrecisionContext& ctx) {
  double am = a_hi.to_double();
  double tol_log2 = static_cast<double>(ctx.rel_tol_log2()) - 8.0;
  bool integral_s = s.im.is_zero() && floor(s.re) == s.re && s.re.sign() <= 0;
  long pole = integral_s ? -s.re.to_long() : -1;
  return with_cancellation_guard(ctx, am * kLog2E, [&]() {
    SeriesState st;
    BigComplex pa = pow(a_hi, s);
    BigComplex px = pow(x, s);
    BigReal coef(1L);
    BigReal log_ratio = log(a_hi / x);
    long cap = default_cap(am, abs(s).to_double(), ctx.mantissa_bits() + am * kLog2E);
    for (long j = 0;; ++j) {
      if (j > cap) throw NonconvergenceError("gamma_upper: term cap exceeded");
      if (j > 0) {
        coef /= -j;
        pa = pa * a_hi;
        px = px * x;
      }
      BigComplex term;
      if (j == pole) {
        term = BigComplex(coef * log_ratio);
      } else {
        term = (pa - px) / (s + BigComplex(BigReal(j))) * coef;
      }
      if (st.add(term, j, am, tol_log2)) break;
    }
    return st;
  });
}

}  // namespace

BigComplex gamma_upper(const BigComplex& s, const BigReal& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("gamma_upper: x must be > 0");
  PrecisionContext wide = ctx.widened(32);
  PrecisionScope scope(wide.mantissa_bits());
  BigReal a_hi(2.0 * abs(s).to_double() + 40.0);
  BigComplex r;
  if (x >= a_hi) {
    r = gamma_upper_cf(s, x, wide) * pow(x, s) * exp(-x);
  } else {
    BigComplex top = gamma_upper_cf(s, a_hi, wide) * pow(a_hi, s) * exp(-a_hi);
    r = top + gamma_segment(s, x, a_hi, wide);
  }
  r.re.round_to(ctx.mantissa_bits());
  r.im.round_to(ctx.mantissa_bits());
  return r;
}

BigComplex gamma_complex(const BigComplex& s, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(s)) throw DomainError("gamma_complex: pole");
  PrecisionContext wide = ctx.widened(32);
  PrecisionScope scope(wide.mantissa_bits());
  BigReal a_hi(2.0 * abs(s).to_double() + 40.0);
  BigComplex top = gamma_upper_cf(s, a_hi, wide) * pow(a_hi, s) * exp(-a_hi);
  BigComplex low = pow(a_hi, s) * gamma_lower_normalized(s, a_hi, wide);
  BigComplex r = top + low;
  r.re.round_to(ctx.mantissa_bits());
  r.im.round_to(ctx.mantissa_bits());
  return r;
}

BigComplex hyp_pfq(const std::vector<BigComplex>& a, const std::vector<BigComplex>& b, const BigComplex& z,
                   const PrecisionContext& ctx, long term_cap) {
  for (const auto& bi : b) {
    if (is_nonpositive_integer(bi)) throw DomainError("hypergeometric series: lower parameter is a non-positive integer");
  }
  double zm = abs(z).to_double();
  double pm = 0.0;
  for (const auto& v : a) pm = std::max(pm, abs(v).to_double());
  for (const auto& v : b) pm = std::max(pm, abs(v).to_double());
  bool alternating_risk = z.re.sign() < 0 || !z.im.is_zero();
  for (const auto& v : a) alternating_risk = alternating_risk || v.re.sign() < 0 || !v.im.is_zero();
  double guard = alternating_risk ? zm * kLog2E : 0.0;
  long cap = term_cap > 0 ? term_cap : default_cap(zm, pm, ctx.mantissa_bits() + guard);
  double tol_log2 = static_cast<double>(ctx.rel_tol_log2()) - 8.0;
  return with_cancellation_guard(ctx, guard, [&]() {
    SeriesState st;
    BigComplex t(BigReal(1L), BigReal(0));
    for (long k = 0;; ++k) {
      if (k > cap) throw NonconvergenceError("hypergeometric series: term cap exceeded");
      if (k > 0) {
        BigReal km1(k - 1);
        for (const auto& ai : a) {
          if (ai.im.is_zero()) {
            t = t * (ai.re + km1);
          } else {
            t = t * BigComplex(ai.re + km1, ai.im);
          }
        }
        for (const auto& bi : b) {
          if (bi.im.is_zero()) {
            t = t / (bi.re + km1);
          } else {
            t = t / BigComplex(bi.re + km1, bi.im);
          }
        }
        if (z.im.is_zero()) {
          t = t * z.re;
        } else {
          t = t * z;
        }
        t = t / BigReal(k);
      }
      if (st.add(t, k, zm, tol_log2)) break;
      if (t.re.is_zero() && t.im.is_zero()) break;
    }
    return st;
  });
}

BigComplex kummer_1f1(const BigComplex& a, const BigComplex& b, const BigComplex& z, const PrecisionContext& ctx) {
  return hyp_pfq({a}, {b}, z, ctx);
}

BigComplex hyp_2f2(const BigComplex& a1, const BigComplex& a2, const BigComplex& b1, const BigComplex& b2,
                   const BigComplex& z, const PrecisionContext& ctx) {
  return hyp_pfq({a1, a2}, {b1, b2}, z, ctx);
}

namespace {

// Halley iteration for w e^w = x, kept inside [lo, hi] by bisection.
BigReal lambert_refine(const BigReal& x, BigReal w, BigReal lo, BigReal hi, const PrecisionContext& ctx) {
  long bits = ctx.mantissa_bits() + 32;
  PrecisionScope scope(bits);
  BigReal tol = exp2i(-(ctx.mantissa_bits() + 8));
  auto f = [&](const BigReal& v) { return v * exp(v) - x; };
  // f is increasing on each branch interval for W0 and decreasing for W-1; the
  // bracket update below only relies on the sign at lo.
  int sign_lo = f(lo).sign();
  for (int it = 0; it < 200; ++it) {
    BigReal ew = exp(w);
    BigReal fw = w * ew - x;
    if (fw.is_zero()) break;
    if (fw.sign() == sign_lo) {
      lo = w;
    } else {
      hi = w;
    }
    BigReal wp1 = w + BigReal(1L);
    BigReal d1 = ew * wp1;
    BigReal next;
    bool ok = !d1.is_zero();
    if (ok) {
      BigReal denom = d1 - (w + BigReal(2L)) * fw / (wp1 * 2L);
      ok = !denom.is_zero();
      if (ok) next = w - fw / denom;
    }
    BigReal lo_b = min(lo, hi);
    BigReal hi_b = max(lo, hi);
    if (!ok || !next.is_finite() || next <= lo_b || next >= hi_b) next = (lo + hi) / 2L;
    BigReal step = abs(next - w);
    w = next;
    BigReal scale = max(abs(w), BigReal(1L));
    if (step <= tol * scale) break;
  }
  PrecisionScope out(ctx.mantissa_bits());
  BigReal r = w;
  r.round_to(ctx.mantissa_bits());
  return r;
}

}  // namespace

BigReal lambert_w0(const BigReal& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  BigReal branch = -exp(BigReal(-1L));
  BigReal slack = abs(branch) * exp2i(-(ctx.mantissa_bits() - 4));
  if (x < branch - slack) throw DomainError("lambert_w0: x < -1/e");
  if (x <= branch + slack) return BigReal(-1L);
  if (x.is_zero()) return BigReal(0L);
  double xd = x.to_double();
  double seed;
  if (std::isfinite(xd) && std::fabs(xd) < 1e300) {
    seed = boost::math::lambert_w0(std::max(xd, -1.0 / M_E));
  } else {
    double l1 = x.log2_abs() / kLog2E;
    seed = l1 - std::log(l1);
  }
  BigReal lo(-1L);
  BigReal hi = x.sign() > 0 ? max(BigReal(1L), log(x) + BigReal(1L)) : BigReal(0L);
  BigReal w(seed);
  if (w <= lo || w >= hi) w = (lo + hi) / 2L;
  return lambert_refine(x, w, lo, hi, ctx);
}

BigReal lambert_w_minus1(const BigReal& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  BigReal branch = -exp(BigReal(-1L));
  BigReal slack = abs(branch) * exp2i(-(ctx.mantissa_bits() - 4));
  if (x < branch - slack || x.sign() >= 0) throw DomainError("lambert_w_minus1: x outside [-1/e, 0)");
  if (x <= branch + slack) return BigReal(-1L);
  BigReal l1 = log(-x);
  BigReal lo = l1 * 2L - BigReal(2L);
  BigReal hi(-1L);
  double xd = x.to_double();
  BigReal w;
  if (xd != 0.0 && std::isfinite(xd)) {
    w = BigReal(boost::math::lambert_wm1(std::max(xd, -1.0 / M_E)));
  } else {
    w = l1 - log(-l1);
  }
  if (w <= lo || w >= hi) w = (lo + hi) / 2L;
  return lambert_refine(x, w, lo, hi, ctx);
}

mpz_class power_sum(long n, long j) {
  if (n < 1 || j < 0) throw DomainError("power_sum: need n >= 1 and j >= 0");
  mpz_class total = 0;
  mpz_class p;
  for (long k = 1; k <= n; ++k) {
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
    total += p;
  }
  return total;
}

BigReal gamma_ln(const BigReal& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("gamma_ln: x must be > 0");
  PrecisionScope scope(ctx.mantissa_bits());
  BigReal r;
  int sgn = 0;
  mpfr_lgamma(r.raw(), &sgn, x.raw(), MPFR_RNDN);
  return r;
}

bool RemainderWitness::pass() const { return magnitude() < BigReal(1L); }

BigReal RemainderWitness::magnitude() const {
  if (split()) return max(abs(epsilon.re), abs(epsilon.im));
  return abs(epsilon);
}

RemainderWitness make_witness(const BigComplex& main_term, const BigComplex& actual, const BigReal& envelope) {
  if (envelope.sign() <= 0) throw DomainError("witness envelope must be positive");
  RemainderWitness w{main_term, actual, envelope, std::nullopt, (actual - main_term) / envelope};
  return w;
}

RemainderWitness make_split_witness(const BigComplex& main_term, const BigComplex& actual, const BigReal& envelope_re,
                                    const BigReal& envelope_im) {
  if (envelope_re.sign() <= 0 || envelope_im.sign() < 0) throw DomainError("witness envelope must be positive");
  BigComplex d = actual - main_term;
  BigReal er = d.re / envelope_re;
  BigReal ei;
  if (envelope_im.is_zero()) {
    ei = d.im.is_zero() ? BigReal(0L) : BigReal::inf(d.im.sign());
  } else {
    ei = d.im / envelope_im;
  }
  RemainderWitness w{main_term, actual, envelope_re, envelope_im, BigComplex(er, ei)};
  return w;
}

}  // namespace xilab

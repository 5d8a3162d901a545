#include "xilab/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "xilab/special.hpp"

namespace xilab {

namespace {

constexpr double kLog2E = 1.4426950408889634;

BigReal rounded(BigReal v, const PrecisionContext& ctx) {
  v.round_to(ctx.mantissa_bits());
  return v;
}

// Bits lost when summing phi_k(t) for t < 0, where the terms are O(e^{t/2})
// but the sum equals Phi(|t|) ~ 4 pi^2 e^{9|t|/2} exp(-pi e^{2|t|}).
double phi_sum_guard(double t) {
  if (t >= 0) return 16.0;
  double at = -t;
  double x = std::exp(-2.0 * at);
  double log_terms = t / 2.0 + 0.5 * std::log(1.0 + 1.0 / x);
  double log_value = std::log(4.0 * M_PI * M_PI) + 4.5 * at - M_PI * std::exp(2.0 * at);
  return std::max(16.0, (log_terms - log_value) * kLog2E + 16.0);
}

BigReal phi_sum(const BigReal& t, const PrecisionContext& ctx) {
  double td = t.to_double();
  long guard = 32 + static_cast<long>(std::ceil(phi_sum_guard(td)));
  PrecisionScope scope(ctx.mantissa_bits() + guard);
  BigReal pi = BigReal::pi();
  BigReal x = exp(t * 2L);
  BigReal pre = exp(t / 2L) * 2L;
  BigReal sum(0L);
  double stop_log2 = static_cast<double>(ctx.rel_tol_log2()) - 16.0;
  double peak_k = std::sqrt(2.0 / (M_PI * std::exp(2.0 * td)));
  for (long k = 1;; ++k) {
    BigReal u = pi * BigReal(k * k) * x;
    BigReal term = pre * (u * u * 2L - u * 3L) * exp(-u);
    sum += term;
    if (static_cast<double>(k) > peak_k + 1.0) {
      double tl = term.log2_abs();
      double sl = sum.log2_abs();
      if (tl < sl + stop_log2 - static_cast<double>(guard)) break;
    }
    if (k > 100000000) throw NonconvergenceError("Phi series did not converge");
  }
  return rounded(sum, ctx);
}

BigReal phi_truncated(long n, const BigReal& t, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.mantissa_bits() + 64);
  BigReal sum(0L);
  BigReal mt = -t;
  for (long k = 1; k <= n; ++k) {
    sum += phi_term(k, t, ctx.widened(64));
    sum += phi_term(k, mt, ctx.widened(64));
  }
  return rounded(sum / 2L, ctx);
}

// Phi_{2,n}(t) = (1/omega_n) sum_{j>=1} (-1)^j c_{n,j} cosh(2 t (j + 1/4)).
BigReal phi_sinc_cosh(long n, const BigReal& t, const PrecisionContext& ctx) {
  double td = std::fabs(t.to_double());
  double peak = M_PI * static_cast<double>(n * n) * std::exp(2.0 * td);
  long guard = 64 + static_cast<long>(std::ceil(peak * kLog2E + 2.0 * std::log2(peak + 2.0)));
  PrecisionScope scope(ctx.mantissa_bits() + guard);
  BigReal pi = BigReal::pi();
  BigReal lnn = log(BigReal(n));
  // powers k^2 for the running S_{n,2j}.
  std::vector<BigReal> kp(static_cast<size_t>(n));
  std::vector<BigReal> k2(static_cast<size_t>(n));
  for (long k = 1; k <= n; ++k) {
    k2[static_cast<size_t>(k - 1)] = BigReal(k * k);
    kp[static_cast<size_t>(k - 1)] = BigReal(1L);
  }
  BigReal ratio(1L);  // pi^j / Gamma(j)
  BigReal sum(0L);
  int small = 0;
  double stop_log2 = static_cast<double>(ctx.rel_tol_log2()) - 16.0;
  for (long j = 1;; ++j) {
    ratio = j == 1 ? pi : ratio * pi / (j - 1);
    BigReal s(0L);
    for (size_t i = 0; i < kp.size(); ++i) {
      kp[i] *= k2[i];
      s += kp[i];
    }
    BigReal c = lnn * BigReal(2 * j + 1) * ratio * s;
    BigReal term = c * cosh(t * 2L * (BigReal(j) + BigReal(0.25)));
    if (j % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
    if (static_cast<double>(j) > 3.0 * peak + 8.0) {
      double tl = term.log2_abs();
      double sl = sum.log2_abs();
      small = tl < sl + stop_log2 ? small + 1 : 0;
      if (small >= 2) break;
    }
    if (j > 100000000) throw NonconvergenceError("sinc-cosh series did not converge");
  }
  BigReal omega = lnn / 2L;
  return rounded(sum / omega, ctx);
}

BigReal hejhal(long m, const BigReal& t) {
  BigReal pi = BigReal::pi();
  BigReal c9 = cosh(t * BigReal(4.5));
  BigReal c5 = cosh(t * BigReal(2.5));
  BigReal c2 = cosh(t * 2L);
  BigReal sum(0L);
  for (long k = 1; k <= m; ++k) {
    BigReal k2(k * k);
    sum += (pi * pi * 4L * k2 * k2 * c9 - pi * 6L * k2 * c5) * exp(-(pi * 2L * k2 * c2));
  }
  return sum;
}

BigReal shi_kernel(long m, const BigReal& a, const BigReal& t, const PrecisionContext& ctx) {
  BigReal pi = BigReal::pi();
  BigReal four_pi2 = pi * pi * 4L;
  BigReal e2pi_phi0 = exp(pi * 2L) * classical_phi0(ctx);
  BigReal one(1L);
  BigReal c = (e2pi_phi0 - four_pi2) / four_pi2 * (one - a) /
              (BigReal(m) * (one - a) - a * (one - pow(a, m)));
  BigReal g = cosh(t * BigReal(4.5));
  BigReal apow(1L);
  for (long k = 0; k < m; ++k) {
    apow *= a;
    g += c * (one - apow) * cosh(t * BigReal(9L * k) / BigReal(2L * m));
  }
  return four_pi2 * g * exp(-(pi * 2L * cosh(t * 2L)));
}

}  // namespace

BigReal classical_phi0(const PrecisionContext& ctx) { return phi_sum(BigReal(0L), ctx.widened(32)) / 2L; }

BigReal phi_term(long k, const BigReal& t, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("phi_term: k must be >= 1");
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  BigReal pi = BigReal::pi();
  BigReal pk = pi * BigReal(k * k);
  BigReal v = (pk * pk * 4L * exp(t * BigReal(4.5)) - pk * 6L * exp(t * BigReal(2.5))) * exp(-(pk * exp(t * 2L)));
  return rounded(v, ctx);
}

BigReal shi_b(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  BigReal pi = BigReal::pi();
  return rounded(exp(pi * 2L) * classical_phi0(ctx) / (pi * pi * 4L) - BigReal(1L), ctx);
}

BigReal shi_solve_mu(const BigReal& a, const PrecisionContext& ctx) {
  if (a.sign() <= 0 || a >= BigReal(1L)) throw DomainError("shi_solve_mu: need 0 < a < 1");
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  BigReal b = shi_b(ctx.widened(32));
  BigReal one(1L);
  auto f = [&](const BigReal& mu) { return mu * (one - pow(a, mu)) - b; };
  BigReal lo = b;
  BigReal hi = b / (one - pow(a, b));
  if (f(hi).sign() < 0) hi *= 2L;
  BigReal tol = ctx.rel_tol() * b;
  for (int it = 0; it < 100000 && hi - lo > tol; ++it) {
    BigReal mid = (lo + hi) / 2L;
    if (f(mid).sign() < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return rounded((lo + hi) / 2L, ctx);
}

void validate(const KernelSpec& spec, const PrecisionContext& ctx) {
  switch (spec.variant) {
    case KernelVariant::truncated:
    case KernelVariant::sinc_cosh:
      if (spec.n < 2) throw DomainError("kernel: n must be >= 2");
      break;
    case KernelVariant::hejhal:
      if (spec.m < 1) throw DomainError("kernel: hejhal m must be >= 1");
      break;
    case KernelVariant::shi: {
      if (!(spec.a > 0.0 && spec.a < 1.0)) throw DomainError("kernel: shi needs 0 < a < 1");
      PrecisionContext small(128);
      BigReal mu = shi_solve_mu(BigReal(spec.a), small);
      long need = ceil(mu).to_long();
      if (spec.m < need) {
        throw DomainError("kernel: shi needs m >= ceil(mu) = " + std::to_string(need));
      }
      break;
    }
    default:
      break;
  }
  (void)ctx;
}

BigReal kernel_eval(const KernelSpec& spec, const BigReal& t, const PrecisionContext& ctx) {
  validate(spec, ctx);
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  BigReal pi = BigReal::pi();
  switch (spec.variant) {
    case KernelVariant::exact:
      return phi_sum(t, ctx);
    case KernelVariant::truncated:
      return phi_truncated(spec.n, t, ctx);
    case KernelVariant::sinc_cosh:
      return phi_sinc_cosh(spec.n, t, ctx);
    case KernelVariant::polya:
      return rounded(pi * pi * 4L * cosh(t * BigReal(4.5)) * exp(-(pi * 2L * cosh(t * 2L))), ctx);
    case KernelVariant::polya2:
      return rounded((pi * pi * 4L * cosh(t * BigReal(4.5)) - pi * 6L * cosh(t * BigReal(2.5))) *
                         exp(-(pi * 2L * cosh(t * 2L))),
                     ctx);
    case KernelVariant::debruijn: {
      BigReal pi2 = pi * pi;
      BigReal poly = pi2 * 4L * cosh(t / 2L) + (pi2 * pi * 4L - pi * 6L) * cosh(t * BigReal(2.5)) +
                     pi2 * 4L * cosh(t * BigReal(4.5));
      return rounded(exp(-(pi * 2L * cosh(t * 2L))) * poly, ctx);
    }
    case KernelVariant::hejhal:
      return rounded(hejhal(spec.m, t), ctx);
    case KernelVariant::shi:
      return rounded(shi_kernel(spec.m, BigReal(spec.a), t, ctx), ctx);
  }
  throw DomainError("kernel: unknown variant");
}

BigReal psi_term(long k, const BigReal& x, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("psi_term: k must be >= 1");
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  BigReal u = BigReal::pi() * BigReal(k * k) * x;
  return rounded((u * u * 2L - u * 3L) * exp(-u), ctx);
}

BigReal psi_n(const BigReal& x, long n, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("psi_n: x must be > 0");
  if (n < 2) throw DomainError("psi_n: n must be >= 2");
  PrecisionContext wide = ctx.widened(32);
  PrecisionScope scope(wide.mantissa_bits());
  BigReal inv = BigReal(1L) / x;
  BigReal f = BigReal(1L) / sqrt(x);
  BigReal sum(0L);
  for (long k = 1; k <= n; ++k) sum += psi_term(k, x, wide) + f * psi_term(k, inv, wide);
  return rounded(sum / 2L, ctx);
}

BigReal psi_full(const BigReal& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("psi_full: x must be > 0");
  BigReal t = log(x) / 2L;
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  // Psi(x) = Phi(t) / (2 e^{t/2}) with x = e^{2t}; phi_sum handles the guard bits.
  BigReal v = phi_sum(t, ctx.widened(32)) / (exp(t / 2L) * 2L);
  return rounded(v, ctx);
}

BigReal smallest_positive_kernel_zero(long n, const PrecisionContext& ctx) {
  if (n < 2 || n > 12) throw DomainError("smallest_positive_kernel_zero: n must be in [2, 12]");
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  auto omega = [](long k) { return log(BigReal(k)) / 2L; };
  BigReal step = (omega(n + 2) - omega(n + 1)) / 64L;
  BigReal end = omega(n + 3);
  KernelSpec spec = KernelSpec::truncated(n);
  BigReal a = step;
  BigReal fa = kernel_eval(spec, a, ctx);
  while (a < end) {
    BigReal b = a + step;
    BigReal fb = kernel_eval(spec, b, ctx);
    if (fb.is_zero()) return b;
    if (fa.sign() != fb.sign()) {
      BigReal tol = ctx.rel_tol() * b;
      while (b - a > tol) {
        BigReal mid = (a + b) / 2L;
        BigReal fm = kernel_eval(spec, mid, ctx);
        if (fm.is_zero()) return mid;
        if (fm.sign() == fa.sign()) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      return rounded((a + b) / 2L, ctx);
    }
    a = b;
    fa = fb;
  }
  throw NotFoundError("no sign change of Phi_n in (0, omega_{n+3}]");
}

BigReal alt_phi(const BigReal& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("alt_phi: x must be > 0");
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  BigReal pix = BigReal::pi() * x;
  BigReal sum(0L);
  double cutoff = (static_cast<double>(ctx.mantissa_bits()) + 48.0) / kLog2E;
  for (long k = 1;; ++k) {
    BigReal e = pix * BigReal(k * k);
    BigReal term = exp(-e);
    if (k % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
    if (e.to_double() > cutoff) break;
  }
  return rounded(sum, ctx);
}

BigReal alt_varphi(const BigReal& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("alt_varphi: x must be > 0");
  double xd = x.to_double();
  // Terms are O(1) in total while the value is about x^{-1/2} exp(-pi/(4x)).
  double guard = 32.0 + (xd < 1.0 ? M_PI / (4.0 * xd) * kLog2E + 0.5 * std::log2(1.0 / xd) : 0.0);
  PrecisionScope scope(ctx.mantissa_bits() + static_cast<long>(std::ceil(guard)));
  BigReal q = BigReal::pi() * x / 4L;
  BigReal sum(0L);
  double cutoff = (static_cast<double>(ctx.mantissa_bits()) + guard + 16.0) / kLog2E;
  for (long k = 0;; ++k) {
    BigReal a1(4 * k + 1);
    BigReal a3(4 * k + 3);
    BigReal a2(4 * k + 2);
    BigReal e1 = q * a1 * a1;
    sum += exp(-e1) + exp(-(q * a3 * a3)) - exp(-(q * a2 * a2)) * 2L;
    if (e1.to_double() > cutoff) break;
  }
  return rounded(sum, ctx);
}

}  // namespace xilab

#include "xilab/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "parallel.hpp"
#include "xilab/zeros.hpp"

namespace xilab {

namespace {

const BigReal& quarter() {
  static const BigReal q = [] {
    PrecisionScope scope(64);
    return BigReal(0.25);
  }();
  return q;
}

void require_pair_sign_args(const BigReal& y, long M, const char* who) {
  if (!(y > BigReal(0L))) throw DomainError(std::string(who) + ": y must be positive");
  if (M < 1 || M % 2 == 0) throw DomainError(std::string(who) + ": combined index M must be odd and >= 1");
}

void require_odd_n(long n, const char* who) {
  if (n < 3 || n % 2 == 0) throw DomainError(std::string(who) + ": n must be odd and >= 3");
}

BigReal finalize(BigReal v, long bits) {
  v.round_to(bits);
  return v;
}

// log2 of an upper bound for |A2|, |B2| (|P| e^y) and of a lower bound for the
// first summand of alpha^(+), beta^(+); their difference bounds the cancellation.
double closed_form_guard(const BigReal& x, const BigReal& y, long M) {
  double yd = y.to_double();
  double xd = x.to_double();
  double lp = ((static_cast<double>(M) + 2.0) * std::log(yd) - std::lgamma(static_cast<double>(M) + 2.0) + yd) /
              std::log(2.0);
  double scale = std::log2(1.5 * yd / (xd * xd + 1.5625));
  return std::max(0.0, lp - scale);
}

}  // namespace

AlphaBeta alpha_beta_direct(int a, const BigReal& x, const BigReal& y, long m, const PrecisionContext& ctx) {
  if (a != 1 && a != 2) throw DomainError("alpha_beta_direct: a must be 1 or 2");
  if (m < 1) throw DomainError("alpha_beta_direct: m must be >= 1");
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  const BigReal& q = quarter();
  BigReal x2 = x * x;
  BigReal y2 = y * y;
  BigReal t = a == 1 ? y : y2;  // y^J / Gamma(J) at J = a
  AlphaBeta r{BigReal(0L), BigReal(0L)};
  for (long j = 0; j <= m; ++j) {
    long J = 2 * j + a;
    if (j > 0) t = t * y2 / BigReal((J - 2) * (J - 1));
    BigReal jq = BigReal(J) + q;
    BigReal w = BigReal(2 * J + 1) * t / (x2 + jq * jq);
    r.alpha += w * jq;
    r.beta += w;
  }
  r.alpha.round_to(ctx.mantissa_bits());
  r.beta.round_to(ctx.mantissa_bits());
  return r;
}

AlphaBeta alpha_beta_direct(PairSign sign, const BigReal& x, const BigReal& y, long m, const PrecisionContext& ctx) {
  // The difference of the two halves cancels up to about e^{2|y|}.
  bool cancels = (sign == PairSign::Plus) != (y.sign() > 0);
  long guard = cancels ? static_cast<long>(std::ceil(2.0 * std::fabs(y.to_double()) * 1.4426950408889634)) : 0;
  PrecisionContext wide = ctx.widened(16 + guard);
  AlphaBeta one = alpha_beta_direct(1, x, y, m, wide);
  AlphaBeta two = alpha_beta_direct(2, x, y, m, wide);
  PrecisionScope scope(wide.mantissa_bits());
  AlphaBeta r = sign == PairSign::Plus ? AlphaBeta{two.alpha + one.alpha, two.beta + one.beta}
                                       : AlphaBeta{two.alpha - one.alpha, two.beta - one.beta};
  r.alpha = finalize(r.alpha / 2L, ctx.mantissa_bits());
  r.beta = finalize(r.beta / 2L, ctx.mantissa_bits());
  return r;
}

BigReal ClosedFormTerms::alpha() const { return A1.re + A2.re; }
BigReal ClosedFormTerms::beta() const { return B1.re + B2.re; }

ClosedFormTerms closed_form_terms(PairSign sign, const BigReal& x, const BigReal& y, long M,
                                  const PrecisionContext& ctx) {
  require_pair_sign_args(y, M, "closed_form_terms");
  ClosedFormTerms r;
  long bits = ctx.mantissa_bits();
  r.x_limit = x.is_zero() || x.log2_abs() < -static_cast<double>(bits) / 2;
  double guard = closed_form_guard(x, y, M) + 32;
  // Re[c (q - ix) h(x) / (ix)] loses about log2(1/|x|) bits away from the limit.
  if (!r.x_limit) guard += std::max(0.0, -x.log2_abs());
  PrecisionContext wctx = ctx.widened(static_cast<long>(std::ceil(guard)));
  PrecisionScope scope(wctx.mantissa_bits());

  const BigReal& q = quarter();
  BigReal Y = sign == PairSign::Plus ? y : -y;
  BigReal minus_Y = -Y;
  BigReal one(1L);
  BigReal mp2(M + 2);
  BigComplex s(one + q, x);
  BigComplex q_ix(q, -x);

  BigComplex K = gamma_lower_normalized(s, minus_Y, wctx);
  r.A1 = BigComplex(Y * exp(Y)) + q_ix * K * Y;

  // P = Y^{M+2} / Gamma(M+2); Y < 0 flips the sign because M + 2 is odd.
  BigReal P = exp(mp2 * log(y) - gamma_ln(mp2, wctx));
  if (Y.sign() < 0) P = -P;
  BigComplex a_top(mp2 + q, x);  // M + 2 + q + ix
  BigComplex f11 = kummer_1f1(BigComplex(one), BigComplex(mp2), BigComplex(Y), wctx);
  BigComplex f22 = hyp_2f2(BigComplex(one), a_top, BigComplex(mp2), a_top + BigComplex(one), BigComplex(Y), wctx);
  BigComplex tail = q_ix * f22 / a_top * P;
  r.A2 = -(f11 * P) - tail;

  if (r.x_limit) {
    // Both B terms are c (q - ix) h(s(x)) / (ix) with real c and h real at x = 0, so
    // their real parts tend to c (-h(s0) + q h'(s0)).
    BigReal s0 = one + q;
    BigReal K0 = gamma_lower_normalized(BigComplex(s0), minus_Y, wctx).re;
    BigReal Ks = gamma_lower_normalized_ds(BigComplex(s0), minus_Y, wctx).re;
    r.B1 = BigComplex(Y * (K0 - q * Ks));
    BigReal a0 = mp2 + q;
    BigReal T0 = f22.re / a0;
    BigComplex f33 = hyp_pfq({BigComplex(one), BigComplex(a0), BigComplex(a0)},
                             {BigComplex(mp2), BigComplex(a0 + one), BigComplex(a0 + one)}, BigComplex(Y), wctx);
    BigReal Ts = -f33.re / (a0 * a0);
    r.B2 = BigComplex(-P * (T0 - q * Ts));
  } else {
    BigComplex ix(BigReal(0L), x);
    r.B1 = -(q_ix * K * Y) / ix;
    r.B2 = tail / ix;
  }
  return r;
}

AlphaBeta alpha_beta_closed(PairSign sign, const BigReal& x, const BigReal& y, long M, const PrecisionContext& ctx) {
  ClosedFormTerms t = closed_form_terms(sign, x, y, M, ctx);
  PrecisionScope scope(std::max(t.A1.re.precision(), ctx.mantissa_bits()));
  return AlphaBeta{finalize(t.alpha(), ctx.mantissa_bits()), finalize(t.beta(), ctx.mantissa_bits())};
}

BigComplex temme_zhou_g(const BigReal& b, const BigReal& x, const BigReal& y, const PrecisionContext& ctx) {
  if (!(b > BigReal(0L))) throw DomainError("temme_zhou_g: b must be positive");
  if (!(y > BigReal(0L))) throw DomainError("temme_zhou_g: y must be positive");
  PrecisionContext wide = ctx.widened(16);
  PrecisionScope scope(wide.mantissa_bits());
  BigComplex a(BigReal(1L) + b, x);
  // Positive-term form: y e^{-y} sum_j y^j / (j! (j + a)).
  BigComplex g = gamma_lower_normalized(a, -y, wide) * (y * exp(-y));
  g.re.round_to(ctx.mantissa_bits());
  g.im.round_to(ctx.mantissa_bits());
  return g;
}

RemainderWitness temme_zhou_witness(int order, const BigReal& b, const BigReal& x, const BigReal& y,
                                    const PrecisionContext& ctx, const BigReal& M) {
  if (order < 1 || order > 3) throw DomainError("temme_zhou_witness: order must be 1, 2 or 3");
  if (order == 2 && !(b > BigReal(1L) && b < BigReal(2L))) throw DomainError("temme_zhou_witness: order 2 needs 1 < b < 2");
  if (order == 3 && b != BigReal(5L) / BigReal(4L)) throw DomainError("temme_zhou_witness: order 3 fixes b = 5/4");
  BigComplex g = temme_zhou_g(b, x, y, ctx);
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  BigComplex w(y + b, x);
  BigComplex main = BigComplex(y) / w;
  if (order == 1) return make_witness(main, g, M / y);
  BigComplex ixy(BigReal(0L), x * y);
  BigComplex g0 = main - ixy / (w * w * w);
  BigReal D = (y + b) * (y + b) + x * x;
  if (order == 2) return make_witness(g0, g, M / D);
  BigComplex im_main(g0.im);
  BigComplex im_actual(g.im);
  if (x.is_zero()) {
    // Real arguments: both imaginary parts vanish and the witness is trivial.
    BigReal diff = im_actual.re - im_main.re;
    BigReal eps = diff.is_zero() ? BigReal(0L) : BigReal::inf(diff.sign());
    return RemainderWitness{im_main, im_actual, BigReal(0L), std::nullopt, BigComplex(eps)};
  }
  return make_witness(im_main, im_actual, abs(x) * M / D);
}

bool Calibration::stable() const {
  if (!finite()) return false;
  if (sup.is_zero()) return sup_refined.is_zero();
  return abs(sup_refined - sup) < sup * BigReal(0.05);
}

namespace {

BigReal grid_sup(int order, const BigReal& b, int nx, int ny, double x_max, double y_min, double y_max,
                 const PrecisionContext& ctx) {
  size_t count = static_cast<size_t>(nx) * static_cast<size_t>(ny);
  std::vector<BigReal> mags(count);
  detail::parallel_for(count, [&](size_t idx) {
    int i = static_cast<int>(idx / static_cast<size_t>(ny));
    int j = static_cast<int>(idx % static_cast<size_t>(ny));
    PrecisionScope scope(ctx.mantissa_bits());
    BigReal x(nx == 1 ? 0.0 : x_max * i / (nx - 1));
    BigReal y(ny == 1 ? y_min : y_min + (y_max - y_min) * j / (ny - 1));
    mags[idx] = temme_zhou_witness(order, b, x, y, ctx).magnitude();
  });
  PrecisionScope scope(ctx.mantissa_bits());
  BigReal sup(0L);
  for (const auto& m : mags) sup = max(sup, m);
  return sup;
}

}  // namespace

Calibration temme_zhou_calibration(int order, const BigReal& b, int nx, int ny, double x_max, double y_min,
                                   double y_max, const PrecisionContext& ctx) {
  if (nx < 1 || ny < 1) throw DomainError("temme_zhou_calibration: grid must be non-empty");
  if (!(y_min > 0.0) || y_max < y_min || x_max < 0.0) throw DomainError("temme_zhou_calibration: bad grid range");
  Calibration c;
  c.name = "temme_zhou_order" + std::to_string(order);
  c.points = static_cast<long>(nx) * ny;
  c.sup = grid_sup(order, b, nx, ny, x_max, y_min, y_max, ctx);
  int rx = 2 * nx - 1;
  int ry = 2 * ny - 1;
  c.refined_points = static_cast<long>(rx) * ry;
  c.sup_refined = grid_sup(order, b, rx, ry, x_max, y_min, y_max, ctx);
  return c;
}

BigReal zhou_1f1_constant(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  BigReal el = exp(BigReal(1L)) * BigReal::ln2();
  return finalize(BigReal(6L) + BigReal(432L) / (el * el * el), ctx.mantissa_bits());
}

namespace {

void require_zhou_args(long m, const BigReal& y, int mu, const char* who) {
  if (mu != 1 && mu != -1) throw DomainError(std::string(who) + ": mu must be +1 or -1");
  if (!(y > BigReal(0L)) || !(BigReal(m) > y * 2L)) throw DomainError(std::string(who) + ": requires m > 2y > 0");
}

}  // namespace

RemainderWitness zhou_1f1_witness(long m, const BigReal& y, int mu, const PrecisionContext& ctx) {
  require_zhou_args(m, y, mu, "zhou_1f1_witness");
  PrecisionContext wide = ctx.widened(16);
  PrecisionScope scope(wide.mantissa_bits());
  BigReal my = mu > 0 ? y : -y;
  BigReal mm(m);
  BigComplex actual = kummer_1f1(BigComplex(1.0), BigComplex(BigReal(m + 2)), BigComplex(my), wide);
  BigComplex main(BigReal(1L) / (BigReal(1L) - my / mm));
  return make_witness(main, actual, zhou_1f1_constant(wide) / mm);
}

RemainderWitness zhou_2f2_witness(long m, const BigReal& x, const BigReal& y, int mu, const PrecisionContext& ctx) {
  require_zhou_args(m, y, mu, "zhou_2f2_witness");
  PrecisionContext wide = ctx.widened(16);
  PrecisionScope scope(wide.mantissa_bits());
  BigReal my = mu > 0 ? y : -y;
  BigReal mp2(m + 2);
  BigComplex a(mp2 + quarter(), x);
  BigComplex main = kummer_1f1(BigComplex(1.0), BigComplex(mp2), BigComplex(my), wide);
  BigComplex actual = hyp_2f2(BigComplex(1.0), a, BigComplex(mp2), a + BigComplex(1.0), BigComplex(my), wide);
  BigReal D = norm(BigComplex(a.re, x));
  return make_split_witness(main, actual, BigReal(5L) * y / D, BigReal(5L) * abs(x) / D);
}

namespace {

std::vector<long> m_values(int nm) {
  std::vector<long> ms;
  for (int i = 0; i < nm; ++i) ms.push_back(nm == 1 ? 4 : std::lround(4.0 + 396.0 * i / (nm - 1)));
  return ms;
}

WitnessSweep collect(std::string name, const std::vector<RemainderWitness>& ws, long bits) {
  PrecisionScope scope(bits);
  WitnessSweep s;
  s.name = std::move(name);
  s.sup = BigReal(0L);
  for (const auto& w : ws) {
    ++s.points;
    if (!w.pass()) ++s.failures;
    s.sup = max(s.sup, w.magnitude());
  }
  return s;
}

}  // namespace

WitnessSweep zhou_1f1_sweep(int nm, int ny, const PrecisionContext& ctx) {
  if (nm < 1 || ny < 1) throw DomainError("zhou_1f1_sweep: grid must be non-empty");
  std::vector<long> ms = m_values(nm);
  size_t count = ms.size() * static_cast<size_t>(ny) * 2;
  std::vector<RemainderWitness> ws(count);
  detail::parallel_for(count, [&](size_t idx) {
    size_t mi = idx / (static_cast<size_t>(ny) * 2);
    int j = static_cast<int>((idx / 2) % static_cast<size_t>(ny)) + 1;
    int mu = idx % 2 == 0 ? 1 : -1;
    PrecisionScope scope(ctx.mantissa_bits());
    BigReal y = BigReal(ms[mi]) * BigReal(j) / BigReal(2L * (ny + 1));
    ws[idx] = zhou_1f1_witness(ms[mi], y, mu, ctx);
  });
  return collect("zhou_1f1", ws, ctx.mantissa_bits());
}

WitnessSweep zhou_2f2_sweep(int nm, int nx, int ny, const PrecisionContext& ctx) {
  if (nm < 1 || nx < 1 || ny < 1) throw DomainError("zhou_2f2_sweep: grid must be non-empty");
  std::vector<long> ms = m_values(nm);
  size_t per_m = static_cast<size_t>(nx) * static_cast<size_t>(ny) * 2;
  size_t count = ms.size() * per_m;
  std::vector<RemainderWitness> ws(count);
  detail::parallel_for(count, [&](size_t idx) {
    size_t mi = idx / per_m;
    size_t rest = idx % per_m;
    int xi = static_cast<int>(rest / (static_cast<size_t>(ny) * 2));
    int j = static_cast<int>((rest / 2) % static_cast<size_t>(ny)) + 1;
    int mu = rest % 2 == 0 ? 1 : -1;
    PrecisionScope scope(ctx.mantissa_bits());
    BigReal x(nx == 1 ? 0.0 : 100.0 * xi / (nx - 1));
    BigReal y = BigReal(ms[mi]) * BigReal(j) / BigReal(2L * (ny + 1));
    ws[idx] = zhou_2f2_witness(ms[mi], x, y, mu, ctx);
  });
  return collect("zhou_2f2", ws, ctx.mantissa_bits());
}

namespace {

BigReal pi_n3(long n) { return BigReal::pi() * BigReal(n * n * n); }

BigReal gamma_ratio(long n, const PrecisionContext& ctx) {
  BigReal big_m(7 * n * n * n + 2);
  return exp(big_m * log(pi_n3(n)) - gamma_ln(big_m, ctx));
}

}  // namespace

BigReal F_plus_main(long n, const BigReal& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  BigReal N = pi_n3(n) + BigReal(2L) + quarter();
  return finalize(exp(pi_n3(n)) * N * N * N / (N * N + x * x), ctx.mantissa_bits());
}

BigReal G_plus_main(long n, const BigReal& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  BigReal N = pi_n3(n) + BigReal(2L) + quarter();
  return finalize(exp(pi_n3(n)) * N * N / (N * N + x * x), ctx.mantissa_bits());
}

BigReal F_minus_main(long n, const BigReal& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  BigReal n3(n * n * n);
  BigReal a = BigReal(7L) * n3 + BigReal(2L) + quarter();
  BigReal b = a + quarter();
  BigReal r = gamma_ratio(n, ctx.widened(32)) * a * b / (a * a + x * x) * (BigReal(7L) / (BigReal(7L) + BigReal::pi()));
  return finalize(r, ctx.mantissa_bits());
}

BigReal G_minus_main(long n, const BigReal& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  BigReal n3(n * n * n);
  BigReal a = BigReal(7L) * n3 + BigReal(2L) + quarter();
  BigReal b = a + quarter();
  BigReal r = gamma_ratio(n, ctx.widened(32)) * b / (a * a + x * x) * (BigReal(7L) / (BigReal(7L) + BigReal::pi()));
  return finalize(r, ctx.mantissa_bits());
}

AggregatePoint aggregate_FG(long n, const BigReal& x, const PrecisionContext& ctx, bool strict) {
  require_odd_n(n, "aggregate_FG");
  if (x.sign() < 0 || !x.is_finite()) throw DomainError("aggregate_FG: x must be finite and >= 0");
  AggregatePoint p;
  p.n = n;
  p.x = x;
  long bits = ctx.mantissa_bits();

  auto tab = uv_table(n, ctx);
  {
    PrecisionScope scope(tab->bits());
    BigReal ln_n = log(BigReal(n));
    BigReal X = x * ln_n;
    UVTable::Sums s1 = tab->sums(1, X, tab->bits());
    UVTable::Sums s2 = tab->sums(2, X, tab->bits());
    BigReal f = BigReal(2L) * pow(BigReal(n), BigReal(-0.25));
    BigReal g = f * ln_n;
    p.F_plus = finalize(f * (s2.u + s1.u) / 2L, bits);
    p.F_minus = finalize(f * (s2.u - s1.u) / 2L, bits);
    p.G_plus = finalize(g * (s2.v + s1.v) / 2L, bits);
    p.G_minus = finalize(g * (s2.v - s1.v) / 2L, bits);
  }

  {
    long M = combined_index(7 * n * n * n);
    PrecisionScope scope(bits + 32);
    BigReal inv_sqrt_n = BigReal(1L) / sqrt(BigReal(n));
    BigReal Fp(0L), Fm(0L), Gp(0L), Gm(0L);
    for (long k = 1; k <= n; ++k) {
      BigReal big_y = BigReal::pi() * BigReal(n * k * k);
      BigReal small_y = BigReal::pi() * BigReal(k * k) / BigReal(n);
      for (PairSign sg : {PairSign::Plus, PairSign::Minus}) {
        AlphaBeta hi = alpha_beta_closed(sg, x, big_y, M, ctx.widened(32));
        AlphaBeta lo = alpha_beta_closed(sg, x, small_y, M, ctx.widened(32));
        BigReal f = hi.alpha - lo.alpha * inv_sqrt_n;
        BigReal g = hi.beta + lo.beta * inv_sqrt_n;
        if (sg == PairSign::Plus) {
          Fp += f;
          Gp += g;
        } else {
          Fm += f;
          Gm += g;
        }
      }
    }
    p.F_plus_ii = finalize(Fp, bits);
    p.F_minus_ii = finalize(Fm, bits);
    p.G_plus_ii = finalize(Gp, bits);
    p.G_minus_ii = finalize(Gm, bits);
  }

  PrecisionScope scope(bits + 16);
  BigReal scale_f = abs(p.F_plus) + abs(p.F_minus);
  BigReal scale_g = abs(p.G_plus) + abs(p.G_minus);
  p.discrepancy = max(max(abs(p.F_plus - p.F_plus_ii), abs(p.F_minus - p.F_minus_ii)) / scale_f,
                      max(abs(p.G_plus - p.G_plus_ii), abs(p.G_minus - p.G_minus_ii)) / scale_g);
  p.reconciled = p.discrepancy <= ctx.rel_tol() * BigReal(1000L);
  if (strict && !p.reconciled) {
    throw ReconciliationFailure("aggregate_FG: paths differ by " + p.discrepancy.to_string(6) + " (relative) at n = " +
                                std::to_string(n) + ", x = " + x.to_string(12));
  }

  BigReal n3(n * n * n);
  auto witness = [&](const BigReal& main, const BigReal& actual) {
    return make_witness(BigComplex(main), BigComplex(actual), abs(main) / n3);
  };
  p.F_plus_witness = witness(F_plus_main(n, x, ctx), p.F_plus);
  p.G_plus_witness = witness(G_plus_main(n, x, ctx), p.G_plus);
  p.F_minus_witness = witness(F_minus_main(n, x, ctx), p.F_minus);
  p.G_minus_witness = witness(G_minus_main(n, x, ctx), p.G_minus);
  return p;
}

bool InequalityRow::pass() const {
  return reconciled && u_margin.sign() > 0 && v_margin.sign() > 0 && w_margin.sign() > 0 &&
         F_minus_margin.sign() > 0 && G_minus_margin.sign() > 0 && det_margin.sign() > 0;
}

InequalitySweep final_inequality_sweep(long n, const std::vector<BigReal>& xs, const PrecisionContext& ctx) {
  require_odd_n(n, "final_inequality_sweep");
  for (const auto& x : xs)
    if (!x.is_finite() || x.sign() < 0) throw DomainError("final_inequality_sweep: x values must be finite and >= 0");
  InequalitySweep sw;
  sw.n = n;
  sw.rows.resize(xs.size());
  auto tab = uv_table(n, ctx);
  long bits = ctx.mantissa_bits();
  detail::parallel_for(xs.size(), [&](size_t i) {
    InequalityRow& r = sw.rows[i];
    r.x = xs[i];
    BigReal xf;
    {
      PrecisionScope scope(tab->bits());
      xf = xs[i] / log(BigReal(n));
    }
    AggregatePoint p = aggregate_FG(n, xf, ctx, false);
    PrecisionScope scope(tab->bits());
    UVTable::Sums s1 = tab->sums(1, xs[i], tab->bits());
    UVTable::Sums s2 = tab->sums(2, xs[i], tab->bits());
    BigReal w1 = s1.u / s1.v;
    BigReal w2 = s2.u / s2.v;
    r.u_margin = finalize((s2.u - s1.u) / (s2.u + s1.u), bits);
    r.v_margin = finalize((s2.v - s1.v) / (s2.v + s1.v), bits);
    r.w_margin = finalize((w2 - w1) / (w2 + w1), bits);
    r.F_minus_margin = finalize(p.F_minus / p.F_plus, bits);
    r.G_minus_margin = finalize(p.G_minus / p.G_plus, bits);
    r.det_margin = finalize(p.F_minus / p.F_plus - p.G_minus / p.G_plus, bits);
    r.reconciled = p.reconciled;
  });

  PrecisionScope scope(bits);
  std::optional<BigReal> worst;
  const char* names[] = {"min_u_margin", "min_v_margin", "min_w_margin", "min_F_minus_margin", "min_G_minus_margin",
                         "min_det_margin"};
  std::vector<BigReal> mins(6);
  bool first = true;
  long unreconciled = 0;
  for (const auto& r : sw.rows) {
    const BigReal* vals[] = {&r.u_margin, &r.v_margin, &r.w_margin, &r.F_minus_margin, &r.G_minus_margin,
                             &r.det_margin};
    for (int k = 0; k < 6; ++k) mins[k] = first ? *vals[k] : min(mins[k], *vals[k]);
    first = false;
    if (!r.pass()) ++sw.failures;
    if (!r.reconciled) ++unreconciled;
  }
  sw.report.bound_name = "normalized margins of u, v, w, F-, G- and the determinant stay positive";
  sw.report.add_param("n", std::to_string(n));
  sw.report.add_param("points", std::to_string(xs.size()));
  sw.report.add_param("bits", std::to_string(bits));
  sw.report.add_param("failing_points", std::to_string(sw.failures));
  sw.report.add_param("unreconciled_points", std::to_string(unreconciled));
  sw.report.bound_value = BigReal(0L);
  if (!sw.rows.empty()) {
    BigReal overall = mins[0];
    for (int k = 0; k < 6; ++k) {
      sw.report.add_param(names[k], mins[k].to_string(12));
      overall = min(overall, mins[k]);
    }
    sw.report.empirical_value = -overall;
  }
  return sw;
}

std::vector<BigReal> sweep_points(int count, double x_max) {
  if (count < 1) return {};
  if (!(x_max > 0.0)) throw DomainError("sweep_points: x_max must be positive");
  std::vector<BigReal> xs;
  xs.emplace_back(0L);
  double lo = std::log10(x_max) - 6.0;
  for (int i = 1; i < count; ++i) {
    double e = count == 2 ? lo + 6.0 : lo + 6.0 * (i - 1) / (count - 2);
    xs.emplace_back(std::pow(10.0, e));
  }
  return xs;
}

}  // namespace xilab

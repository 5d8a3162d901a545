#include "xilab/xi_family.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "series.hpp"
#include "xilab/kernels.hpp"
#include "xilab/special.hpp"

namespace xilab {

namespace {

using detail::kLog2E;

BigComplex rounded(BigComplex v, long bits) {
  v.re.round_to(bits);
  v.im.round_to(bits);
  return v;
}

// cos(z t) for real t.
BigComplex cos_zt(const BigComplex& z, const BigReal& t) {
  BigReal xt = z.re * t;
  if (z.im.is_zero()) return BigComplex(cos(xt), BigReal(0L));
  BigReal yt = z.im * t;
  return BigComplex(cos(xt) * cosh(yt), -(sin(xt) * sinh(yt)));
}

// Cutoff T with 8 pi^2 e^{(9/2 + y) T} exp(-pi e^{2T}) below 2^{-bits}.
double xi_tail_cutoff(long bits, double y) {
  double target = static_cast<double>(bits) * std::log(2.0) + std::log(8.0 * M_PI * M_PI) + 8.0;
  double t = 1.0;
  for (int i = 0; i < 200; ++i) {
    double lhs = M_PI * std::exp(2.0 * t) - (4.5 + y) * t;
    if (lhs >= target) return t;
    t += 0.01;
  }
  return t;
}

}  // namespace

double log2_c_estimate(long n, long j) {
  double ln_n = std::log(static_cast<double>(n));
  double jd = static_cast<double>(j);
  // S_{n,2j} < n^{2j} + n^{2j+1}/(2j+1)
  double log2_s = 2.0 * jd * std::log2(static_cast<double>(n)) + std::log2(1.0 + static_cast<double>(n) / (2.0 * jd + 1.0));
  return std::log2(ln_n) + std::log2(2.0 * jd + 1.0) + jd * std::log2(M_PI) - std::lgamma(jd) * kLog2E + log2_s;
}

double sinc_series_guard_bits(long n, long j_max, double im_w) {
  double log2_n = std::log2(static_cast<double>(n));
  double best = 0.0;
  for (long j = 1; j <= j_max; ++j) {
    double phi = (static_cast<double>(j) + 0.25) * std::log(static_cast<double>(n));
    double v = log2_c_estimate(n, j) + (static_cast<double>(j) + 0.25) * log2_n - std::log2(phi);
    best = std::max(best, v);
    // Terms decay monotonically once j is well past pi n^3.
    if (static_cast<double>(j) > 4.0 * M_PI * std::pow(static_cast<double>(n), 3) + 64.0 && v < best - 64.0) break;
  }
  return best + im_w * kLog2E;
}

long sinc_series_terms(long n, long bits, double im_w) {
  double log2_n = std::log2(static_cast<double>(n));
  double peak = M_PI * std::pow(static_cast<double>(n), 3);
  for (long j = 1;; ++j) {
    double phi = (static_cast<double>(j) + 0.25) * std::log(static_cast<double>(n));
    double v = log2_c_estimate(n, j) + (static_cast<double>(j) + 0.25) * log2_n - std::log2(phi) + im_w * kLog2E;
    if (static_cast<double>(j) > peak && v < -static_cast<double>(bits) - 16.0) return j + 8;
    if (j > 10000000) throw ResourceCapError("sinc series needs more than 10^7 terms");
  }
}

CoefficientTable build_coefficients(long n, long m_max, const PrecisionContext& ctx, bool keep_power_sums) {
  if (n < 2) throw DomainError("build_coefficients: n must be >= 2");
  if (m_max < 1) throw DomainError("build_coefficients: m_max must be >= 1");
  if (m_max > 10000000) throw ResourceCapError("build_coefficients: m_max exceeds 10^7");
  CoefficientTable t;
  t.n = n;
  t.m_max = m_max;
  t.bits = ctx.mantissa_bits();
  long bits = ctx.mantissa_bits() + 32 + static_cast<long>(std::ceil(std::log2(static_cast<double>(m_max) + 1.0)));
  PrecisionScope scope(bits);
  BigReal ln_n = log(BigReal(n));
  BigReal pi = BigReal::pi();
  t.omega = ln_n / 2L;
  t.omega.round_to(t.bits);
  t.phi.reserve(static_cast<size_t>(m_max));
  t.c.reserve(static_cast<size_t>(m_max));
  t.log_c.reserve(static_cast<size_t>(m_max));
  if (keep_power_sums) t.s2j.reserve(static_cast<size_t>(m_max));
  std::vector<mpz_class> kp(static_cast<size_t>(n), mpz_class(1));
  BigReal ratio(1L);  // pi^j / Gamma(j)
  for (long j = 1; j <= m_max; ++j) {
    ratio = j == 1 ? pi : ratio * pi / (j - 1);
    mpz_class s = 0;
    for (long k = 1; k <= n; ++k) {
      kp[static_cast<size_t>(k - 1)] *= k * k;
      s += kp[static_cast<size_t>(k - 1)];
    }
    BigReal c = ln_n * BigReal(2 * j + 1) * ratio * BigReal(s);
    BigReal lc = log(c);
    BigReal phi = (BigReal(j) + BigReal(0.25)) * ln_n;
    c.round_to(t.bits);
    lc.round_to(t.bits);
    phi.round_to(t.bits);
    t.c.push_back(std::move(c));
    t.log_c.push_back(std::move(lc));
    t.phi.push_back(std::move(phi));
    if (keep_power_sums) t.s2j.push_back(s);
  }
  return t;
}

BigComplex sinc_pair(const BigComplex& w, const BigReal& phi) {
  BigComplex w2 = w * w;
  BigComplex den = w2 + BigComplex(phi * phi);
  long p = working_precision();
  if (abs(den) < exp2i(-p / 2) * (phi * phi + BigReal(1L))) {
    BigComplex iphi(BigReal(0L), phi);
    return sinc(w - iphi) + sinc(w + iphi);
  }
  BigReal ch = cosh(phi);
  BigReal sh = sinh(phi);
  BigComplex num = w * sin(w) * ch + cos(w) * (phi * sh);
  return num * BigReal(2L) / den;
}

long ApproximantId::sinc_terms() const {
  switch (family) {
    case Family::g:
      return m;
    case Family::h:
      return 2 + l * n * n * n;
    case Family::w:
      return 2 + 14 * n * n * n;
    default:
      return 0;
  }
}

std::string ApproximantId::label() const {
  std::ostringstream os;
  switch (family) {
    case Family::xi:
      os << "Xi";
      break;
    case Family::e:
      os << "E(n=" << n << ",beta=" << beta << ")";
      break;
    case Family::f:
      os << "F(n=" << n << ")";
      break;
    case Family::g:
      os << "G(m=" << m << ",n=" << n << ")";
      break;
    case Family::h:
      os << "H(l=" << l << ",n=" << n << ")";
      break;
    case Family::w:
      os << "W(n=" << n << ")";
      break;
    case Family::xi_alt:
      os << "XiAlt";
      break;
  }
  return os.str();
}

void validate(const ApproximantId& id) {
  switch (id.family) {
    case Family::xi:
      if (id.rep == Representation::gamma || id.rep == Representation::sinc)
        throw RepresentationUnavailable("Xi: only the quadrature representation is implemented");
      return;
    case Family::xi_alt:
      if (id.rep == Representation::quadrature || id.rep == Representation::sinc)
        throw RepresentationUnavailable("XiAlt: use the gamma series (xi_alt) or xi_alt_mellin");
      return;
    case Family::e:
      if (id.n < 2) throw DomainError("E: n must be >= 2");
      if (!(id.beta > 0.0 && id.beta < 1.0)) throw DomainError("E: beta must lie in (0, 1)");
      if (id.rep != Representation::quadrature && id.rep != Representation::automatic && id.beta != 0.5)
        throw RepresentationUnavailable("E: gamma and sinc representations need beta = 1/2");
      return;
    case Family::f:
      if (id.n < 2) throw DomainError("F: n must be >= 2");
      return;
    case Family::g:
      if (id.n < 2) throw DomainError("G: n must be >= 2");
      if (id.m < 1) throw DomainError("G: m must be >= 1");
      break;
    case Family::h:
      if (id.n < 2) throw DomainError("H: n must be >= 2");
      if (id.l < 9) throw DomainError("H: l must be >= 9");
      break;
    case Family::w:
      if (id.n < 2) throw DomainError("W: n must be >= 2");
      break;
  }
  if (id.rep == Representation::quadrature || id.rep == Representation::gamma)
    throw RepresentationUnavailable(id.label() + ": only the sinc representation is implemented");
}

namespace {

enum class Method { quadrature, gamma, sinc };

Method method_of(const ApproximantId& id) {
  switch (id.family) {
    case Family::xi:
      return Method::quadrature;
    case Family::xi_alt:
      return Method::gamma;
    case Family::e:
    case Family::f:
      if (id.rep == Representation::gamma) return Method::gamma;
      if (id.rep == Representation::sinc) return Method::sinc;
      return Method::quadrature;
    default:
      return Method::sinc;
  }
}

struct QuadState {
  double x_max = 0;
  double y_max = 0;
  long bits = 0;
  std::vector<BigReal> nodes;
  std::vector<BigReal> weighted;  // w_i f(t_i)
};

struct SincState {
  double y_max = 0;
  long bits = 0;
  long terms = 0;
  double extra_guard = 0;
  std::shared_ptr<const CoefficientTable> table;
};

// F(n, z) from the lower incomplete gamma form.
BigComplex f_gamma(long n, const BigComplex& z, const PrecisionContext& ctx) {
  PrecisionContext wide = ctx.widened(32);
  PrecisionScope scope(wide.mantissa_bits());
  BigReal pi = BigReal::pi();
  BigReal nn(n);
  BigComplex total;
  for (int sign : {1, -1}) {
    BigComplex iz2 = BigComplex(-z.im, z.re) / BigReal(2L);
    if (sign < 0) iz2 = -iz2;
    BigComplex s = BigComplex(BigReal(9L) / 4L) + iz2;
    BigComplex s1 = BigComplex(BigReal(5L) / 4L) + iz2;
    BigComplex ns = pow(nn, s);
    BigComplex nms = reciprocal(ns);
    BigComplex ns1 = pow(nn, s1);
    BigComplex nms1 = reciprocal(ns1);
    for (long k = 1; k <= n; ++k) {
      BigReal pk = pi * BigReal(k * k);
      BigReal hi = pk * nn;
      BigReal lo = pk / nn;
      BigComplex a = ns * gamma_lower_normalized(s, hi, wide) - nms * gamma_lower_normalized(s, lo, wide);
      BigComplex b = ns1 * gamma_lower_normalized(s1, hi, wide) - nms1 * gamma_lower_normalized(s1, lo, wide);
      total += a * (pk * pk) - b * (pk * BigReal(1.5));
    }
  }
  return rounded(total, ctx.mantissa_bits());
}

}  // namespace

struct Approximant::Impl {
  ApproximantId id;
  PrecisionContext ctx;
  Method method;
  mutable std::mutex mu;
  mutable std::shared_ptr<const QuadState> quad;
  mutable std::shared_ptr<const SincState> sinc;

  Impl(const ApproximantId& i, const PrecisionContext& c) : id(i), ctx(c), method(method_of(i)) {}

  double upper_limit(long bits, double y) const {
    switch (id.family) {
      case Family::xi:
        return xi_tail_cutoff(bits, y);
      case Family::e:
        return id.beta * std::log(static_cast<double>(id.n));
      default:
        return 0.5 * std::log(static_cast<double>(id.n));
    }
  }

  BigReal integrand(const BigReal& t, const PrecisionContext& c) const {
    if (id.family == Family::xi) return kernel_eval(KernelSpec::exact(), t, c);
    return kernel_eval(KernelSpec::truncated(id.n), t, c);
  }

  std::shared_ptr<const QuadState> build_quad(double x_max, double y_max) const {
    auto st = std::make_shared<QuadState>();
    st->x_max = x_max;
    st->y_max = y_max;
    // Xi decays like e^{-pi x / 4}; keep that many bits beyond the target.
    double guard = 32.0;
    if (id.family == Family::xi) guard += M_PI * x_max / 4.0 * kLog2E;
    st->bits = ctx.mantissa_bits() + static_cast<long>(std::ceil(guard));
    PrecisionContext work(st->bits, ctx.exponent_bits(), ctx.rel_tol_log2() - static_cast<long>(std::ceil(guard)));
    PrecisionScope scope(st->bits);
    BigReal upper;
    if (id.family == Family::e) {
      upper = log(BigReal(id.n)) * BigReal(id.beta);
    } else if (id.family == Family::f) {
      upper = log(BigReal(id.n)) / 2L;
    } else {
      upper = BigReal(upper_limit(st->bits, y_max));
    }
    BigReal xr(x_max);
    BigReal yr(y_max);
    auto probe = [&](const BigReal& t) {
      BigReal f = integrand(t, work);
      BigReal g = exp(yr * t) * f;
      BigReal xt = xr * t;
      return BigComplex(g * cos(xt), g * sin(xt));
    };
    BigReal abs_tol = exp2i(work.rel_tol_log2() - 4);
    CompositeRule rule = CompositeRule::refine(probe, BigReal(0L), upper, work, abs_tol);
    st->nodes = rule.nodes();
    st->weighted.reserve(st->nodes.size());
    for (size_t i = 0; i < st->nodes.size(); ++i) st->weighted.push_back(rule.weights()[i] * integrand(st->nodes[i], work));
    return st;
  }

  std::shared_ptr<const SincState> build_sinc(double y_max, double extra_guard) const {
    auto st = std::make_shared<SincState>();
    st->y_max = y_max;
    st->extra_guard = extra_guard;
    double omega = id.family == Family::w ? 1.0 : 0.5 * std::log(static_cast<double>(id.n));
    double im_w = omega * y_max;
    long terms = id.sinc_terms();
    if (terms == 0) terms = sinc_series_terms(id.n, ctx.mantissa_bits() + 64, im_w);
    double guard = sinc_series_guard_bits(id.n, terms, im_w) + 48.0 + extra_guard;
    st->bits = ctx.mantissa_bits() + static_cast<long>(std::ceil(std::max(0.0, guard)));
    if (id.sinc_terms() == 0) terms = sinc_series_terms(id.n, st->bits, im_w);
    st->terms = terms;
    PrecisionContext work(st->bits, ctx.exponent_bits());
    st->table = std::make_shared<const CoefficientTable>(build_coefficients(id.n, terms, work, false));
    return st;
  }

  BigComplex eval_quad(const QuadState& st, const BigComplex& z) const {
    PrecisionScope scope(st.bits);
    BigComplex acc;
    for (size_t i = 0; i < st.nodes.size(); ++i) acc += cos_zt(z, st.nodes[i]) * st.weighted[i];
    return rounded(acc * BigReal(2L), ctx.mantissa_bits());
  }

  // Returns the sum and the bits lost to cancellation.
  std::pair<BigComplex, double> eval_sinc(const SincState& st, const BigComplex& z) const {
    PrecisionScope scope(st.bits);
    const CoefficientTable& t = *st.table;
    BigComplex w = id.family == Family::w ? z : z * t.omega;
    BigComplex sw = sin(w);
    BigComplex cw = cos(w);
    BigComplex wsw = w * sw;
    BigComplex w2 = w * w;
    BigComplex sum;
    double max_log2 = -1e300;
    BigReal small = exp2i(-st.bits / 2);
    for (long j = 1; j <= st.terms; ++j) {
      const BigReal& phi = t.phi_at(j);
      BigReal phi2 = phi * phi;
      BigComplex den = w2 + BigComplex(phi2);
      BigComplex pair;
      if (abs(den) < small * (phi2 + BigReal(1L))) {
        pair = sinc_pair(w, phi);
      } else {
        BigComplex num = wsw * cosh(phi) + cw * (phi * sinh(phi));
        pair = num * BigReal(2L) / den;
      }
      BigComplex term = pair * t.c_at(j);
      max_log2 = std::max(max_log2, detail::log2_mag(term));
      if (j % 2 == 1) {
        sum -= term;
      } else {
        sum += term;
      }
    }
    double sl = detail::log2_mag(sum);
    double lost = std::isfinite(sl) ? std::max(0.0, max_log2 - sl) : 0.0;
    return {rounded(sum, ctx.mantissa_bits()), lost};
  }
};

Approximant::Approximant(const ApproximantId& id, const PrecisionContext& ctx)
    : impl_(std::make_unique<Impl>(id, ctx)) {
  validate(id);
}

Approximant::~Approximant() = default;
Approximant::Approximant(Approximant&&) noexcept = default;
Approximant& Approximant::operator=(Approximant&&) noexcept = default;

const ApproximantId& Approximant::id() const { return impl_->id; }
const PrecisionContext& Approximant::context() const { return impl_->ctx; }

void Approximant::prepare(double x_max, double y_max) {
  x_max = std::fabs(x_max);
  y_max = std::fabs(y_max);
  if (impl_->id.family == Family::xi && y_max > 10.0) throw DomainError("Xi: |Im z| must be <= 10");
  if (impl_->method == Method::quadrature) {
    auto st = impl_->build_quad(x_max, y_max);
    std::lock_guard<std::mutex> lock(impl_->mu);
    impl_->quad = st;
  } else if (impl_->method == Method::sinc) {
    auto st = impl_->build_sinc(y_max, 0.0);
    std::lock_guard<std::mutex> lock(impl_->mu);
    impl_->sinc = st;
  }
}

BigComplex Approximant::operator()(const BigComplex& z) const {
  const Impl& im = *impl_;
  double x = std::fabs(z.re.to_double());
  double y = std::fabs(z.im.to_double());
  if (im.id.family == Family::xi && y > 10.0) throw DomainError("Xi: |Im z| must be <= 10");
  switch (im.method) {
    case Method::quadrature: {
      std::shared_ptr<const QuadState> st;
      {
        std::lock_guard<std::mutex> lock(im.mu);
        st = im.quad;
      }
      if (!st || x > st->x_max || y > st->y_max) {
        double nx = std::max(x, st ? st->x_max : 0.0);
        double ny = std::max(y, st ? st->y_max : 0.0);
        auto fresh = im.build_quad(nx, ny);
        std::lock_guard<std::mutex> lock(im.mu);
        im.quad = fresh;
        st = fresh;
      }
      return im.eval_quad(*st, z);
    }
    case Method::gamma:
      if (im.id.family == Family::xi_alt) return xi_alt(z, im.ctx);
      return f_gamma(im.id.n, z, im.ctx);
    case Method::sinc: {
      std::shared_ptr<const SincState> st;
      {
        std::lock_guard<std::mutex> lock(im.mu);
        st = im.sinc;
      }
      if (!st || y > st->y_max) {
        auto fresh = im.build_sinc(std::max(y, st ? st->y_max : 0.0), st ? st->extra_guard : 0.0);
        std::lock_guard<std::mutex> lock(im.mu);
        im.sinc = fresh;
        st = fresh;
      }
      for (int attempt = 0; attempt < 6; ++attempt) {
        auto [v, lost] = im.eval_sinc(*st, z);
        double guard = static_cast<double>(st->bits - im.ctx.mantissa_bits());
        if (lost + 16.0 < guard) return v;
        auto fresh = im.build_sinc(st->y_max, st->extra_guard + (lost + 32.0 - guard));
        std::lock_guard<std::mutex> lock(im.mu);
        im.sinc = fresh;
        st = fresh;
      }
      throw NonconvergenceError(im.id.label() + ": sinc series cancellation exceeded guard escalation");
    }
  }
  throw DomainError("approximant: unknown method");
}

BigComplex approximant_eval(const ApproximantId& id, const BigComplex& z, const PrecisionContext& ctx) {
  Approximant a(id, ctx);
  return a(z);
}

BigComplex xi_reference(const BigComplex& z, const PrecisionContext& ctx) {
  return approximant_eval(ApproximantId::xi(), z, ctx);
}

BoundReport representation_crosscheck(long n, const std::vector<BigComplex>& grid, const PrecisionContext& ctx) {
  if (n < 2 || n > 9) throw DomainError("representation_crosscheck: n must lie in [2, 9]");
  BoundReport r;
  r.bound_name = "F representation agreement";
  r.add_param("n", std::to_string(n));
  r.add_param("points", std::to_string(grid.size()));
  r.add_param("bits", std::to_string(ctx.mantissa_bits()));
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  r.bound_value = ctx.rel_tol() * BigReal(1000L);
  BigReal worst(0L);
  if (!grid.empty()) {
    double xm = 0;
    double ym = 0;
    for (const auto& z : grid) {
      xm = std::max(xm, std::fabs(z.re.to_double()));
      ym = std::max(ym, std::fabs(z.im.to_double()));
    }
    Approximant quad(ApproximantId::f(n, Representation::quadrature), ctx);
    Approximant gam(ApproximantId::f(n, Representation::gamma), ctx);
    Approximant snc(ApproximantId::f(n, Representation::sinc), ctx);
    quad.prepare(xm, ym);
    snc.prepare(xm, ym);
    for (const auto& z : grid) {
      BigComplex a = quad(z);
      BigComplex b = gam(z);
      BigComplex c = snc(z);
      BigReal scale = max(abs(a), max(abs(b), abs(c)));
      if (scale.is_zero()) continue;
      BigReal d = max(abs(a - b), max(abs(a - c), abs(b - c))) / scale;
      worst = max(worst, d);
    }
  }
  r.empirical_value = worst;
  return r;
}

BigComplex xi_alt(const BigComplex& s, const PrecisionContext& ctx) {
  double t = std::fabs(s.im.to_double());
  // |xi_a| ~ e^{-pi |t| / 4} while the series terms are O(1).
  long guard = 48 + static_cast<long>(std::ceil(M_PI * t / 4.0 * kLog2E));
  PrecisionContext work = ctx.widened(guard);
  PrecisionScope scope(work.mantissa_bits());
  BigComplex half_s = s / BigReal(2L);
  BigComplex half_1ms = (BigComplex(BigReal(1L)) - s) / BigReal(2L);
  BigReal quarter_pi = BigReal::pi() / 4L;
  double stop = static_cast<double>(work.mantissa_bits() + 16) / kLog2E + std::fabs(s.re.to_double()) + 8.0;
  BigComplex sum;
  for (long k = 0;; ++k) {
    bool any = false;
    for (long r : {1L, 2L, 3L}) {
      BigReal q(4 * k + r);
      BigReal a = quarter_pi * q * q;
      if (a.to_double() > stop) continue;
      any = true;
      BigComplex term = gamma_upper(half_s, a, work) * pow(a, -half_s) +
                        gamma_upper(half_1ms, a, work) * pow(a, -half_1ms);
      if (r == 2) {
        sum -= term * BigReal(2L);
      } else {
        sum += term;
      }
    }
    if (!any) break;
  }
  return rounded(sum, ctx.mantissa_bits());
}

BigComplex xi_alt_direct(const BigComplex& s, const PrecisionContext& ctx) {
  if (s.re.sign() <= 0) throw DomainError("xi_alt_direct: needs Re s > 0");
  double t = std::fabs(s.im.to_double());
  long guard = 48 + static_cast<long>(std::ceil(M_PI * t * kLog2E));
  PrecisionContext work = ctx.widened(guard);
  PrecisionScope scope(work.mantissa_bits());
  // Borwein: eta(s) = -1/d_N sum_{k<N} (-1)^k (d_k - d_N) / (k+1)^s.
  double need = static_cast<double>(work.mantissa_bits()) + 16.0 + std::log2(3.0 * (1.0 + 2.0 * t));
  long terms = static_cast<long>(std::ceil(need / std::log2(3.0 + std::sqrt(8.0)))) + 4;
  std::vector<mpz_class> d(static_cast<size_t>(terms + 1));
  mpz_class acc = 0;
  for (long i = 0; i <= terms; ++i) {
    mpz_class num;
    mpz_class den;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(terms + i - 1));
    mpz_class f1;
    mpz_class f2;
    mpz_fac_ui(f1.get_mpz_t(), static_cast<unsigned long>(terms - i));
    mpz_fac_ui(f2.get_mpz_t(), static_cast<unsigned long>(2 * i));
    mpz_class p4;
    mpz_ui_pow_ui(p4.get_mpz_t(), 4, static_cast<unsigned long>(i));
    acc += num * p4 / (f1 * f2);
    d[static_cast<size_t>(i)] = acc * terms;
  }
  BigComplex eta;
  const mpz_class& dn = d[static_cast<size_t>(terms)];
  for (long k = 0; k < terms; ++k) {
    BigComplex p = pow(BigReal(k + 1), -s);
    BigReal coef(mpz_class(d[static_cast<size_t>(k)] - dn));
    BigComplex term = p * coef;
    if (k % 2 == 0) {
      eta += term;
    } else {
      eta -= term;
    }
  }
  eta = -eta / BigReal(dn);
  BigComplex two_s = pow(BigReal(2L), s) - BigComplex(BigReal(1L));
  BigComplex pis = pow(BigReal::pi(), -(s / BigReal(2L)));
  BigComplex g = gamma_complex(s / BigReal(2L), work);
  return rounded(two_s * pis * g * eta, ctx.mantissa_bits());
}

BigComplex xi_alt_mellin(const BigComplex& s, const PrecisionContext& ctx) {
  double t = std::fabs(s.im.to_double());
  double sr = std::fabs(s.re.to_double()) + 1.0;
  long guard = 48 + static_cast<long>(std::ceil(M_PI * t / 4.0 * kLog2E));
  PrecisionContext work(ctx.mantissa_bits() + guard, ctx.exponent_bits(), ctx.rel_tol_log2() - guard);
  PrecisionScope scope(work.mantissa_bits());
  // varphi(e^{2t}) ~ exp(-pi e^{2t} / 4): stop where that beats the target with e^{|s| T} headroom.
  double target = static_cast<double>(work.mantissa_bits() + 16) * std::log(2.0);
  double upper = 0.5;
  while (M_PI * std::exp(2.0 * upper) / 4.0 - sr * upper < target) upper += 0.01;
  BigComplex one_ms = BigComplex(BigReal(1L)) - s;
  auto f = [&](const BigReal& u) {
    BigReal v = alt_varphi(exp(u * 2L), work);
    BigComplex e1 = exp(s * u);
    BigComplex e2 = exp(one_ms * u);
    return (e1 + e2) * v;
  };
  CompositeRule rule = CompositeRule::refine(f, BigReal(0L), BigReal(upper), work, exp2i(work.rel_tol_log2() - 4));
  BigComplex acc;
  for (size_t i = 0; i < rule.nodes().size(); ++i) acc += f(rule.nodes()[i]) * rule.weights()[i];
  return rounded(acc * BigReal(2L), ctx.mantissa_bits());
}

}  // namespace xilab

#include "xilab/error_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xilab/special.hpp"
#include "xilab/xi_family.hpp"

namespace xilab {

namespace {

BigReal pi_e_n3(long n) {
  BigReal n3(n * n * n);
  return BigReal::pi() * exp(BigReal(1L)) * n3;
}

// log(3 e pi^3 n^10)
BigReal log_rho_prefactor(long n) {
  BigReal pi = BigReal::pi();
  return log(BigReal(3L) * pi * pi * pi) + BigReal(1L) + BigReal(10L) * log(BigReal(n));
}

std::string fmt(const BigReal& v) { return v.to_string(12); }

}  // namespace

BigReal delta_bound(long n, const BigReal& beta, const PrecisionContext& ctx) {
  if (n < 2) throw DomainError("delta_bound: n must be >= 2");
  if (!(beta > BigReal(0L)) || !(beta < BigReal(1L))) throw DomainError("delta_bound: beta must lie in (0, 1)");
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  BigReal pi = BigReal::pi();
  BigReal nn(n);
  BigReal b = pow(nn, BigReal(2L) * beta);
  BigReal b32 = b * sqrt(b);
  BigReal d1 = BigReal(5L) * pi * b32 * exp(-b * pi);
  BigReal d2 = (BigReal(2L) * pi * nn * nn + BigReal(2L) * nn * b + b32) * exp(-nn * nn * pi / b);
  BigReal r = d1 + d2;
  r.round_to(ctx.mantissa_bits());
  return r;
}

BigReal lambda_bound(const BigReal& n, const PrecisionContext& ctx) {
  if (n < BigReal(2L)) throw DomainError("lambda_bound: n must be >= 2");
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  BigReal pin = BigReal::pi() * n;
  BigReal r = BigReal(72L) * pow(pin, 6L) * exp(-pin);
  r.round_to(ctx.mantissa_bits());
  return r;
}

BigReal lambda_bound(long n, const PrecisionContext& ctx) { return lambda_bound(BigReal(n), ctx); }

BigReal nu0_threshold(const BigReal& eps, const PrecisionContext& ctx) {
  if (!(eps > BigReal(0L)) || !(eps < BigReal(1L))) throw DomainError("nu0_threshold: eps must lie in (0, 1)");
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  BigReal arg = -pow(eps / BigReal(72L), BigReal(1L) / BigReal(6L)) / BigReal(6L);
  BigReal r = -(BigReal(6L) / BigReal::pi()) * lambert_w_minus1(arg, ctx.widened(16));
  r.round_to(ctx.mantissa_bits());
  return r;
}

long nu0_ceiling(const BigReal& eps, const PrecisionContext& ctx) {
  return threshold_ceiling([&](const PrecisionContext& c) { return nu0_threshold(eps, c); }, ctx);
}

BigReal rho_bound(const BigReal& m, long n, const PrecisionContext& ctx) {
  if (n < 2) throw DomainError("rho_bound: n must be >= 2");
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  BigReal a = pi_e_n3(n);
  BigReal m2 = m - BigReal(2L);
  if (!(m2 > a)) throw DomainError("rho_bound: requires m > 2 + pi e n^3");
  BigReal r = exp(log_rho_prefactor(n) + m2 * log(a / m2));
  r.round_to(ctx.mantissa_bits());
  return r;
}

BigReal rho_bound(long m, long n, const PrecisionContext& ctx) { return rho_bound(BigReal(m), n, ctx); }

BigReal eta_exponent(const BigReal& eps, long n, const PrecisionContext& ctx) {
  if (n < 2) throw DomainError("eta_exponent: n must be >= 2");
  if (!(eps > BigReal(0L))) throw DomainError("eta_exponent: eps must be positive");
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  BigReal r = (log_rho_prefactor(n) - log(eps)) / pi_e_n3(n);
  r.round_to(ctx.mantissa_bits());
  return r;
}

BigReal sigma_ratio(const BigReal& x, const PrecisionContext& ctx) {
  if (!(x > BigReal(0L))) throw DomainError("sigma_ratio: x must be positive");
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  BigReal r = x / lambert_w0(x, ctx.widened(16));
  r.round_to(ctx.mantissa_bits());
  return r;
}

BigReal mu0_threshold(const BigReal& eps, long n, const PrecisionContext& ctx) {
  if (!(eps > BigReal(0L)) || !(eps < BigReal(1L))) throw DomainError("mu0_threshold: eps must lie in (0, 1)");
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  PrecisionContext wide = ctx.widened(16);
  BigReal r = BigReal(2L) + pi_e_n3(n) * sigma_ratio(eta_exponent(eps, n, wide), wide);
  r.round_to(ctx.mantissa_bits());
  return r;
}

long mu0_ceiling(const BigReal& eps, long n, const PrecisionContext& ctx) {
  return threshold_ceiling([&](const PrecisionContext& c) { return mu0_threshold(eps, n, c); }, ctx);
}

BigReal eta_tilde(long n, const PrecisionContext& ctx) {
  PrecisionContext wide = ctx.widened(16);
  return eta_exponent(lambda_bound(n, wide), n, ctx);
}

BigReal sigma_tilde(long n, const PrecisionContext& ctx) {
  return sigma_ratio(eta_tilde(n, ctx.widened(16)), ctx);
}

BigReal mu0_tilde(long n, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  BigReal r = BigReal(2L) + pi_e_n3(n) * sigma_tilde(n, ctx.widened(16));
  r.round_to(ctx.mantissa_bits());
  return r;
}

long m_of(long l, long n) { return 2 + l * n * n * n; }

BigReal gamma_ratio_upper_coefficient(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  BigReal pi = BigReal::pi();
  BigReal r = pi * sqrt(pi) * exp(BigReal(1L)) / (BigReal(7L) * sqrt(BigReal(14L)));
  r.round_to(ctx.mantissa_bits());
  return r;
}

BigReal gamma_ratio_lower_coefficient(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  BigReal r = BigReal(65L) / (BigReal(84L) * exp(BigReal(1L))) * gamma_ratio_upper_coefficient(ctx.widened(16));
  r.round_to(ctx.mantissa_bits());
  return r;
}

BigReal gamma_ratio_growth(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  BigReal r = BigReal(7L) * log(BigReal::pi() * exp(BigReal(1L)) / BigReal(7L));
  r.round_to(ctx.mantissa_bits());
  return r;
}

GammaRatioBounds gamma_ratio_bounds(long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("gamma_ratio_bounds: n must be >= 1");
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  PrecisionContext wide = ctx.widened(32);
  BigReal n3(n * n * n);
  BigReal big_m = BigReal(7L) * n3 + BigReal(2L);
  BigReal log_g = BigReal(3L) / BigReal(2L) * log(BigReal(n)) + n3 * gamma_ratio_growth(wide);
  BigReal log_value = big_m * log(BigReal::pi() * n3) - gamma_ln(big_m, wide);
  GammaRatioBounds b;
  b.upper = exp(log(gamma_ratio_upper_coefficient(wide)) + log_g);
  b.lower = exp(log(gamma_ratio_lower_coefficient(wide)) + log_g);
  b.value = exp(log_value);
  for (BigReal* v : {&b.lower, &b.value, &b.upper}) v->round_to(ctx.mantissa_bits());
  return b;
}

long threshold_ceiling(const std::function<BigReal(const PrecisionContext&)>& solve, const PrecisionContext& ctx) {
  long bits = ctx.mantissa_bits() + 64;
  long window = 32;
  for (int attempt = 0; attempt < 5; ++attempt) {
    PrecisionContext c(bits, ctx.exponent_bits());
    PrecisionScope scope(bits);
    BigReal x = solve(c);
    BigReal nearest = floor(x + BigReal(1L) / BigReal(2L));
    if (abs(x - nearest) > exp2i(-window)) return ceil(x).to_long();
    bits *= 2;
    window *= 2;
  }
  throw NonconvergenceError("threshold_ceiling: solution stays within rounding distance of an integer");
}

std::vector<BigComplex> strip_grid(int nx, int ny, double x_max, double y_max) {
  std::vector<BigComplex> grid;
  if (nx < 1 || ny < 1) return grid;
  grid.reserve(static_cast<size_t>(nx) * static_cast<size_t>(ny));
  for (int i = 0; i < nx; ++i) {
    double x = nx == 1 ? 0.0 : -x_max + 2.0 * x_max * i / (nx - 1);
    for (int k = 0; k < ny; ++k) {
      double y = ny == 1 ? 0.0 : -y_max + 2.0 * y_max * k / (ny - 1);
      grid.emplace_back(x, y);
    }
  }
  return grid;
}

namespace {

std::pair<double, double> extent(const std::vector<BigComplex>& grid) {
  double xm = 0;
  double ym = 0;
  for (const auto& z : grid) {
    xm = std::max(xm, std::fabs(z.re.to_double()));
    ym = std::max(ym, std::fabs(z.im.to_double()));
  }
  return {xm, ym};
}

void require_strip(const std::vector<BigComplex>& grid) {
  for (const auto& z : grid)
    if (abs(z.im) > BigReal(1L) / BigReal(2L)) throw DomainError("grid point outside |Im z| <= 1/2");
}

}  // namespace

BoundReport uniform_bound_dominance(long n, const std::vector<BigComplex>& grid, const PrecisionContext& ctx) {
  require_strip(grid);
  BoundReport r;
  r.bound_name = "lambda(n) >= sup |F(n,z) - Xi(z)|";
  r.add_param("n", std::to_string(n));
  r.add_param("points", std::to_string(grid.size()));
  r.add_param("bits", std::to_string(ctx.mantissa_bits()));
  r.bound_value = lambda_bound(n, ctx);
  auto [xm, ym] = extent(grid);
  Approximant f(ApproximantId::f(n), ctx);
  Approximant xi(ApproximantId::xi(), ctx);
  f.prepare(xm, ym);
  xi.prepare(xm, ym);
  BigReal worst(0L);
  for (const auto& z : grid) worst = max(worst, abs(f(z) - xi(z)));
  r.empirical_value = worst;
  r.add_param("sup", fmt(worst));
  return r;
}

BoundReport truncation_bound_dominance(long m, long n, const std::vector<BigComplex>& grid,
                                       const PrecisionContext& ctx) {
  require_strip(grid);
  BoundReport r;
  r.bound_name = "rho(m,n) >= sup |G(m,n,z) - F(n,z)|";
  r.add_param("m", std::to_string(m));
  r.add_param("n", std::to_string(n));
  r.add_param("points", std::to_string(grid.size()));
  r.add_param("bits", std::to_string(ctx.mantissa_bits()));
  r.bound_value = rho_bound(m, n, ctx);
  auto [xm, ym] = extent(grid);
  Approximant g(ApproximantId::g(m, n), ctx);
  Approximant f(ApproximantId::f(n), ctx);
  g.prepare(xm, ym);
  f.prepare(xm, ym);
  BigReal worst(0L);
  for (const auto& z : grid) worst = max(worst, abs(g(z) - f(z)));
  r.empirical_value = worst;
  r.add_param("sup", fmt(worst));
  return r;
}

}  // namespace xilab

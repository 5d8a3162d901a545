#pragma once

#include <functional>
#include <vector>

#include "xilab/bigfloat.hpp"
#include "xilab/precision.hpp"
#include "xilab/report.hpp"

namespace xilab {

// 5 pi b^{3/2} e^{-b pi} + (2 pi n^2 + 2 n b + b^{3/2}) e^{-n^2 pi / b}, b = n^{2 beta}.
// Bounds sup |Xi - E(n, beta, .)| on the strip |Im z| <= 1/2.
BigReal delta_bound(long n, const BigReal& beta, const PrecisionContext& ctx);

// lambda(n) = 72 (pi n)^6 e^{-pi n}. Real n >= 2 is accepted so that thresholds round-trip.
BigReal lambda_bound(const BigReal& n, const PrecisionContext& ctx);
BigReal lambda_bound(long n, const PrecisionContext& ctx);
// Solution of lambda(nu) = eps on the decreasing branch, via W_{-1}.
BigReal nu0_threshold(const BigReal& eps, const PrecisionContext& ctx);
long nu0_ceiling(const BigReal& eps, const PrecisionContext& ctx);

// rho(m, n) = 3 e pi^3 n^10 (pi e n^3 / (m - 2))^{m-2}; requires m > 2 + pi e n^3.
BigReal rho_bound(const BigReal& m, long n, const PrecisionContext& ctx);
BigReal rho_bound(long m, long n, const PrecisionContext& ctx);
// eta(eps, n) = log(3 e pi^3 n^10 / eps) / (pi e n^3). Any eps > 0.
BigReal eta_exponent(const BigReal& eps, long n, const PrecisionContext& ctx);
// sigma(x) = x / W_0(x), x > 0.
BigReal sigma_ratio(const BigReal& x, const PrecisionContext& ctx);
// mu_0 = 2 + pi e n^3 sigma(eta(eps, n)), the solution of rho(mu_0, n) = eps.
BigReal mu0_threshold(const BigReal& eps, long n, const PrecisionContext& ctx);
long mu0_ceiling(const BigReal& eps, long n, const PrecisionContext& ctx);

// The same quantities at eps = lambda(n), where lambda(n) may exceed 1.
BigReal eta_tilde(long n, const PrecisionContext& ctx);
BigReal sigma_tilde(long n, const PrecisionContext& ctx);
BigReal mu0_tilde(long n, const PrecisionContext& ctx);

// m(l, n) = 2 + l n^3.
long m_of(long l, long n);

// Sandwich for (pi n^3)^{7n^3+2} / Gamma(7n^3+2):
// lower = (65 / (84 e)) C g(n) < value < C g(n) = upper,
// C = pi^{3/2} e / (7 sqrt 14), g(n) = n^{3/2} exp(7 n^3 log(pi e / 7)).
struct GammaRatioBounds {
  BigReal lower;
  BigReal value;
  BigReal upper;
  bool holds() const { return lower < value && value < upper; }
};
GammaRatioBounds gamma_ratio_bounds(long n, const PrecisionContext& ctx);
BigReal gamma_ratio_upper_coefficient(const PrecisionContext& ctx);
BigReal gamma_ratio_lower_coefficient(const PrecisionContext& ctx);
// 7 log(pi e / 7).
BigReal gamma_ratio_growth(const PrecisionContext& ctx);

// Exact ceiling of a transcendental solution. solve is evaluated at ctx + 64 guard
// bits; if the result lies within 2^-32 of an integer the precision is doubled and
// the window narrowed, up to four times, before giving up with NonconvergenceError.
long threshold_ceiling(const std::function<BigReal(const PrecisionContext&)>& solve, const PrecisionContext& ctx);

// nx by ny grid on |Re z| <= x_max, |Im z| <= y_max, endpoints included.
std::vector<BigComplex> strip_grid(int nx, int ny, double x_max, double y_max);

// Grid sup of |F(n, z) - Xi(z)| against lambda(n).
BoundReport uniform_bound_dominance(long n, const std::vector<BigComplex>& grid, const PrecisionContext& ctx);
// Grid sup of |G(m, n, z) - F(n, z)| against rho(m, n).
BoundReport truncation_bound_dominance(long m, long n, const std::vector<BigComplex>& grid,
                                       const PrecisionContext& ctx);

}  // namespace xilab

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "xilab/error_bounds.hpp"
#include "xilab/special.hpp"

using namespace xilab;

namespace {

const PrecisionContext kCtx(128);

double tol(double factor) { return factor * std::ldexp(1.0, static_cast<int>(kCtx.rel_tol_log2())); }

BigReal dec(const char* s) {
  PrecisionScope scope(192);
  return BigReal(std::string(s));
}

}  // namespace

TEST_CASE("delta bound") {
  PrecisionScope scope(160);
  BigReal half = BigReal(1L) / BigReal(2L);
  BigReal pi = BigReal::pi();
  BigReal d2 = delta_bound(2, half, kCtx);
  CHECK(d2 < BigReal(8L) * pi * BigReal(4L) * exp(BigReal(-2L) * pi));
  CHECK(d2 < lambda_bound(2L, kCtx));
  CHECK(delta_bound(10, half, kCtx) < delta_bound(9, half, kCtx));
  // beta = 1/2 collapses both exponentials to e^{-pi n}.
  for (long n : {3L, 7L, 20L}) {
    BigReal nn(n);
    BigReal expect = (BigReal(5L) * pi * pow(nn, BigReal(3L) / BigReal(2L)) + BigReal(2L) * pi * nn * nn +
                      BigReal(2L) * nn * nn + pow(nn, BigReal(3L) / BigReal(2L))) *
                     exp(-pi * nn);
    CHECK(oracle::rel_err(delta_bound(n, half, kCtx), expect) < tol(8));
    CHECK(delta_bound(n, half, kCtx) < BigReal(8L) * pi * nn * nn * exp(-pi * nn));
  }
  for (double beta : {0.2, 0.35, 0.65, 0.8}) {
    double b0 = std::min(beta, 1.0 - beta);
    for (long n : {4L, 9L, 30L}) {
      BigReal nn(n);
      BigReal cap = BigReal(8L) * pi * pow(nn, 3L) * exp(-pi * pow(nn, BigReal(2.0 * b0)));
      CHECK(delta_bound(n, BigReal(beta), kCtx) < cap);
    }
  }
  CHECK_THROWS_AS(delta_bound(1, half, kCtx), DomainError);
  CHECK_THROWS_AS(delta_bound(4, BigReal(1L), kCtx), DomainError);
  CHECK_THROWS_AS(delta_bound(4, BigReal(0L), kCtx), DomainError);
}

TEST_CASE("lambda and nu0") {
  PrecisionScope scope(160);
  CHECK(nu0_ceiling(dec("1e-2"), kCtx) == 10);
  CHECK(nu0_ceiling(dec("1e-10"), kCtx) == 17);
  CHECK(nu0_ceiling(dec("1e-100"), kCtx) == 86);
  for (const char* e : {"1e-2", "1e-10", "1e-100", "0.5"}) {
    BigReal eps = dec(e);
    BigReal nu = nu0_threshold(eps, kCtx);
    CHECK(nu > BigReal(6L) / BigReal::pi());
    CHECK(oracle::rel_err(lambda_bound(nu, kCtx), eps) < tol(64));
  }
  for (long n = 2; n < 60; ++n) CHECK(lambda_bound(n + 1, kCtx) < lambda_bound(n, kCtx));
  CHECK_THROWS_AS(nu0_threshold(BigReal(1L), kCtx), DomainError);
  CHECK_THROWS_AS(nu0_threshold(BigReal(0L), kCtx), DomainError);
  CHECK_THROWS_AS(lambda_bound(1L, kCtx), DomainError);
}

TEST_CASE("rho, sigma and mu0") {
  PrecisionScope scope(160);
  BigReal x(0.05);
  BigReal s = sigma_ratio(x, kCtx);
  BigReal e = exp(BigReal(1L));
  CHECK(s > BigReal(1L));
  CHECK(s < e / (e - BigReal(1L)));
  CHECK(s < BigReal(1L) / (BigReal(1L) - x));
  // W_0(x) e^{W_0(x)} = x with W_0 = x / sigma.
  BigReal w = x / s;
  CHECK(oracle::rel_err(w * exp(w), x) < tol(16));

  CHECK(std::fabs(eta_tilde(2, kCtx).to_double() - 0.0504045) < 1e-6);
  CHECK(std::fabs(sigma_tilde(2, kCtx).to_double() - 1.04921) < 1e-5);
  BigReal pie = BigReal::pi() * e;
  CHECK(std::fabs((pie * sigma_tilde(2, kCtx)).to_double() - 8.95999) < 1e-5);
  for (long n = 2; n <= 12; ++n) {
    CHECK(mu0_tilde(n, kCtx) < BigReal(m_of(9, n)));
    if (n > 2) CHECK(eta_tilde(n, kCtx) < eta_tilde(n - 1, kCtx));
  }

  // rho decreasing in m above 2 + pi e n^3.
  long m0 = 2 + static_cast<long>(std::ceil(M_PI * std::exp(1.0) * 8));
  for (long m = m0; m < 400; ++m) CHECK(rho_bound(m + 1, 2, kCtx) < rho_bound(m, 2, kCtx));
  CHECK_THROWS_AS(rho_bound(m0 - 1, 2, kCtx), DomainError);

  for (const char* es : {"1e-3", "1e-40"}) {
    BigReal eps = dec(es);
    for (long n : {2L, 5L}) {
      BigReal mu = mu0_threshold(eps, n, kCtx);
      CHECK(mu > BigReal(2L) + pie * BigReal(n * n * n));
      CHECK(oracle::rel_err(rho_bound(mu, n, kCtx), eps) < tol(1 << 12));
      long c = mu0_ceiling(eps, n, kCtx);
      CHECK(rho_bound(c, n, kCtx) <= eps);
      CHECK(BigReal(c - 1) < mu);
    }
  }
  CHECK_THROWS_AS(mu0_threshold(BigReal(2L), 3, kCtx), DomainError);
  CHECK_THROWS_AS(sigma_ratio(BigReal(0L), kCtx), DomainError);
}

TEST_CASE("m of l n") {
  CHECK(m_of(9, 10) == 9002);
  CHECK(m_of(9, 17) == 44219);
  CHECK(m_of(9, 86) == 5724506);
  // rho(m(l, n), n) decreases in n for l >= 9.
  for (long l : {9L, 12L})
    for (long n = 2; n < 8; ++n) CHECK(rho_bound(m_of(l, n + 1), n + 1, kCtx) < rho_bound(m_of(l, n), n, kCtx));
}

TEST_CASE("gamma ratio sandwich") {
  PrecisionScope scope(160);
  CHECK(std::fabs(gamma_ratio_upper_coefficient(kCtx).to_double() - 0.577906) < 1e-6);
  CHECK(std::fabs(gamma_ratio_lower_coefficient(kCtx).to_double() - 0.164512) < 1e-6);
  CHECK(std::fabs(gamma_ratio_growth(kCtx).to_double() - 1.39174) < 1e-5);
  CHECK(gamma_ratio_growth(kCtx) < BigReal::pi());
  for (long n = 1; n <= 9; ++n) {
    GammaRatioBounds b = gamma_ratio_bounds(n, kCtx);
    CHECK(b.holds());
    // Independent log-space value from the Stirling oracle.
    BigReal m(7 * n * n * n + 2);
    BigReal direct = exp(m * log(BigReal::pi() * BigReal(n * n * n)) - gamma_ln(m, kCtx.widened(32)));
    CHECK(oracle::rel_err(b.value, direct) < 1e-20);
  }
}

TEST_CASE("threshold ceiling escalation") {
  int calls = 0;
  auto exact_three = [&](const PrecisionContext&) {
    ++calls;
    return BigReal(3L);
  };
  CHECK_THROWS_AS(threshold_ceiling(exact_three, kCtx), NonconvergenceError);
  CHECK(calls == 5);
  calls = 0;
  auto near_three = [&](const PrecisionContext& c) {
    ++calls;
    PrecisionScope scope(c.mantissa_bits());
    return BigReal(3L) + exp2i(-40);
  };
  CHECK(threshold_ceiling(near_three, kCtx) == 4);
  CHECK(calls == 2);
}

TEST_CASE("empirical dominance on a small strip grid") {
  PrecisionContext ctx(160);
  auto grid = strip_grid(9, 3, 30.0, 0.5);
  CHECK(grid.size() == 27);
  BigReal prev = BigReal::inf();
  for (long n : {4L, 6L}) {
    BoundReport r = uniform_bound_dominance(n, grid, ctx);
    CHECK(r.pass());
    CHECK(*r.empirical_value < prev);
    CHECK(r.empirical_value->sign() > 0);
    prev = *r.empirical_value;
  }
  BoundReport g = truncation_bound_dominance(m_of(9, 3), 3, strip_grid(5, 3, 10.0, 0.5), ctx);
  CHECK(g.pass());
  CHECK_THROWS_AS(uniform_bound_dominance(4, {BigComplex(0.0, 0.7)}, ctx), DomainError);
}

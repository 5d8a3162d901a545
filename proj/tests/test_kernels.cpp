#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "xilab/kernels.hpp"

using namespace xilab;

namespace {

const PrecisionContext kCtx(128);

double tol(double factor) { return factor * std::ldexp(1.0, static_cast<int>(kCtx.rel_tol_log2())); }

BigReal omega(long n) { return log(BigReal(n)) / 2L; }

}  // namespace

TEST_CASE("phi_term") {
  PrecisionScope scope(160);
  BigReal pi = BigReal::pi();
  BigReal expect = (pi * pi * 4L - pi * 6L) * exp(-pi);
  CHECK(oracle::rel_err(phi_term(1, BigReal(0L), kCtx), expect) < tol(4));
  CHECK(phi_term(1, BigReal(0L), kCtx).to_double() == doctest::Approx(0.891454).epsilon(1e-6));
  PrecisionContext wide(256);
  BigReal hi;
  {
    PrecisionScope s2(256);
    hi = phi_term(1, BigReal(0L), wide);
  }
  CHECK(oracle::rel_err(phi_term(1, BigReal(0L), kCtx), hi) < tol(1));
  for (long k = 1; k <= 20; ++k) {
    for (double t : {0.01, 0.3, 1.0, 2.0}) CHECK(phi_term(k, BigReal(t), kCtx).sign() > 0);
  }
  CHECK(phi_term(1, BigReal(1L), kCtx) != phi_term(1, BigReal(-1L), kCtx));
  CHECK_THROWS_AS(phi_term(0, BigReal(0L), kCtx), DomainError);
}

TEST_CASE("Phi(0) and the constant b") {
  PrecisionScope scope(160);
  BigReal phi0 = kernel_eval(KernelSpec::exact(), BigReal(0L), kCtx);
  CHECK(phi0.to_double() == doctest::Approx(0.8933938).epsilon(1e-7));
  // Independent: plain sum of the defining terms.
  BigReal direct(0L);
  for (long k = 1; k <= 30; ++k) direct += phi_term(k, BigReal(0L), kCtx);
  CHECK(oracle::rel_err(phi0, direct) < tol(8));
  CHECK(std::fabs(shi_b(kCtx).to_double() - 5.059069) < 5e-7);
}

TEST_CASE("Phi is even and positive on [0, 3]") {
  for (int i = 0; i <= 12; ++i) {
    BigReal t = BigReal(i) / 4L;
    BigReal a = kernel_eval(KernelSpec::exact(), t, kCtx);
    BigReal b = kernel_eval(KernelSpec::exact(), -t, kCtx);
    CHECK(a.sign() > 0);
    CHECK(oracle::rel_err(a, b) < tol(16));
  }
}

TEST_CASE("truncated kernel is even") {
  for (long n : {2L, 3L, 7L}) {
    for (double t : {0.1, 0.7, 2.5}) {
      BigReal a = kernel_eval(KernelSpec::truncated(n), BigReal(t), kCtx);
      BigReal b = kernel_eval(KernelSpec::truncated(n), BigReal(-t), kCtx);
      CHECK(a == b);
    }
  }
  CHECK_THROWS_AS(kernel_eval(KernelSpec::truncated(1), BigReal(0L), kCtx), DomainError);
}

TEST_CASE("historical kernels approach Phi in the tail") {
  auto rel = [](double t) {
    BigReal p = kernel_eval(KernelSpec::polya(), BigReal(t), kCtx);
    BigReal f = kernel_eval(KernelSpec::exact(), BigReal(t), kCtx);
    return abs(p - f) / f;
  };
  CHECK(rel(3.0) < rel(1.0));
  auto rel_half = [](double t) {
    BigReal p = kernel_eval(KernelSpec::polya(), BigReal(t), kCtx);
    BigReal f = kernel_eval(KernelSpec::exact(), BigReal(t), kCtx) / 2L;
    return (abs(p - f) / f).to_double();
  };
  CHECK(rel_half(3.0) < rel_half(2.0));
  CHECK(rel_half(2.0) < rel_half(1.0));
  CHECK(rel_half(3.0) < 0.01);
  CHECK(kernel_eval(KernelSpec::polya2(), BigReal(0.5), kCtx).is_finite());
  CHECK(kernel_eval(KernelSpec::debruijn(), BigReal(0.5), kCtx).sign() > 0);
  auto hejhal_rel = [](double t) {
    BigReal h = kernel_eval(KernelSpec::hejhal(3), BigReal(t), kCtx);
    BigReal half = kernel_eval(KernelSpec::exact(), BigReal(t), kCtx) / 2L;
    return oracle::rel_err(h, half);
  };
  CHECK(hejhal_rel(3.0) < hejhal_rel(2.0));
  CHECK(hejhal_rel(3.0) < 0.01);
  CHECK_THROWS_AS(kernel_eval(KernelSpec::hejhal(0), BigReal(0L), kCtx), DomainError);
}

TEST_CASE("Shi kernel parameters") {
  PrecisionScope scope(160);
  BigReal b = shi_b(kCtx);
  BigReal mu_small = shi_solve_mu(BigReal(1e-30), kCtx);
  CHECK(oracle::rel_err(mu_small, b) < 1e-20);
  CHECK(ceil(shi_solve_mu(BigReal(0.5), kCtx)).to_long() <= 7);
  CHECK(ceil(shi_solve_mu(BigReal(0.01), kCtx)).to_long() <= 6);
  BigReal phi0 = kernel_eval(KernelSpec::exact(), BigReal(0L), kCtx) / 2L;
  CHECK(oracle::rel_err(kernel_eval(KernelSpec::shi(7, 0.5), BigReal(0L), kCtx), phi0) < tol(64));
  CHECK(oracle::rel_err(kernel_eval(KernelSpec::shi(6, 0.01), BigReal(0L), kCtx), phi0) < tol(64));
  CHECK_THROWS_AS(kernel_eval(KernelSpec::shi(2, 0.5), BigReal(0L), kCtx), DomainError);
  CHECK_THROWS_AS(shi_solve_mu(BigReal(1.5), kCtx), DomainError);
}

TEST_CASE("sinc-cosh kernel equals the truncated kernel inside (-omega_n, omega_n)") {
  for (long n : {2L, 3L, 4L}) {
    BigReal w = omega(n);
    for (int i = -4; i <= 4; ++i) {
      BigReal t = w * BigReal(i) / 5L;
      BigReal a = kernel_eval(KernelSpec::sinc_cosh(n), t, kCtx);
      BigReal b = kernel_eval(KernelSpec::truncated(n), t, kCtx);
      CHECK(oracle::rel_err(a, b) < tol(100));
    }
  }
}

TEST_CASE("Psi_n") {
  PrecisionScope scope(160);
  BigReal x(2L);
  BigReal lhs = pow(x, BigReal(0.25)) * psi_n(x, 4, kCtx);
  BigReal rhs = pow(x, BigReal(-0.25)) * psi_n(BigReal(1L) / x, 4, kCtx);
  CHECK((abs(lhs - rhs) / abs(lhs)).to_double() < tol(4));
  BigReal t(0.3);
  BigReal phi3 = kernel_eval(KernelSpec::truncated(3), t, kCtx);
  BigReal via_psi = exp(t / 2L) * 2L * psi_n(exp(t * 2L), 3, kCtx);
  CHECK(oracle::rel_err(phi3, via_psi) < tol(16));
  // Psi(1) from the defining series against Phi(0)/2.
  BigReal direct(0L);
  for (long k = 1; k <= 30; ++k) direct += psi_term(k, BigReal(1L), kCtx);
  BigReal phi0 = kernel_eval(KernelSpec::exact(), BigReal(0L), kCtx);
  CHECK(oracle::rel_err(direct, phi0 / 2L) < tol(16));
  CHECK(oracle::rel_err(psi_full(BigReal(1L), kCtx), direct) < tol(16));
  CHECK_THROWS_AS(psi_n(BigReal(0L), 3, kCtx), DomainError);
}

TEST_CASE("smallest positive kernel zero windows") {
  for (long n = 2; n <= 12; ++n) {
    BigReal tau = smallest_positive_kernel_zero(n, kCtx);
    CHECK(tau > omega(n + 1));
    CHECK(tau < omega(n + 2));
    BigReal scale = abs(kernel_eval(KernelSpec::truncated(n), BigReal(0L), kCtx));
    CHECK((abs(kernel_eval(KernelSpec::truncated(n), tau, kCtx)) / scale).to_double() < 1e-25);
  }
  CHECK(kernel_eval(KernelSpec::truncated(8), omega(8) * 3L, kCtx).sign() < 0);
  CHECK_THROWS_AS(smallest_positive_kernel_zero(13, kCtx), DomainError);
}

TEST_CASE("alternating kernels") {
  PrecisionScope scope(160);
  CHECK(alt_varphi(BigReal(1L), kCtx).sign() > 0);
  for (int i = 0; i < 200; ++i) {
    BigReal x = pow(BigReal(10L), BigReal(-2L) + BigReal(4L) * BigReal(i) / 199L);
    CHECK(alt_varphi(x, kCtx).sign() > 0);
  }
  BigReal x(2L);
  BigReal a = alt_varphi(BigReal(1L) / x, kCtx);
  BigReal b = sqrt(x) * alt_varphi(x, kCtx);
  CHECK(oracle::rel_err(a, b) < tol(16));
  // theta_4(0, q) = prod (1 - q^{2n}) (1 - q^{2n-1})^2 with q = e^{-pi}.
  BigReal q = exp(-BigReal::pi());
  BigReal prod(1L);
  for (long k = 1; k <= 60; ++k) {
    BigReal a1 = BigReal(1L) - pow(q, 2 * k);
    BigReal a2 = BigReal(1L) - pow(q, 2 * k - 1);
    prod *= a1 * a2 * a2;
  }
  BigReal expect = (BigReal(1L) - prod) / 2L;
  CHECK(oracle::rel_err(alt_phi(BigReal(1L), kCtx), expect) < tol(16));
  CHECK_THROWS_AS(alt_varphi(BigReal(-1L), kCtx), DomainError);
}

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "xilab/kernels.hpp"
#include "xilab/special.hpp"
#include "xilab/xi_family.hpp"

using namespace xilab;

namespace {

const PrecisionContext kCtx(128);

double tol(double factor) { return factor * std::ldexp(1.0, static_cast<int>(kCtx.rel_tol_log2())); }

// rho(m, n) = 3 e pi^3 n^10 (pi e n^3 / (m - 2))^{m-2}
BigReal rho(long m, long n) {
  BigReal pi = BigReal::pi();
  BigReal e = exp(BigReal(1L));
  BigReal n3(n * n * n);
  return e * pi * pi * pi * BigReal(3L) * pow(BigReal(n), 10L) * pow(pi * e * n3 / BigReal(m - 2), m - 2);
}

}  // namespace

TEST_CASE("coefficient table") {
  PrecisionScope scope(160);
  CoefficientTable t = build_coefficients(2, 40, kCtx);
  BigReal c21 = BigReal::pi() * 15L * log(BigReal(2L));
  CHECK(oracle::rel_err(t.c_at(1), c21) < tol(4));
  CHECK(t.c_at(1).to_double() == doctest::Approx(32.663791).epsilon(1e-7));
  CHECK(t.phi_at(1).to_double() == doctest::Approx(0.866433).epsilon(1e-6));
  CHECK(t.s2j[0] == 5);
  for (long j = 1; j <= 40; ++j) {
    CHECK(t.c_at(j).sign() > 0);
    CHECK(oracle::rel_err(exp(t.log_c_at(j)), t.c_at(j)) < tol(64));
    if (j > 1) CHECK(t.phi_at(j) > t.phi_at(j - 1));
    CHECK(t.s2j[static_cast<size_t>(j - 1)] == power_sum(2, 2 * j));
    CHECK(std::fabs(log2_c_estimate(2, j) - t.c_at(j).log2_abs()) < 1.0);
  }
  CoefficientTable t5 = build_coefficients(5, 30, kCtx);
  for (long j : {3L, 11L, 29L}) {
    mpz_class s = t5.s2j[static_cast<size_t>(j - 1)];
    mpz_class a;
    mpz_class b;
    mpz_ui_pow_ui(a.get_mpz_t(), 5, static_cast<unsigned long>(2 * j));
    mpz_ui_pow_ui(b.get_mpz_t(), 4, static_cast<unsigned long>(2 * j + 1));
    CHECK(mpq_class(s) > mpq_class(a) + mpq_class(b, 2 * j + 1));
  }
  CHECK_THROWS_AS(build_coefficients(2, 20000000, kCtx), ResourceCapError);
  CHECK_THROWS_AS(build_coefficients(1, 5, kCtx), DomainError);
}

TEST_CASE("Xi reference values") {
  BigComplex x0 = xi_reference(BigComplex(0.0), kCtx);
  CHECK(std::fabs(x0.re.to_double() - 0.497121) <= 5e-6);
  // Independent mpmath value of 2 int_0^inf Phi(t) dt.
  CHECK(std::fabs(x0.re.to_double() - 0.49712077818831410991) < 1e-15);
  BigComplex z(3.0, 0.2);
  CHECK(oracle::rel_err(xi_reference(z, kCtx), xi_reference(-z, kCtx)) < tol(64));
  CHECK(oracle::rel_err(xi_reference(conj(z), kCtx), conj(xi_reference(z, kCtx))) < tol(64));
  BigReal a = xi_reference(BigComplex(14.0), kCtx).re;
  BigReal b = xi_reference(BigComplex(14.3), kCtx).re;
  CHECK(a.sign() * b.sign() < 0);
  CHECK(abs(xi_reference(BigComplex(14.134725), kCtx)).to_double() < 1e-4);
  CHECK_THROWS_AS(xi_reference(BigComplex(0.0, 11.0), kCtx), DomainError);
}

TEST_CASE("F(n, 0) table in every representation") {
  const double expect[] = {0.443590, 0.493224, 0.496878, 0.497107};
  for (long n = 2; n <= 5; ++n) {
    for (Representation rep : {Representation::quadrature, Representation::gamma, Representation::sinc}) {
      BigComplex v = approximant_eval(ApproximantId::f(n, rep), BigComplex(0.0), kCtx);
      CHECK(std::fabs(v.re.to_double() - expect[n - 2]) <= 5e-6);
      CHECK(v.im.is_zero());
    }
  }
}

TEST_CASE("E with beta = 1/2 is F") {
  BigComplex z(2.5, 0.3);
  BigComplex e = approximant_eval(ApproximantId::e(3, 0.5), z, kCtx);
  BigComplex f = approximant_eval(ApproximantId::f(3, Representation::gamma), z, kCtx);
  CHECK(oracle::rel_err(e, f) < tol(1000));
  CHECK_THROWS_AS(Approximant(ApproximantId::e(3, 0.3, Representation::gamma), kCtx), RepresentationUnavailable);
  CHECK_THROWS_AS(Approximant(ApproximantId::e(3, 1.5), kCtx), DomainError);
  CHECK_THROWS_AS(Approximant(ApproximantId::h(8, 3), kCtx), DomainError);
  // A shorter support gives a different function.
  BigComplex e3 = approximant_eval(ApproximantId::e(3, 0.3), z, kCtx);
  CHECK(oracle::rel_err(e3, f) > 1e-3);
}

TEST_CASE("G approaches F within rho") {
  long n = 3;
  long m = 2 + 9 * n * n * n;
  PrecisionContext ctx = PrecisionContext::for_n(n);
  BigComplex g = approximant_eval(ApproximantId::g(m, n), BigComplex(0.0), ctx);
  BigComplex f = approximant_eval(ApproximantId::f(n, Representation::quadrature), BigComplex(0.0), ctx);
  PrecisionScope scope(ctx.mantissa_bits());
  CHECK(abs(g - f) <= rho(m, n));
  // H(9, n) is G(2 + 9 n^3, n).
  BigComplex h = approximant_eval(ApproximantId::h(9, n), BigComplex(0.0), ctx);
  CHECK(oracle::rel_err(g, h) == 0.0);
}

TEST_CASE("W symmetry and scaling") {
  PrecisionContext ctx = PrecisionContext::for_n(3);
  Approximant w(ApproximantId::w(3), ctx);
  BigComplex z(2.0, 0.1);
  PrecisionScope scope(ctx.mantissa_bits());
  BigReal t = exp2i(ctx.rel_tol_log2() + 10);
  CHECK(abs(w(z) - w(-z)) <= t * abs(w(z)));
  CHECK(abs(w(conj(z)) - conj(w(z))) <= t * abs(w(z)));
  // W(n, z) = H(14, n, 2z / ln n)
  BigComplex h = approximant_eval(ApproximantId::h(14, 3), z * BigReal(2L) / log(BigReal(3L)), ctx);
  CHECK(abs(w(z) - h) <= t * abs(h) * BigReal(16L));
}

TEST_CASE("sinc pair identity") {
  PrecisionScope scope(160);
  BigComplex w(1.3, -0.4);
  BigReal phi(2.2);
  BigComplex iphi(BigReal(0L), phi);
  BigComplex direct = sinc(w - iphi) + sinc(w + iphi);
  CHECK(oracle::rel_err(sinc_pair(w, phi), direct) < tol(8));
  // Removable point w = i phi.
  BigComplex at = sinc_pair(iphi, phi);
  CHECK(at.re.is_finite());
  CHECK(at.im.is_finite());
}

TEST_CASE("representation crosscheck") {
  std::vector<BigComplex> grid = {BigComplex(0.0), BigComplex(1.0), BigComplex(5.0), BigComplex(10.0, 0.4)};
  BoundReport r = representation_crosscheck(2, grid, kCtx);
  CHECK(r.pass());
  CHECK(r.empirical_value->to_double() < 1e-20);
  BoundReport empty = representation_crosscheck(2, {}, kCtx);
  CHECK(empty.pass());
  CHECK(empty.empirical_value->is_zero());
  CHECK_THROWS_AS(representation_crosscheck(10, grid, kCtx), DomainError);
}

TEST_CASE("alternating xi") {
  BigComplex s(0.3, 2.0);
  BigComplex a = xi_alt(s, kCtx);
  BigComplex b = xi_alt(BigComplex(BigReal(1L)) - s, kCtx);
  CHECK(oracle::rel_err(a, b) < tol(1000));
  CHECK(oracle::rel_err(a, xi_alt_direct(s, kCtx)) < tol(1000));
  CHECK(oracle::rel_err(a, xi_alt_mellin(s, kCtx)) < tol(1000));

  BigComplex zero_pt(BigReal(0L), BigReal::pi() * 2L / BigReal::ln2());
  BigComplex v = xi_alt(zero_pt, kCtx);
  BigComplex near = xi_alt(zero_pt + BigComplex(0.0, 0.5), kCtx);
  CHECK((abs(v) / abs(near)).to_double() < tol(1000));

  // -xi_a(s) / ((2^s - 1)(2^{1-s} - 1)) = -xi(s) / (s (1 - s) / 2), xi(s) = Xi((s - 1/2)/i).
  BigComplex s5(0.4, 3.0);
  BigComplex one(1.0);
  BigComplex lhs = -xi_alt(s5, kCtx) / ((pow(BigReal(2L), s5) - one) * (pow(BigReal(2L), one - s5) - one));
  BigComplex zz = (s5 - BigComplex(0.5)) / BigComplex(0.0, 1.0);
  BigComplex xi = xi_reference(zz, kCtx);
  BigComplex rhs = -xi / (s5 * (one - s5) / BigReal(2L));
  CHECK(oracle::rel_err(lhs, rhs) < tol(1000));
}

TEST_CASE("upper incomplete gamma") {
  PrecisionScope scope(160);
  // Gamma(1, x) = e^{-x}
  BigComplex g = gamma_upper(BigComplex(1.0), BigReal(0.7), kCtx);
  CHECK(oracle::rel_err(g.re, exp(BigReal(-0.7))) < tol(16));
  // Gamma(0, x) = E_1(x): finite at the gamma_hat pole.
  BigComplex e1 = gamma_upper(BigComplex(0.0), BigReal(1L), kCtx);
  CHECK(std::fabs(e1.re.to_double() - 0.21938393439552027368) < 1e-18);
  // Gamma(s) = Gamma(s, x) + x^s gamma_hat(s, x)
  BigComplex s(2.5, 7.0);
  BigReal x(3L);
  BigComplex whole = gamma_complex(s, kCtx);
  BigComplex parts = gamma_upper(s, x, kCtx) + pow(x, s) * gamma_lower_normalized(s, x, kCtx);
  CHECK(oracle::rel_err(whole, parts) < tol(64));
  // Gamma(1/2) = sqrt(pi)
  CHECK(oracle::rel_err(gamma_complex(BigComplex(0.5), kCtx).re, sqrt(BigReal::pi())) < tol(16));
}

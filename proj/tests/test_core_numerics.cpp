#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "xilab/special.hpp"

using namespace xilab;

namespace {

const PrecisionContext kCtx(128);

double tol_scale(const PrecisionContext& ctx, double factor) { return factor * std::ldexp(1.0, static_cast<int>(ctx.rel_tol_log2())); }

}  // namespace

TEST_CASE("precision context validation") {
  CHECK_THROWS_AS(PrecisionContext(32), DomainError);
  CHECK_THROWS_AS(PrecisionContext(128, 20), DomainError);
  CHECK(PrecisionContext(128).rel_tol_log2() == -112);
  CHECK(PrecisionContext::auto_bits(2) == static_cast<long>(std::ceil(1.5 * M_PI * 8 / std::log(2.0))) + 256);
  CHECK(PrecisionContext::auto_bits(9) > 5000);
}

TEST_CASE("erfc") {
  PrecisionScope scope(160);
  CHECK(erfc(BigReal(0L), kCtx) == BigReal(1L));
  auto gauss = [](const BigReal& t) { return exp(-(t * t)); };
  BigReal tail = oracle::simpson_rich(gauss, BigReal(1L), BigReal(12L), 4000) * 2L / sqrt(BigReal::pi());
  BigReal v = erfc(BigReal(1L), kCtx);
  CHECK(oracle::rel_err(v, tail) < 1e-18);
  CHECK(v < exp(BigReal(-1L)));
}

TEST_CASE("gamma_hat closed forms and quadrature oracle") {
  PrecisionScope scope(160);
  BigComplex g1 = gamma_lower_normalized(BigComplex(1.0), BigReal(1L), kCtx);
  BigReal expect = BigReal(1L) - exp(BigReal(-1L));
  CHECK(oracle::rel_err(g1.re, expect) < tol_scale(kCtx, 4));
  CHECK(g1.im.is_zero());

  BigComplex s(BigReal(9L) / 4L, BigReal(0L));
  BigReal pi = BigReal::pi();
  BigComplex g = gamma_lower_normalized(s, pi, kCtx);
  // gamma(9/4, pi) = int_0^pi e^{-t} t^{5/4} dt; substitute t = u^4 to make the integrand smooth.
  auto integrand = [](const BigReal& u) {
    BigReal u4 = u * u * u * u;
    return exp(-u4) * pow(u, 5L) * 4L * u * u * u;
  };
  BigReal quad = oracle::simpson_rich(integrand, BigReal(0L), sqrt(sqrt(pi)), 4000);
  BigReal lhs = g.re * pow(pi, BigReal(9L) / 4L);
  CHECK(oracle::rel_err(lhs, quad) < 1e-18);

  BigComplex s3(2.5, -7.0);
  BigComplex z0 = gamma_lower_normalized(s3, BigReal(0L), kCtx);
  CHECK(oracle::rel_err(z0, reciprocal(s3)) < tol_scale(kCtx, 4));
  CHECK_THROWS_AS(gamma_lower_normalized(BigComplex(-2.0), BigReal(1L), kCtx), DomainError);
}

TEST_CASE("gamma_hat agrees with the Kummer form on random points") {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> re_s(0.1, 10.0), im_s(-50.0, 50.0), xs(0.0, 200.0);
  double worst = 0;
  double worst_rec = 0;
  for (int i = 0; i < 1000; ++i) {
    BigComplex s(re_s(rng), im_s(rng));
    BigReal x(xs(rng));
    PrecisionScope scope(kCtx.mantissa_bits());
    BigComplex g = gamma_lower_normalized(s, x, kCtx);
    BigComplex k = kummer_1f1(BigComplex(1.0), s + BigComplex(1.0), BigComplex(x), kCtx);
    BigComplex kform = k * exp(-x) / s;
    worst = std::max(worst, oracle::rel_err(g, kform));
    // y gamma_hat(s+1, y) = s gamma_hat(s, y) - e^{-y}
    BigComplex g1 = gamma_lower_normalized(s + BigComplex(1.0), x, kCtx);
    BigComplex lhs = g1 * x;
    BigComplex sg = s * g;
    BigComplex rhs = sg - BigComplex(exp(-x));
    BigReal scale = abs(sg) + exp(-x);
    worst_rec = std::max(worst_rec, (abs(lhs - rhs) / scale).to_double());
  }
  CHECK(worst < tol_scale(kCtx, 10));
  CHECK(worst_rec < tol_scale(kCtx, 10));
}

TEST_CASE("doubling precision changes gamma_hat by less than rel_tol") {
  BigComplex s(3.25, 11.0);
  BigReal x(57.5);
  PrecisionContext twice = kCtx.doubled();
  BigComplex a = gamma_lower_normalized(s, x, kCtx);
  BigComplex b;
  {
    PrecisionScope scope(twice.mantissa_bits());
    b = gamma_lower_normalized(s, x, twice);
  }
  PrecisionScope scope(twice.mantissa_bits());
  CHECK(oracle::rel_err(a, b) < tol_scale(kCtx, 1));
}

TEST_CASE("kummer and 2F2 against exact rational partial sums") {
  PrecisionScope scope(160);
  CHECK(oracle::rel_err(kummer_1f1(BigComplex(3.0), BigComplex(5.0), BigComplex(0.0), kCtx), BigComplex(1.0)) == 0.0);
  BigComplex e = kummer_1f1(BigComplex(1.0), BigComplex(2.0), BigComplex(1.0), kCtx);
  CHECK(oracle::rel_err(e.re, exp(BigReal(1L)) - BigReal(1L)) < tol_scale(kCtx, 4));

  mpq_class exact = oracle::pfq_rational({1}, {9}, 4, 60);
  BigComplex k = kummer_1f1(BigComplex(1.0), BigComplex(9.0), BigComplex(4.0), kCtx);
  CHECK(oracle::rel_err(k.re, BigReal(exact)) < tol_scale(kCtx, 4));

  mpq_class exact2 = oracle::pfq_rational({1, mpq_class(41, 4)}, {9, mpq_class(45, 4)}, 2, 60);
  BigComplex h = hyp_2f2(BigComplex(1.0), BigComplex(10.25), BigComplex(9.0), BigComplex(11.25), BigComplex(2.0), kCtx);
  CHECK(oracle::rel_err(h.re, BigReal(exact2)) < tol_scale(kCtx, 4));

  BigComplex z(3.0, -1.5);
  BigComplex c(4.5, 2.0);
  BigComplex lhs = hyp_2f2(BigComplex(1.0), c, c, BigComplex(7.0), z, kCtx);
  BigComplex rhs = kummer_1f1(BigComplex(1.0), BigComplex(7.0), z, kCtx);
  CHECK(oracle::rel_err(lhs, rhs) < tol_scale(kCtx, 8));
  CHECK(oracle::rel_err(hyp_2f2(BigComplex(1.0), c, c, BigComplex(7.0), BigComplex(0.0), kCtx), BigComplex(1.0)) == 0.0);
  CHECK_THROWS_AS(kummer_1f1(BigComplex(1.0), BigComplex(-3.0), z, kCtx), DomainError);
}

TEST_CASE("conjugation symmetry of the series") {
  BigComplex s(2.0, 3.0);
  BigComplex z(1.5, -4.0);
  BigComplex a = kummer_1f1(BigComplex(1.0), s, z, kCtx);
  BigComplex b = kummer_1f1(BigComplex(1.0), conj(s), conj(z), kCtx);
  CHECK(oracle::rel_err(a, conj(b)) < tol_scale(kCtx, 4));
  BigComplex g = gamma_lower_normalized(s, BigReal(7L), kCtx);
  BigComplex gc = gamma_lower_normalized(conj(s), BigReal(7L), kCtx);
  CHECK(oracle::rel_err(g, conj(gc)) < tol_scale(kCtx, 4));
}

TEST_CASE("lambert W branches") {
  PrecisionScope scope(160);
  CHECK(lambert_w0(BigReal(0L), kCtx).is_zero());
  BigReal minus_inv_e = -exp(BigReal(-1L));
  CHECK(lambert_w_minus1(minus_inv_e, kCtx) == BigReal(-1L));

  // Bisection oracle on w e^w - 1.
  BigReal lo(0L), hi(1L);
  for (int i = 0; i < 150; ++i) {
    BigReal mid = (lo + hi) / 2L;
    if ((mid * exp(mid) - BigReal(1L)).sign() < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  CHECK(oracle::rel_err(lambert_w0(BigReal(1L), kCtx), lo) < tol_scale(kCtx, 4));

  for (int i = 0; i <= 40; ++i) {
    BigReal x = BigReal(-0.9) + BigReal(20.9) * BigReal(i) / 40L;
    BigReal w = lambert_w0(x * exp(x), kCtx);
    CHECK(abs(w - x).to_double() < tol_scale(kCtx, 16) * (1.0 + std::fabs(x.to_double())));
  }
  for (int i = 0; i <= 40; ++i) {
    BigReal x = BigReal(-20L) + BigReal(18.9) * BigReal(i) / 40L;
    BigReal w = lambert_w_minus1(x * exp(x), kCtx);
    CHECK(abs(w - x).to_double() < tol_scale(kCtx, 16) * std::fabs(x.to_double()));
  }
  CHECK_THROWS_AS(lambert_w0(BigReal(-1L), kCtx), DomainError);
  CHECK_THROWS_AS(lambert_w_minus1(BigReal(0.5), kCtx), DomainError);
}

TEST_CASE("power sums") {
  CHECK(power_sum(2, 2) == 5);
  CHECK(power_sum(3, 4) == 98);
  CHECK(power_sum(5, 0) == 5);
  for (long n = 2; n <= 9; ++n) {
    for (long j = 1; j <= 40; ++j) {
      mpz_class s = power_sum(n, j);
      mpq_class lower = mpq_class(mpz_class(1)) * 0;
      mpz_class nj, n1;
      mpz_ui_pow_ui(nj.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
      mpz_ui_pow_ui(n1.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(j + 1));
      mpz_class nn1;
      mpz_ui_pow_ui(nn1.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j + 1));
      lower = mpq_class(nj) + mpq_class(n1, j + 1);
      mpq_class upper = mpq_class(nj) + mpq_class(nn1, j + 1);
      CHECK(mpq_class(s) > lower);
      CHECK(mpq_class(s) < upper);
    }
  }
}

TEST_CASE("log gamma") {
  PrecisionScope scope(160);
  CHECK(oracle::rel_err(gamma_ln(BigReal(5L), kCtx), log(BigReal(24L))) < tol_scale(kCtx, 4));
  for (long k = 2; k <= 2048; k += 97) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k - 1));
    CHECK(oracle::rel_err(gamma_ln(BigReal(k), kCtx), log(BigReal(f))) < tol_scale(kCtx, 4));
  }
  // Stirling sandwich for Gamma(8) = 7!.
  BigReal base = sqrt(BigReal::pi() * 14L) * pow(BigReal(7L) / exp(BigReal(1L)), 7L);
  BigReal g8 = exp(gamma_ln(BigReal(8L), kCtx));
  CHECK(base * exp(BigReal(1L) / 85L) < g8);
  CHECK(g8 < base * exp(BigReal(1L) / 84L));
  long m = 7 * 729 + 2;
  BigReal lg = gamma_ln(BigReal(m), kCtx);
  CHECK(lg.is_finite());
  CHECK(lg > BigReal(7L * 729) * (log(BigReal(7L * 729)) - BigReal(1L)));
  CHECK_THROWS_AS(gamma_ln(BigReal(0L), kCtx), DomainError);
}

TEST_CASE("remainder witness") {
  RemainderWitness w = make_witness(BigComplex(1.0), BigComplex(1.5), BigReal(1L));
  CHECK(w.pass());
  CHECK(w.epsilon.re.to_double() == doctest::Approx(0.5));
  RemainderWitness f = make_witness(BigComplex(1.0), BigComplex(3.0), BigReal(1L));
  CHECK_FALSE(f.pass());
  RemainderWitness sp = make_split_witness(BigComplex(0.0), BigComplex(0.5, 0.0), BigReal(1L), BigReal(1L));
  CHECK(sp.split());
  CHECK(sp.pass());
}

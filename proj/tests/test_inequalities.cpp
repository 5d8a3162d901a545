#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "xilab/inequalities.hpp"

using namespace xilab;

namespace {

const PrecisionContext kCtx(192);

double tol(double factor) { return factor * std::ldexp(1.0, static_cast<int>(kCtx.rel_tol_log2())); }

}  // namespace

TEST_CASE("direct alpha and beta") {
  PrecisionScope scope(kCtx.mantissa_bits());
  for (int a : {1, 2}) {
    AlphaBeta r = alpha_beta_direct(a, BigReal(3L), BigReal(2L), 5, kCtx);
    CHECK(r.alpha.sign() > 0);
    CHECK(r.beta.sign() > 0);
  }

  // beta_a(0, 1) with m = 2 is a rational number.
  for (int a : {1, 2}) {
    mpq_class exact = 0;
    mpz_class fact = 1;  // Gamma(J)
    for (long J = 1; J <= 2 * 2 + a; ++J) {
      if (J > 1) fact *= J - 1;
      if ((J - a) % 2 != 0) continue;
      mpq_class jq(4 * J + 1, 4);
      exact += mpq_class(2 * J + 1) / (mpq_class(fact) * jq * jq);
    }
    exact.canonicalize();
    BigReal got = alpha_beta_direct(a, BigReal(0L), BigReal(1L), 2, kCtx).beta;
    CHECK(oracle::rel_err(got, BigReal(exact)) < tol(4));
  }

  // Reflection: the (+) pair at -y is the (-) pair at y.
  AlphaBeta p = alpha_beta_direct(PairSign::Plus, BigReal(1L), BigReal(-2L), 3, kCtx);
  AlphaBeta m = alpha_beta_direct(PairSign::Minus, BigReal(1L), BigReal(2L), 3, kCtx);
  CHECK(oracle::rel_err(p.alpha, m.alpha) < tol(4));
  CHECK(oracle::rel_err(p.beta, m.beta) < tol(4));

  CHECK_THROWS_AS(alpha_beta_direct(3, BigReal(0L), BigReal(1L), 2, kCtx), DomainError);
  CHECK_THROWS_AS(alpha_beta_direct(1, BigReal(0L), BigReal(1L), 0, kCtx), DomainError);
}

TEST_CASE("closed forms against direct sums") {
  PrecisionScope scope(kCtx.mantissa_bits());
  CHECK(combined_index(7) == 15);
  for (PairSign s : {PairSign::Plus, PairSign::Minus}) {
    AlphaBeta d = alpha_beta_direct(s, BigReal(2L), BigReal(3L), 7, kCtx);
    AlphaBeta c = alpha_beta_closed(s, BigReal(2L), BigReal(3L), combined_index(7), kCtx);
    CHECK(oracle::rel_err(d.alpha, c.alpha) < tol(1024));
    CHECK(oracle::rel_err(d.beta, c.beta) < tol(1024));
  }
  // Independent direct-sum values (mpmath, 60 digits).
  CHECK(alpha_beta_closed(PairSign::Plus, BigReal(2L), BigReal(3L), 15, kCtx).alpha.to_double() ==
        doctest::Approx(48.7313085968).epsilon(1e-11));
  CHECK(alpha_beta_closed(PairSign::Minus, BigReal(2L), BigReal(3L), 15, kCtx).alpha.to_double() ==
        doctest::Approx(0.191260390034).epsilon(1e-11));
  CHECK(alpha_beta_closed(PairSign::Minus, BigReal(0.5), BigReal(1L), 3, kCtx).alpha.to_double() ==
        doctest::Approx(-0.327609356455).epsilon(1e-11));

  // x = 0 takes the analytic limit for the beta terms.
  for (PairSign s : {PairSign::Plus, PairSign::Minus}) {
    ClosedFormTerms t = closed_form_terms(s, BigReal(0L), BigReal(1L), 3, kCtx);
    CHECK(t.x_limit);
    AlphaBeta d = alpha_beta_direct(s, BigReal(0L), BigReal(1L), 1, kCtx);
    CHECK(oracle::rel_err(d.alpha, t.alpha()) < tol(1024));
    CHECK(oracle::rel_err(d.beta, t.beta()) < tol(1024));
    // Just above the switch the complex route agrees with the limit.
    BigReal tiny = exp2i(-kCtx.mantissa_bits() / 2 + 4);
    AlphaBeta near = alpha_beta_closed(s, tiny, BigReal(1L), 3, kCtx);
    CHECK(oracle::rel_err(near.beta, d.beta) < 1e-40);
  }

  // A1^(+) carries the exponential growth of the full series.
  BigReal y(50L);
  ClosedFormTerms big = closed_form_terms(PairSign::Plus, BigReal(0L), y, 15, kCtx);
  double ratio = (big.A1.re / (y * exp(y))).to_double();
  CHECK(ratio > 0.9);
  CHECK(ratio < 1.1);

  // Re B is even in x, Im B odd.
  ClosedFormTerms tp = closed_form_terms(PairSign::Plus, BigReal(1.5), BigReal(2L), 7, kCtx);
  ClosedFormTerms tm = closed_form_terms(PairSign::Plus, BigReal(-1.5), BigReal(2L), 7, kCtx);
  BigComplex bp = tp.B1 + tp.B2;
  BigComplex bm = tm.B1 + tm.B2;
  CHECK(abs(bp.im + bm.im).to_double() < tol(1024) * abs(bp).to_double());
  CHECK(oracle::rel_err(bp.re, bm.re) < tol(1024));

  CHECK_THROWS_AS(closed_form_terms(PairSign::Plus, BigReal(1L), BigReal(1L), 4, kCtx), DomainError);
  CHECK_THROWS_AS(closed_form_terms(PairSign::Plus, BigReal(1L), BigReal(-1L), 3, kCtx), DomainError);
}

TEST_CASE("Temme-Zhou remainder") {
  PrecisionScope scope(kCtx.mantissa_bits());
  // x = 0: g = (y/a) 1F1(1; 1+a; -y) with a = 1 + b, here an exact rational partial sum.
  mpq_class a(5, 4);
  mpq_class y(2);
  mpq_class f = oracle::pfq_rational({mpq_class(1)}, {a + 1}, -y, 120);
  BigReal expect(mpq_class(y / a * f));
  BigComplex g = temme_zhou_g(BigReal(0.25), BigReal(0L), BigReal(2L), kCtx);
  CHECK(oracle::rel_err(g.re, expect) < tol(16));
  CHECK(g.im.is_zero());

  BigReal b(1.25);
  for (int order : {1, 2, 3}) {
    RemainderWitness w = temme_zhou_witness(order, b, BigReal(3L), BigReal(10L), kCtx);
    CHECK(w.magnitude().is_finite());
  }
  RemainderWitness w1 = temme_zhou_witness(1, b, BigReal(3L), BigReal(40L), kCtx);
  RemainderWitness w2 = temme_zhou_witness(2, b, BigReal(3L), BigReal(40L), kCtx);
  // The second-order main term is closer.
  CHECK(abs(w2.actual - w2.main_term) < abs(w1.actual - w1.main_term));
  RemainderWitness w3 = temme_zhou_witness(3, b, BigReal(0L), BigReal(4L), kCtx);
  CHECK(w3.magnitude().is_zero());
  CHECK(w3.pass());

  CHECK_THROWS_AS(temme_zhou_witness(2, BigReal(2.5), BigReal(1L), BigReal(1L), kCtx), DomainError);
  CHECK_THROWS_AS(temme_zhou_witness(3, BigReal(1.5), BigReal(1L), BigReal(1L), kCtx), DomainError);
  CHECK_THROWS_AS(temme_zhou_witness(4, b, BigReal(1L), BigReal(1L), kCtx), DomainError);
  CHECK_THROWS_AS(temme_zhou_g(b, BigReal(1L), BigReal(0L), kCtx), DomainError);

  Calibration c = temme_zhou_calibration(1, b, 4, 5, 20.0, 1.0, 50.0, PrecisionContext(96));
  CHECK(c.name == "temme_zhou_order1");
  CHECK(c.points == 20);
  CHECK(c.refined_points == 63);
  CHECK(c.finite());
  CHECK(c.sup_refined >= c.sup);
}

TEST_CASE("Zhou hypergeometric remainders") {
  PrecisionScope scope(kCtx.mantissa_bits());
  CHECK(zhou_1f1_constant(kCtx).to_double() == doctest::Approx(70.5838).epsilon(2e-5));
  RemainderWitness p = zhou_1f1_witness(40, BigReal(5L), 1, kCtx);
  RemainderWitness m = zhou_1f1_witness(9, BigReal(4L), -1, kCtx);
  CHECK(p.pass());
  CHECK(m.pass());
  // (m+2)_k > m^k termwise, so the series sits below the geometric main term.
  CHECK(p.actual.re < p.main_term.re);
  CHECK_THROWS_AS(zhou_1f1_witness(10, BigReal(5L), 1, kCtx), DomainError);
  CHECK_THROWS_AS(zhou_1f1_witness(10, BigReal(1L), 0, kCtx), DomainError);

  RemainderWitness q = zhou_2f2_witness(40, BigReal(3L), BigReal(5L), 1, kCtx);
  CHECK(q.split());
  CHECK(q.pass());
  CHECK(zhou_2f2_witness(100, BigReal(50L), BigReal(10L), -1, kCtx).pass());
  RemainderWitness real = zhou_2f2_witness(40, BigReal(0L), BigReal(5L), 1, kCtx);
  CHECK(real.epsilon.im.is_zero());
  CHECK(real.pass());

  WitnessSweep s = zhou_1f1_sweep(3, 2, PrecisionContext(96));
  CHECK(s.points == 12);
  CHECK(s.pass());
  WitnessSweep s2 = zhou_2f2_sweep(2, 2, 2, PrecisionContext(96));
  CHECK(s2.points == 16);
  CHECK(s2.pass());
}

TEST_CASE("aggregate F and G") {
  const PrecisionContext ctx = PrecisionContext::for_n(3);
  PrecisionScope scope(ctx.mantissa_bits());
  AggregatePoint p = aggregate_FG(3, BigReal(0L), ctx);
  CHECK(p.reconciled);
  // Independent direct sums (mpmath) of the j <= 7n^3 definitions.
  CHECK(p.F_minus.to_double() == doctest::Approx(0.18738474704674).epsilon(1e-12));
  CHECK(p.G_minus.to_double() == doctest::Approx(-3.54838968386625).epsilon(1e-12));
  CHECK((p.F_plus / F_plus_main(3, BigReal(0L), ctx)).to_double() ==
        doctest::Approx(0.977022229111602).epsilon(1e-12));
  CHECK(p.F_plus_witness.pass());
  // F^(-) is O(1) on these definitions, far below its large-n main term.
  CHECK_FALSE(p.F_minus_witness.pass());

  AggregatePoint q = aggregate_FG(3, BigReal(1L), ctx);
  CHECK(q.reconciled);
  CHECK(q.F_minus.to_double() == doctest::Approx(-0.202915674858411).epsilon(1e-12));
  CHECK(q.discrepancy < ctx.rel_tol() * BigReal(1000L));

  CHECK_THROWS_AS(aggregate_FG(4, BigReal(0L), ctx), DomainError);
  CHECK_THROWS_AS(aggregate_FG(3, BigReal(-1L), ctx), DomainError);
}

TEST_CASE("final inequality sweep") {
  std::vector<BigReal> xs = sweep_points(5, 100.0);
  REQUIRE(xs.size() == 5);
  CHECK(xs[0].is_zero());
  CHECK(xs[1].to_double() == doctest::Approx(1e-4));
  CHECK(xs[4].to_double() == doctest::Approx(100.0));
  CHECK(sweep_points(0, 1.0).empty());

  const PrecisionContext ctx = PrecisionContext::for_n(3);
  InequalitySweep s = final_inequality_sweep(3, {BigReal(0L), BigReal(std::log(3.0))}, ctx);
  REQUIRE(s.rows.size() == 2);
  for (const auto& r : s.rows) CHECK(r.reconciled);
  CHECK(s.rows[0].F_minus_margin.sign() > 0);
  // The second row is F^(-) at about x = 1, which is negative (mpmath), so the sweep fails.
  CHECK(s.rows[1].F_minus_margin.sign() < 0);
  CHECK(s.failures >= 1);
  CHECK_FALSE(s.pass());
  CHECK_FALSE(s.report.pass());
  CHECK(s.report.params.size() >= 6);
}

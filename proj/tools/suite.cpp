#include "suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "xilab/error_bounds.hpp"
#include "xilab/inequalities.hpp"
#include "xilab/kernels.hpp"
#include "xilab/xi_family.hpp"
#include "xilab/zeros.hpp"

namespace xilab::tools {

namespace {

struct Spec {
  const char* name;
  double budget;
};

const Spec kSpecs[] = {
    {"value table", 30},
    {"threshold table", 1},
    {"uniform-bound dominance", 600},
    {"truncation-bound dominance", 600},
    {"representation identity", 300},
    {"kernel-zero window", 60},
    {"zero bracketing and interlacing", 600},
    {"Hadamard pattern", 600},
    {"zero density", 60},
    {"envelope witnesses", 900},
    {"closed-form identity", 120},
    {"final inequalities", 3600},
    {"alternating family", 300},
};

std::string fmt(double v, int prec = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", prec, v);
  return buf;
}

// Collects pass flags and a short human-readable trail.
struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    note((ok ? "" : "FAIL ") + what);
  }
  void note(const std::string& what) {
    if (detail.tellp() > 0) detail << "; ";
    detail << what;
  }
};

double tol_of(const PrecisionContext& ctx, double factor) {
  return factor * std::ldexp(1.0, static_cast<int>(std::max(-1000L, ctx.rel_tol_log2())));
}

BigReal omega(long n) { return log(BigReal(n)) / 2L; }

void c1(Verdict& v) {
  PrecisionContext ctx(128);
  PrecisionScope scope(ctx.mantissa_bits());
  double xi0 = xi_reference(BigComplex(0.0), ctx).re.to_double();
  v.check(std::fabs(xi0 - 0.497121) <= 5e-6, "Xi(0) = " + fmt(xi0, 8));
  const double expect[] = {0.443590, 0.493224, 0.496878, 0.497107};
  for (long n = 2; n <= 5; ++n) {
    double f = approximant_eval(ApproximantId::f(n), BigComplex(0.0), ctx).re.to_double();
    v.check(std::fabs(f - expect[n - 2]) <= 5e-6, "F(" + std::to_string(n) + ",0) = " + fmt(f, 8));
  }
}

void c2(Verdict& v) {
  PrecisionContext ctx(128);
  PrecisionScope scope(ctx.mantissa_bits());
  const char* eps[] = {"1e-2", "1e-10", "1e-100"};
  const long nu[] = {10, 17, 86};
  const long m9[] = {9002, 44219, 5724506};
  for (int i = 0; i < 3; ++i) {
    long c = nu0_ceiling(BigReal(std::string(eps[i])), ctx);
    long m = m_of(9, c);
    v.check(c == nu[i] && m == m9[i],
            std::string("eps ") + eps[i] + ": ceil nu0 = " + std::to_string(c) + ", m(9,n) = " + std::to_string(m));
  }
}

void c3(Verdict& v) {
  PrecisionContext ctx(192);
  auto grid = strip_grid(41, 11, 30.0, 0.5);
  PrecisionScope scope(ctx.mantissa_bits());
  BigReal prev = BigReal::inf();
  for (long n : {4L, 6L, 8L}) {
    BoundReport r = uniform_bound_dominance(n, grid, ctx);
    bool dec = *r.empirical_value < prev;
    v.check(r.pass() && dec, "n=" + std::to_string(n) + " sup " + r.empirical_value->to_string(6) + " <= lambda " +
                                 r.bound_value.to_string(6) + (dec ? "" : " (not decreasing)"));
    prev = *r.empirical_value;
  }
}

void c4(Verdict& v) {
  PrecisionContext ctx(192);
  auto grid = strip_grid(21, 5, 30.0, 0.5);
  PrecisionScope scope(ctx.mantissa_bits());
  for (long n : {3L, 5L}) {
    BoundReport r = truncation_bound_dominance(m_of(9, n), n, grid, ctx);
    v.check(r.pass(), "n=" + std::to_string(n) + " sup " + r.empirical_value->to_string(6) + " <= rho " +
                          r.bound_value.to_string(6));
  }
}

void c5(Verdict& v) {
  PrecisionContext ctx(160);
  PrecisionScope scope(ctx.mantissa_bits());
  std::vector<BigComplex> grid;
  for (int i = 0; i < 16; ++i) grid.emplace_back(-15.0 + 2.0 * i, i % 3 == 0 ? 0.0 : (i % 3 == 1 ? 0.25 : -0.4));
  for (long n : {2L, 3L, 4L}) {
    BoundReport r = representation_crosscheck(n, grid, ctx);
    v.check(r.pass(), "F representations n=" + std::to_string(n) + " max rel diff " + r.empirical_value->to_string(3));
  }
  double kt = tol_of(ctx, 100);
  for (long n : {2L, 3L, 4L}) {
    double worst = 0;
    BigReal w = omega(n);
    for (int i = -9; i <= 9; ++i) {
      BigReal t = w * BigReal(i) / 10L;
      BigReal a = kernel_eval(KernelSpec::sinc_cosh(n), t, ctx);
      BigReal b = kernel_eval(KernelSpec::truncated(n), t, ctx);
      worst = std::max(worst, (abs(a - b) / abs(b)).to_double());
    }
    v.check(worst <= kt, "kernel identity n=" + std::to_string(n) + " max rel diff " + fmt(worst, 3));
  }
}

void c6(Verdict& v) {
  PrecisionContext ctx(160);
  PrecisionScope scope(ctx.mantissa_bits());
  int inside = 0;
  for (long n = 2; n <= 12; ++n) {
    BigReal tau = smallest_positive_kernel_zero(n, ctx);
    bool ok = tau > omega(n + 1) && tau < omega(n + 2);
    if (ok) ++inside;
    else v.check(false, "tau_" + std::to_string(n) + " = " + tau.to_string(10));
  }
  v.check(inside == 11, std::to_string(inside) + "/11 windows hold");
}

void c7(Verdict& v) {
  for (long n : {3L, 5L, 7L, 9L}) {
    ZeroLedger L = interlace_report(n, 50, PrecisionContext::for_n(n));
    std::string d = "n=" + std::to_string(n) + ": brackets " + (L.brackets_exact() ? "exact" : "NOT exact") +
                    ", interlacing " + (L.interlace_ok ? "holds" : "fails first at k=" + std::to_string(L.first_violation));
    v.check(L.brackets_exact() && L.interlace_ok, d);
  }
}

void c8(Verdict& v) {
  PrecisionContext ctx = PrecisionContext::for_n(3);
  HadamardTruncation t = hadamard_truncation(3, 50, ctx);
  v.note("p = " + std::to_string(t.p) + (t.capped ? " (capped)" : ""));
  try {
    ZeroLedger L = r_root_pattern(t, ctx);
    v.check(L.brackets_disjoint, "R-root brackets " + std::string(L.brackets_disjoint ? "disjoint" : "overlap"));
  } catch (const BracketFailure& e) {
    v.check(false, std::string("R-root pattern: ") + e.what());
  }
  BoundReport r = hadamard_convergence_check(t, BigReal(2L), disk_sample(2 * M_PI, 16, 7), ctx);
  PrecisionScope scope(ctx.mantissa_bits());
  v.check(r.pass(), "|R-W| " + r.empirical_value->to_string(4) + " <= " + r.bound_value.to_string(8));
}

void c9(Verdict& v) {
  PrecisionContext ctx = PrecisionContext::for_n(3);
  PrecisionScope scope(ctx.mantissa_bits());
  DensityProbe d = zero_density_probe(3, BigReal::pi() * 20L, ctx);
  v.check(d.pass(), "sign changes on (0, 20pi): " + std::to_string(d.count) + ", expected 20 +- 1");
}

void c10(Verdict& v) {
  PrecisionContext ctx(128);
  PrecisionScope scope(ctx.mantissa_bits());
  WitnessSweep a = zhou_1f1_sweep(20, 20, ctx);
  v.check(a.pass(), "Zhou 1F1: " + std::to_string(a.failures) + "/" + std::to_string(a.points) +
                        " fail, sup |eps| " + a.sup.to_string(4));
  WitnessSweep b = zhou_2f2_sweep(10, 10, 10, ctx);
  v.check(b.pass(), "Zhou 2F2: " + std::to_string(b.failures) + "/" + std::to_string(b.points) +
                        " fail, sup |eps| " + b.sup.to_string(4));
  BigReal beta(1.25);
  // The order-3 peak sits at x -> 0+, y near 2; the grid is dense enough there to resolve it.
  for (int order : {1, 2, 3}) {
    Calibration c = temme_zhou_calibration(order, beta, 41, 41, 10.0, 1.0, 21.0, ctx);
    v.check(c.finite() && c.stable(), "Temme-Zhou order " + std::to_string(order) + ": sup " + c.sup.to_string(5) +
                                          " -> " + c.sup_refined.to_string(5) + " on doubling");
  }
}

void c11(Verdict& v) {
  PrecisionContext ctx(192);
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> ux(-20.0, 20.0), uy(0.1, 30.0);
  std::uniform_int_distribution<long> um(1, 15);
  std::bernoulli_distribution coin(0.5);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    BigReal x(ux(rng)), y(uy(rng));
    long m = um(rng);
    PairSign s = coin(rng) ? PairSign::Plus : PairSign::Minus;
    AlphaBeta d = alpha_beta_direct(s, x, y, m, ctx);
    AlphaBeta c = alpha_beta_closed(s, x, y, combined_index(m), ctx);
    // Normwise: relative to the sum of the term magnitudes, since the (-) pair can pass through zero.
    AlphaBeta mag = alpha_beta_direct(PairSign::Plus, x, y, m, ctx);
    worst = std::max(worst, (abs(d.alpha - c.alpha) / mag.alpha).to_double());
    worst = std::max(worst, (abs(d.beta - c.beta) / mag.beta).to_double());
  }
  v.check(worst <= tol_of(ctx, 1000), "50 points, max rel diff " + fmt(worst, 3) + " vs " + fmt(tol_of(ctx, 1000), 3));
}

void c12(Verdict& v) {
  PrecisionContext ctx = PrecisionContext::for_n(9);
  InequalitySweep s = final_inequality_sweep(9, sweep_points(64, 1000.0), ctx);
  long unreconciled = 0;
  for (const auto& r : s.rows) unreconciled += r.reconciled ? 0 : 1;
  v.note("bits " + std::to_string(ctx.mantissa_bits()));
  v.check(unreconciled == 0, "paths reconcile at " + std::to_string(s.rows.size() - unreconciled) + "/" +
                                 std::to_string(s.rows.size()) + " points");
  for (const auto& [k, val] : s.report.params)
    if (k.rfind("min_", 0) == 0) v.note(k + " " + val.substr(0, std::min<size_t>(val.size(), 12)));
  v.check(s.pass(), std::to_string(s.failures) + "/" + std::to_string(s.rows.size()) + " points violate a margin");
}

void c13(Verdict& v) {
  PrecisionContext ctx(160);
  PrecisionScope scope(ctx.mantissa_bits());
  int positive = 0;
  for (int i = 0; i < 200; ++i) {
    BigReal x = pow(BigReal(10L), BigReal(-2L) + BigReal(4L) * BigReal(i) / 199L);
    if (alt_varphi(x, ctx).sign() > 0) ++positive;
  }
  v.check(positive == 200, "varphi > 0 at " + std::to_string(positive) + "/200 points");
  BigReal x(2L);
  BigReal a = alt_varphi(BigReal(1L) / x, ctx);
  BigReal b = sqrt(x) * alt_varphi(x, ctx);
  double self = (abs(a - b) / abs(a)).to_double();
  v.check(self < tol_of(ctx, 100), "self-inverse residual " + fmt(self, 3));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ure(-1.0, 2.0), uim(-20.0, 20.0);
  double sym = 0;
  for (int i = 0; i < 10; ++i) {
    BigComplex s(ure(rng), uim(rng));
    BigComplex p = xi_alt(s, ctx);
    // The series form is symmetric by construction, so 1 - s goes through the Mellin integral.
    BigComplex q = xi_alt_mellin(BigComplex(1.0) - s, ctx);
    sym = std::max(sym, (abs(p - q) / max(abs(p), abs(q))).to_double());
  }
  v.check(sym < tol_of(ctx, 1000), "xi_a(s) - xi_a(1-s) (series vs Mellin) max rel " + fmt(sym, 3));

  double claim = 0;
  BigComplex one(1.0);
  for (int i = 0; i < 5; ++i) {
    BigComplex s(0.1 + 0.2 * i, 1.0 + 2.5 * i);
    BigComplex lhs = -xi_alt(s, ctx) / ((pow(BigReal(2L), s) - one) * (pow(BigReal(2L), one - s) - one));
    BigComplex z = (s - BigComplex(0.5)) / BigComplex(0.0, 1.0);
    BigComplex rhs = -xi_reference(z, ctx) / (s * (one - s) / BigReal(2L));
    claim = std::max(claim, (abs(lhs - rhs) / abs(rhs)).to_double());
  }
  v.check(claim < tol_of(ctx, 1000), "eta/zeta identity max rel " + fmt(claim, 3));
}

using Body = void (*)(Verdict&);
const Body kBodies[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13};

}  // namespace

int criterion_count() { return 13; }

std::string criterion_name(int id) { return kSpecs[id - 1].name; }

double criterion_budget_seconds(int id) { return kSpecs[id - 1].budget; }

CriterionResult run_criterion(int id) {
  if (id < 1 || id > criterion_count()) throw std::out_of_range("criterion id must lie in 1..13");
  CriterionResult r;
  r.id = id;
  r.name = criterion_name(id);
  r.budget_seconds = criterion_budget_seconds(id);
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  try {
    kBodies[id - 1](v);
  } catch (const std::exception& e) {
    v.check(false, std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.seconds > r.budget_seconds) v.check(false, "runtime over budget");
  r.pass = v.pass;
  r.detail = v.detail.str();
  return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
  std::vector<int> ids = opts.only;
  if (ids.empty())
    for (int i = 1; i <= criterion_count(); ++i) ids.push_back(i);
  std::vector<CriterionResult> out;
  for (int id : ids) {
    out.push_back(run_criterion(id));
    if (opts.on_result) opts.on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "%s  C%-2d %-32s (%.1f s / %.0f s)  ", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.budget_seconds);
  return head + r.detail;
}

}  // namespace xilab::tools

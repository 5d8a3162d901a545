#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "xilab/bigfloat.hpp"
#include "xilab/precision.hpp"
#include "xilab/report.hpp"
#include "xilab/special.hpp"

namespace xilab {

class ReconciliationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// q = 1/4 throughout.
//   alpha_a(x, y) = sum_{j<=m} (2J+1) y^J / Gamma(J) * (J+q) / (x^2 + (J+q)^2),  J = 2j + a
//   beta_a(x, y)  = sum_{j<=m} (2J+1) y^J / Gamma(J) / (x^2 + (J+q)^2)
// and the pair combinations alpha^(+-) = (alpha_2 +- alpha_1) / 2, likewise beta.
enum class PairSign { Plus, Minus };

struct AlphaBeta {
  BigReal alpha, beta;
};

// Direct finite sums. y may be negative (alpha_a(x, -y) = (-1)^a alpha_a(x, y)).
AlphaBeta alpha_beta_direct(int a, const BigReal& x, const BigReal& y, long m, const PrecisionContext& ctx);
AlphaBeta alpha_beta_direct(PairSign sign, const BigReal& x, const BigReal& y, long m, const PrecisionContext& ctx);

// Top index of the combined series y sum_{j<=M} y^j / j! ... that the direct
// sums over j <= m collapse to.
inline long combined_index(long m) { return 2 * m + 1; }

// Closed form in terms of the combined index M (odd), with Y = +y or -y and s = 1 + q + ix:
//   A1 = Y e^Y + Y (q - ix) gamma_hat(s, -Y)
//   A2 = -P 1F1(1; M+2; Y) - P (q - ix) / (M+2+q+ix) 2F2(1, M+2+q+ix; M+2, M+3+q+ix; Y)
//   B1 = -Y (q - ix) / (ix) gamma_hat(s, -Y)
//   B2 =  P (q - ix) / (ix (M+2+q+ix)) 2F2(...)
// with P = Y^{M+2} / Gamma(M+2); alpha = Re A1 + Re A2, beta = Re B1 + Re B2.
// For |x| below 2^{-bits/2} the B terms hold their x -> 0 limits (real).
struct ClosedFormTerms {
  BigComplex A1, A2, B1, B2;
  bool x_limit = false;

  BigReal alpha() const;
  BigReal beta() const;
};

ClosedFormTerms closed_form_terms(PairSign sign, const BigReal& x, const BigReal& y, long M,
                                  const PrecisionContext& ctx);
AlphaBeta alpha_beta_closed(PairSign sign, const BigReal& x, const BigReal& y, long M, const PrecisionContext& ctx);

// g(x, y) = y e^{-y} gamma(a, -y) / (-y)^a = (y/a) 1F1(1; 1+a; -y), a = 1 + b + ix.
BigComplex temme_zhou_g(const BigReal& b, const BigReal& x, const BigReal& y, const PrecisionContext& ctx);

// order 1: g against y/(y+b+ix), envelope M/y (any b > 0)
// order 2: g against g0 = y/(y+b+ix) - ixy/(y+b+ix)^3, envelope M/((y+b)^2+x^2) (1 < b < 2)
// order 3: Im g against Im g0, envelope |x| M/((y+b)^2+x^2) (b = 5/4)
// The constants are not numeric in the source, so M defaults to 1 and |epsilon|
// is the scaled remainder whose supremum calibrates M.
RemainderWitness temme_zhou_witness(int order, const BigReal& b, const BigReal& x, const BigReal& y,
                                    const PrecisionContext& ctx, const BigReal& M = BigReal(1L));

struct Calibration {
  std::string name;
  long points = 0;
  long refined_points = 0;
  BigReal sup;
  BigReal sup_refined;

  bool finite() const { return sup.is_finite() && sup_refined.is_finite(); }
  // Accepted when one grid doubling moves the supremum by less than 5%.
  bool stable() const;
};

// Supremum of the scaled remainder over an nx x ny grid (x in [0, x_max],
// y in [y_min, y_max], both linear), then over the refined (2nx-1) x (2ny-1) grid.
Calibration temme_zhou_calibration(int order, const BigReal& b, int nx, int ny, double x_max, double y_min,
                                   double y_max, const PrecisionContext& ctx);

// M = 6 + 432 / (e ln 2)^3 = 70.5838...
BigReal zhou_1f1_constant(const PrecisionContext& ctx);

// 1F1(1; m+2; mu y) against (1 - mu y/m)^{-1}, envelope M/m. mu = +1 or -1, m > 2y > 0.
RemainderWitness zhou_1f1_witness(long m, const BigReal& y, int mu, const PrecisionContext& ctx);

// 2F2(1, m+2+q+ix; m+2, m+3+q+ix; mu y) against 1F1(1; m+2; mu y). The real part
// of the difference is bounded by 5y/D and the imaginary part by 5|x|/D,
// D = (m+2+q)^2 + x^2.
RemainderWitness zhou_2f2_witness(long m, const BigReal& x, const BigReal& y, int mu, const PrecisionContext& ctx);

struct WitnessSweep {
  std::string name;
  long points = 0;
  long failures = 0;
  BigReal sup;  // largest |epsilon|

  bool pass() const { return points > 0 && failures == 0; }
};

// m takes nm integer values spread over [4, 400]; y = (i / (ny + 1)) m / 2 for
// i = 1..ny; both signs of mu.
WitnessSweep zhou_1f1_sweep(int nm, int ny, const PrecisionContext& ctx);
// Same m and y layout, x takes nx values over [0, 100], both signs of mu.
WitnessSweep zhou_2f2_sweep(int nm, int nx, int ny, const PrecisionContext& ctx);

// F_a(n, x) = sum_k alpha_a(x, pi n k^2) - n^{-1/2} sum_k alpha_a(x, pi k^2 / n)
// G_a(n, x) = sum_k beta_a(x, pi n k^2) + n^{-1/2} sum_k beta_a(x, pi k^2 / n)
// with m = 7 n^3, and F^(+-) = (F_2 +- F_1) / 2, likewise G.
//
// Path (i) uses the u/v sums of the zeros module through
//   F_a(n, x) = 2 n^{-1/4} u_a(n, x ln n),  G_a(n, x) = 2 n^{-1/4} (ln n) v_a(n, x ln n).
// Path (ii) uses the closed forms at combined index 2m + 1.
// F^(-) and G^(-) cancel about pi n^3 / ln 2 bits in path (i); ctx must cover that
// (PrecisionContext::for_n(n) does).
struct AggregatePoint {
  long n = 0;
  BigReal x;
  BigReal F_plus, F_minus, G_plus, G_minus;                  // path (i)
  BigReal F_plus_ii, F_minus_ii, G_plus_ii, G_minus_ii;      // path (ii)
  BigReal discrepancy;  // max |(i) - (ii)| / scale over the four values
  bool reconciled = false;
  // Against the large-n main terms, envelope |main| / n^3 (so |epsilon| calibrates M).
  RemainderWitness F_plus_witness, G_plus_witness, F_minus_witness, G_minus_witness;
};

// Throws ReconciliationFailure when the paths differ by more than 10^3 rel_tol scale
// and `strict` is set; otherwise the flag is recorded.
AggregatePoint aggregate_FG(long n, const BigReal& x, const PrecisionContext& ctx, bool strict = true);

// Main terms (real, positive).
BigReal F_plus_main(long n, const BigReal& x, const PrecisionContext& ctx);
BigReal G_plus_main(long n, const BigReal& x, const PrecisionContext& ctx);
BigReal F_minus_main(long n, const BigReal& x, const PrecisionContext& ctx);
BigReal G_minus_main(long n, const BigReal& x, const PrecisionContext& ctx);

// One row per x, where x is the argument of u, v and w (F and G are taken at x / ln n).
// Margins are normalized: (u2-u1)/(u2+u1), (v2-v1)/(v2+v1), (w2-w1)/(w2+w1),
// F^(-)/F^(+), G^(-)/G^(+) and (F^(-)G^(+) - F^(+)G^(-)) / (F^(+)G^(+)).
struct InequalityRow {
  BigReal x;
  BigReal u_margin, v_margin, w_margin, F_minus_margin, G_minus_margin, det_margin;
  bool reconciled = false;

  bool pass() const;
};

struct InequalitySweep {
  long n = 0;
  std::vector<InequalityRow> rows;
  BoundReport report;  // bound 0 against minus the smallest margin
  long failures = 0;

  bool pass() const { return !rows.empty() && failures == 0; }
};

InequalitySweep final_inequality_sweep(long n, const std::vector<BigReal>& xs, const PrecisionContext& ctx);

// 0 followed by count - 1 log-spaced points in [x_max 10^-6, x_max].
std::vector<BigReal> sweep_points(int count, double x_max);

}  // namespace xilab

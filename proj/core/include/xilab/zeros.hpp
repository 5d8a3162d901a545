#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "xilab/bigfloat.hpp"
#include "xilab/precision.hpp"
#include "xilab/report.hpp"

namespace xilab {

class BracketFailure : public std::runtime_error {
 public:
  BracketFailure(const std::string& what, long k) : std::runtime_error(what), k_(k) {}
  long k() const { return k_; }

 private:
  long k_;
};

class InsufficientRoots : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Even- and odd-index halves of the W sinc series for odd n, m = 7 n^3:
//   u_a(x) = sum_{j<=m} c_J phi_J sinh(phi_J) / (x^2 + phi_J^2),
//   v_a(x) = sum_{j<=m} c_J cosh(phi_J) / (x^2 + phi_J^2),   J = 2j + a,
// with U = 2 u_2 cos x + 2 x v_2 sin x and V the same with a = 1.
// All summands are positive, so the sums carry no cancellation; terms below
// the requested precision relative to the largest one are skipped.
class UVTable {
 public:
  UVTable(long n, const PrecisionContext& ctx);

  long n() const { return n_; }
  long m() const { return m_; }
  long bits() const { return bits_; }

  struct Sums {
    BigReal u, v;
    BigReal du, dv;  // d/dx, filled when requested
  };
  Sums sums(int a, const BigReal& x, long bits, bool derivatives = false) const;
  void sums(int a, const BigComplex& z, long bits, BigComplex& u, BigComplex& v) const;

  // U (a = 2) or V (a = 1) at real x, optionally with the derivative.
  BigReal eval(int a, const BigReal& x, long bits, BigReal* derivative = nullptr) const;
  BigComplex eval(int a, const BigComplex& z, long bits) const;

 private:
  struct Half {
    std::vector<BigReal> a, b, phi2;
    std::vector<double> log2_a, log2_b;
    double max_log2 = 0;
  };
  std::pair<size_t, size_t> window(const Half& h, long bits) const;

  long n_;
  long m_;
  long bits_;
  Half half_[2];
};

// Shared table for (n, ctx bits); built once per process.
std::shared_ptr<const UVTable> uv_table(long n, const PrecisionContext& ctx);

struct UVW {
  BigReal u, v, w;
};
// u_a, v_a and w_a = u_a / v_a. n odd >= 3, a in {1, 2}.
UVW uvw(int a, long n, const BigReal& x, const PrecisionContext& ctx);

BigComplex U_eval(long n, const BigComplex& z, const PrecisionContext& ctx);
BigComplex V_eval(long n, const BigComplex& z, const PrecisionContext& ctx);
// W = U - V; the difference cancels about pi n^3 / ln 2 bits, which ctx must cover.
BigComplex W_eval(long n, const BigComplex& z, const PrecisionContext& ctx);

enum class ZeroOf { U, V };

struct RootEnclosure {
  BigReal x;
  BigReal lo, hi;  // opposite signs at lo and hi
};

// The zero of U (x_k) or V (y_k) in J_k = ((k - 1/2) pi, k pi), enclosed to width
// about rel_tol k pi. Throws BracketFailure if the endpoint signs agree.
RootEnclosure bracket_root(ZeroOf which, long n, long k, const PrecisionContext& ctx);
BigReal bracket_zero(ZeroOf which, long n, long k, const PrecisionContext& ctx);

// Sign changes of U or V over `points` equal steps across the closed J_k.
int sign_changes_in_J(ZeroOf which, long n, long k, int points, const PrecisionContext& ctx);

// |x tan x + w_a(n, x)| / (1 + |x tan x|), a = 2 for U roots and a = 1 for V roots.
BigReal tangent_residual(ZeroOf which, long n, const BigReal& x, const PrecisionContext& ctx);

struct ZeroEntry {
  long k = 0;
  BigReal j_lo, j_hi;
  RootEnclosure x, y;
  int u_sign_changes = 0;
  int v_sign_changes = 0;
  bool order_resolved = false;  // enclosures of x_k and y_k are disjoint
  bool premise_ok = false;      // 0 < w_1 < w_2 at x_k and at y_k
};

struct RRoot {
  long index = 0;
  std::string bracket;  // "rootz1", "rootz2k" or "rootz2kp1"
  BigReal lo, hi;
  BigReal z;
};

struct ZeroLedger {
  long n = 0;
  std::vector<ZeroEntry> entries;
  std::vector<RRoot> r_roots;
  bool interlace_ok = true;
  long first_violation = 0;  // smallest k with x_k >= y_k (or unresolved), 0 if none
  bool brackets_disjoint = true;

  bool premise_ok() const;
  bool brackets_exact() const;  // every J_k shows exactly one sign change for U and for V
};

// Ledger for k = 1..K. Brackets are independent and are solved in parallel.
ZeroLedger interlace_report(long n, long K, const PrecisionContext& ctx, int scan_points = 64);

// Truncated Hadamard products
//   P = U(n,0) prod_{k<=2p} (1 - z^2/x_k^2),  Q = V(n,0) prod_{k<=2p} (1 - z^2/y_k^2),  R = P - Q.
// p(n) = n ceil(sqrt(U(n,0)^2 + V(n,0)^2)) is astronomically large, so p = min(p(n), p_cap).
struct HadamardTruncation {
  long n = 0;
  long p = 0;
  bool capped = false;
  double p_full_log10 = 0;
  BigReal U0, V0;
  std::vector<BigReal> x_roots, y_roots;
};

HadamardTruncation hadamard_truncation(long n, long p_cap, const PrecisionContext& ctx);

struct HadamardValues {
  BigComplex P, Q, R;
};
// Uses the first K_terms zeros of each product; throws InsufficientRoots past 2p.
HadamardValues hadamard_R(const HadamardTruncation& t, long K_terms, const BigComplex& z, const PrecisionContext& ctx);

// max |R - W| / max(U(n,0), V(n,0)) over the sample against r^2 cosh(pi r) / n.
// Sample points must satisfy |z| < pi r.
BoundReport hadamard_convergence_check(const HadamardTruncation& t, const BigReal& r,
                                       const std::vector<BigComplex>& sample, const PrecisionContext& ctx);

// `count` points in the open disk |z| < radius, fixed by seed.
std::vector<BigComplex> disk_sample(double radius, int count, std::uint64_t seed);

// One R root per bracket (0, x_1), (y_{2k-1}, x_{2k}), (y_{2k}, x_{2k+1}); throws
// BracketFailure naming the first bracket whose end signs do not differ.
ZeroLedger r_root_pattern(const HadamardTruncation& t, const PrecisionContext& ctx);
ZeroLedger r_root_pattern(long n, long p_cap, const PrecisionContext& ctx);

struct DensityProbe {
  long count = 0;
  BigReal expected;  // T / pi
  bool pass() const;
};
// Sign changes of W(n, x) on (0, T) at step pi / steps_per_pi.
DensityProbe zero_density_probe(long n, const BigReal& T, const PrecisionContext& ctx, int steps_per_pi = 64);

}  // namespace xilab

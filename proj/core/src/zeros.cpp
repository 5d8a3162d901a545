#include "xilab/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "parallel.hpp"
#include "xilab/xi_family.hpp"

namespace xilab {

namespace {

constexpr long kScanBits = 128;

void require_odd_n(long n, const char* who) {
  if (n < 3 || n % 2 == 0) throw DomainError(std::string(who) + ": n must be odd and >= 3");
}

int which_half(ZeroOf which) { return which == ZeroOf::U ? 2 : 1; }

BigReal half_pi_multiple(long twice_k) { return BigReal::pi() * BigReal(twice_k) / BigReal(2L); }

}  // namespace

UVTable::UVTable(long n, const PrecisionContext& ctx) : n_(n), m_(7 * n * n * n), bits_(ctx.mantissa_bits() + 64) {
  require_odd_n(n, "UVTable");
  long top = 2 * m_ + 2;
  CoefficientTable ct = build_coefficients(n, top, PrecisionContext(bits_, ctx.exponent_bits()), false);
  PrecisionScope scope(bits_);
  BigReal nn(n);
  // e^{phi_J} = n^{J + 1/4}
  BigReal ep = sqrt(sqrt(nn)) * nn;
  for (auto& h : half_) {
    h.a.reserve(static_cast<size_t>(m_ + 1));
    h.b.reserve(static_cast<size_t>(m_ + 1));
    h.phi2.reserve(static_cast<size_t>(m_ + 1));
  }
  for (long J = 1; J <= top; ++J) {
    Half& h = half_[J % 2 == 0 ? 1 : 0];
    const BigReal& phi = ct.phi_at(J);
    const BigReal& c = ct.c_at(J);
    BigReal em = BigReal(1L) / ep;
    BigReal sh = (ep - em) / 2L;
    BigReal ch = (ep + em) / 2L;
    h.a.push_back(c * phi * sh);
    h.b.push_back(c * ch);
    h.phi2.push_back(phi * phi);
    ep *= nn;
  }
  for (auto& h : half_) {
    h.log2_a.resize(h.a.size());
    h.log2_b.resize(h.b.size());
    h.max_log2 = -INFINITY;
    for (size_t i = 0; i < h.a.size(); ++i) {
      h.log2_a[i] = h.a[i].log2_abs();
      h.log2_b[i] = h.b[i].log2_abs();
      h.max_log2 = std::max({h.max_log2, h.log2_a[i], h.log2_b[i]});
    }
  }
}

// Contiguous index range holding every term within 2^{-(bits+48)} of the largest.
// 1/(x^2+phi^2) moves term ratios by at most phi_max^2/phi_min^2 < 2^32 and there
// are fewer than 2^16 terms, which the 48 extra bits absorb.
std::pair<size_t, size_t> UVTable::window(const Half& h, long bits) const {
  double floor_log2 = h.max_log2 - static_cast<double>(bits) - 48.0;
  size_t lo = 0;
  size_t hi = h.a.size();
  while (lo < hi && std::max(h.log2_a[lo], h.log2_b[lo]) < floor_log2) ++lo;
  while (hi > lo && std::max(h.log2_a[hi - 1], h.log2_b[hi - 1]) < floor_log2) --hi;
  return {lo, hi};
}

UVTable::Sums UVTable::sums(int a, const BigReal& x, long bits, bool derivatives) const {
  if (a != 1 && a != 2) throw DomainError("UVTable: a must be 1 or 2");
  const Half& h = half_[a - 1];
  auto [lo, hi] = window(h, bits);
  PrecisionScope scope(bits + 16);
  BigReal x2 = x * x;
  Sums s{BigReal(0L), BigReal(0L), BigReal(0L), BigReal(0L)};
  BigReal sa2(0L);
  BigReal sb2(0L);
  for (size_t i = lo; i < hi; ++i) {
    BigReal r = BigReal(1L) / (x2 + h.phi2[i]);
    BigReal ar = h.a[i] * r;
    BigReal br = h.b[i] * r;
    s.u += ar;
    s.v += br;
    if (derivatives) {
      sa2 += ar * r;
      sb2 += br * r;
    }
  }
  if (derivatives) {
    BigReal m2x = BigReal(-2L) * x;
    s.du = m2x * sa2;
    s.dv = m2x * sb2;
  }
  return s;
}

void UVTable::sums(int a, const BigComplex& z, long bits, BigComplex& u, BigComplex& v) const {
  if (a != 1 && a != 2) throw DomainError("UVTable: a must be 1 or 2");
  const Half& h = half_[a - 1];
  auto [lo, hi] = window(h, bits);
  PrecisionScope scope(bits + 16);
  BigComplex z2 = z * z;
  u = BigComplex(BigReal(0L), BigReal(0L));
  v = BigComplex(BigReal(0L), BigReal(0L));
  for (size_t i = lo; i < hi; ++i) {
    BigComplex r = reciprocal(BigComplex(z2.re + h.phi2[i], z2.im));
    u += r * h.a[i];
    v += r * h.b[i];
  }
}

BigReal UVTable::eval(int a, const BigReal& x, long bits, BigReal* derivative) const {
  Sums s = sums(a, x, bits, derivative != nullptr);
  PrecisionScope scope(bits + 16);
  BigReal c = cos(x);
  BigReal sn = sin(x);
  BigReal val = BigReal(2L) * (s.u * c + x * s.v * sn);
  if (derivative) {
    *derivative = BigReal(2L) * (s.du * c - s.u * sn + s.v * sn + x * s.dv * sn + x * s.v * c);
  }
  return val;
}

BigComplex UVTable::eval(int a, const BigComplex& z, long bits) const {
  BigComplex u, v;
  sums(a, z, bits, u, v);
  PrecisionScope scope(bits + 16);
  return (u * cos(z) + z * v * sin(z)) * BigReal(2L);
}

std::shared_ptr<const UVTable> uv_table(long n, const PrecisionContext& ctx) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::shared_ptr<const UVTable>> cache;
  auto key = std::make_pair(n, ctx.mantissa_bits());
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const UVTable>(n, ctx);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, table).first->second;
}

UVW uvw(int a, long n, const BigReal& x, const PrecisionContext& ctx) {
  auto t = uv_table(n, ctx);
  UVTable::Sums s = t->sums(a, x, ctx.mantissa_bits());
  PrecisionScope scope(ctx.mantissa_bits());
  UVW r{s.u, s.v, s.u / s.v};
  r.u.round_to(ctx.mantissa_bits());
  r.v.round_to(ctx.mantissa_bits());
  return r;
}

BigComplex U_eval(long n, const BigComplex& z, const PrecisionContext& ctx) {
  return uv_table(n, ctx)->eval(2, z, ctx.mantissa_bits());
}

BigComplex V_eval(long n, const BigComplex& z, const PrecisionContext& ctx) {
  return uv_table(n, ctx)->eval(1, z, ctx.mantissa_bits());
}

BigComplex W_eval(long n, const BigComplex& z, const PrecisionContext& ctx) {
  auto t = uv_table(n, ctx);
  BigComplex u = t->eval(2, z, t->bits());
  BigComplex v = t->eval(1, z, t->bits());
  for (BigReal* p : {&u.re, &u.im, &v.re, &v.im}) p->round_to(t->bits());
  PrecisionScope scope(t->bits());
  return u - v;
}

namespace {

RootEnclosure solve_in_bracket(const UVTable& t, int a, BigReal lo, BigReal hi, long target_bits,
                               const BigReal& tol, long k) {
  int s_lo;
  int s_hi;
  {
    PrecisionScope scope(kScanBits);
    s_lo = t.eval(a, lo, kScanBits).sign();
    s_hi = t.eval(a, hi, kScanBits).sign();
  }
  if (s_lo == 0 || s_hi == 0 || s_lo == s_hi)
    throw BracketFailure(std::string(a == 2 ? "U" : "V") + ": no sign change across J_" + std::to_string(k), k);

  // Safeguarded Newton at scan precision.
  BigReal x;
  {
    PrecisionScope scope(kScanBits + 16);
    x = (lo + hi) / 2L;
    BigReal eps = abs(hi) * exp2i(-(kScanBits - 16));
    for (int it = 0; it < 400; ++it) {
      BigReal df;
      BigReal f = t.eval(a, x, kScanBits, &df);
      if (f.is_zero()) break;
      if (f.sign() == s_lo)
        lo = x;
      else
        hi = x;
      BigReal next = x - f / df;
      if (!(next > lo && next < hi) || df.is_zero()) next = (lo + hi) / 2L;
      BigReal dx = abs(next - x);
      x = next;
      if (dx < eps || hi - lo < eps) break;
    }
  }

  // Newton with doubling precision; each step roughly doubles the correct bits.
  long final_bits = target_bits + 32;
  long b = kScanBits;
  while (b < final_bits) {
    b = std::min(2 * b, final_bits);
    PrecisionScope scope(b + 16);
    BigReal df;
    BigReal f = t.eval(a, x, b, &df);
    if (!df.is_zero()) {
      BigReal next = x - f / df;
      if (next > lo && next < hi) x = next;
    }
  }

  PrecisionScope scope(final_bits + 16);
  BigReal half = tol / 2L;
  for (int attempt = 0; attempt < 4; ++attempt) {
    BigReal a_lo = x - half;
    BigReal a_hi = x + half;
    int sl = t.eval(a, a_lo, final_bits).sign();
    int sh = t.eval(a, a_hi, final_bits).sign();
    if (sl == s_lo && sh == s_hi) return {x, a_lo, a_hi};
    if (sl == sh) {
      if (sl == s_lo)
        lo = a_hi;
      else
        hi = a_lo;
    }
    BigReal df;
    BigReal f = t.eval(a, x, final_bits, &df);
    BigReal next = df.is_zero() ? x : x - f / df;
    x = (next > lo && next < hi) ? next : (lo + hi) / 2L;
  }
  // Newton did not settle: plain bisection at full precision.
  while (hi - lo > tol) {
    BigReal mid = (lo + hi) / 2L;
    int sm = t.eval(a, mid, final_bits).sign();
    if (sm == 0) return {mid, mid, mid};
    if (sm == s_lo)
      lo = mid;
    else
      hi = mid;
  }
  return {(lo + hi) / 2L, lo, hi};
}

}  // namespace

RootEnclosure bracket_root(ZeroOf which, long n, long k, const PrecisionContext& ctx) {
  require_odd_n(n, "bracket_zero");
  if (k < 1) throw DomainError("bracket_zero: k must be >= 1");
  auto t = uv_table(n, ctx);
  PrecisionScope scope(t->bits());
  BigReal lo = half_pi_multiple(2 * k - 1);
  BigReal hi = half_pi_multiple(2 * k);
  BigReal tol = ctx.rel_tol() * hi;
  RootEnclosure r = solve_in_bracket(*t, which_half(which), lo, hi, ctx.mantissa_bits(), tol, k);
  for (BigReal* v : {&r.x, &r.lo, &r.hi}) v->round_to(ctx.mantissa_bits() + 32);
  return r;
}

BigReal bracket_zero(ZeroOf which, long n, long k, const PrecisionContext& ctx) {
  RootEnclosure r = bracket_root(which, n, k, ctx);
  r.x.round_to(ctx.mantissa_bits());
  return r.x;
}

int sign_changes_in_J(ZeroOf which, long n, long k, int points, const PrecisionContext& ctx) {
  require_odd_n(n, "sign_changes_in_J");
  if (points < 1) throw DomainError("sign_changes_in_J: points must be positive");
  auto t = uv_table(n, ctx);
  PrecisionScope scope(kScanBits + 16);
  BigReal lo = half_pi_multiple(2 * k - 1);
  BigReal step = (half_pi_multiple(2 * k) - lo) / static_cast<long>(points);
  int changes = 0;
  int prev = 0;
  for (int i = 0; i <= points; ++i) {
    BigReal x = lo + step * static_cast<long>(i);
    int s = t->eval(which_half(which), x, kScanBits).sign();
    if (s != 0 && prev != 0 && s != prev) ++changes;
    if (s != 0) prev = s;
  }
  return changes;
}

BigReal tangent_residual(ZeroOf which, long n, const BigReal& x, const PrecisionContext& ctx) {
  UVW w = uvw(which_half(which), n, x, ctx);
  PrecisionScope scope(ctx.mantissa_bits() + 16);
  BigReal xt = x * tan(x);
  return abs(xt + w.w) / (BigReal(1L) + abs(xt));
}

bool ZeroLedger::premise_ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const ZeroEntry& e) { return e.premise_ok; });
}

bool ZeroLedger::brackets_exact() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ZeroEntry& e) { return e.u_sign_changes == 1 && e.v_sign_changes == 1; });
}

namespace {

bool zhou_premise(long n, const BigReal& x, const PrecisionContext& ctx) {
  UVW w1 = uvw(1, n, x, ctx);
  UVW w2 = uvw(2, n, x, ctx);
  return w1.w.sign() > 0 && w1.w < w2.w;
}

}  // namespace

ZeroLedger interlace_report(long n, long K, const PrecisionContext& ctx, int scan_points) {
  require_odd_n(n, "interlace_report");
  if (K < 0) throw DomainError("interlace_report: K must be >= 0");
  ZeroLedger ledger;
  ledger.n = n;
  if (K == 0) return ledger;
  uv_table(n, ctx);
  ledger.entries.resize(static_cast<size_t>(K));
  detail::parallel_for(static_cast<size_t>(K), [&](size_t i) {
    long k = static_cast<long>(i) + 1;
    ZeroEntry& e = ledger.entries[i];
    e.k = k;
    {
      PrecisionScope scope(ctx.mantissa_bits() + 32);
      e.j_lo = half_pi_multiple(2 * k - 1);
      e.j_hi = half_pi_multiple(2 * k);
    }
    e.x = bracket_root(ZeroOf::U, n, k, ctx);
    e.y = bracket_root(ZeroOf::V, n, k, ctx);
    e.u_sign_changes = sign_changes_in_J(ZeroOf::U, n, k, scan_points, ctx);
    e.v_sign_changes = sign_changes_in_J(ZeroOf::V, n, k, scan_points, ctx);
    e.order_resolved = e.x.hi < e.y.lo || e.y.hi < e.x.lo;
    e.premise_ok = zhou_premise(n, e.x.x, ctx) && zhou_premise(n, e.y.x, ctx);
  });
  for (const auto& e : ledger.entries) {
    bool ok = e.order_resolved && e.x.x < e.y.x;
    if (!ok && ledger.interlace_ok) ledger.first_violation = e.k;
    ledger.interlace_ok = ledger.interlace_ok && ok;
  }
  return ledger;
}

HadamardTruncation hadamard_truncation(long n, long p_cap, const PrecisionContext& ctx) {
  require_odd_n(n, "hadamard_truncation");
  if (p_cap < 1) throw DomainError("hadamard_truncation: p_cap must be >= 1");
  auto tab = uv_table(n, ctx);
  HadamardTruncation t;
  t.n = n;
  {
    // Same path and precision as W_eval, so that R(0) - W(0) vanishes exactly.
    PrecisionScope scope(tab->bits());
    t.U0 = tab->eval(2, BigComplex(0.0), tab->bits()).re;
    t.V0 = tab->eval(1, BigComplex(0.0), tab->bits()).re;
    t.U0.round_to(tab->bits());
    t.V0.round_to(tab->bits());
    BigReal norm = ceil(hypot(t.U0, t.V0));
    t.p_full_log10 = std::log10(static_cast<double>(n)) + norm.log10_abs();
    if (t.p_full_log10 < 15.0 && BigReal(n) * norm <= BigReal(p_cap)) {
      t.p = (BigReal(n) * norm).to_long();
    } else {
      t.p = p_cap;
      t.capped = true;
    }
  }
  size_t count = static_cast<size_t>(2 * t.p);
  t.x_roots.resize(count);
  t.y_roots.resize(count);
  detail::parallel_for(count, [&](size_t i) {
    long k = static_cast<long>(i) + 1;
    t.x_roots[i] = bracket_zero(ZeroOf::U, n, k, ctx);
    t.y_roots[i] = bracket_zero(ZeroOf::V, n, k, ctx);
  });
  return t;
}

HadamardValues hadamard_R(const HadamardTruncation& t, long K_terms, const BigComplex& z,
                          const PrecisionContext& ctx) {
  if (K_terms < 0 || static_cast<size_t>(K_terms) > t.x_roots.size() ||
      static_cast<size_t>(K_terms) > t.y_roots.size())
    throw InsufficientRoots("hadamard_R: requested " + std::to_string(K_terms) + " zeros, have " +
                            std::to_string(std::min(t.x_roots.size(), t.y_roots.size())));
  PrecisionScope scope(ctx.mantissa_bits() + 64);
  BigComplex z2 = z * z;
  HadamardValues h;
  h.P = BigComplex(t.U0, BigReal(0L));
  h.Q = BigComplex(t.V0, BigReal(0L));
  BigComplex one(BigReal(1L), BigReal(0L));
  for (long k = 0; k < K_terms; ++k) {
    const BigReal& xk = t.x_roots[static_cast<size_t>(k)];
    const BigReal& yk = t.y_roots[static_cast<size_t>(k)];
    h.P *= one - z2 / (xk * xk);
    h.Q *= one - z2 / (yk * yk);
  }
  h.R = h.P - h.Q;
  return h;
}

BoundReport hadamard_convergence_check(const HadamardTruncation& t, const BigReal& r,
                                       const std::vector<BigComplex>& sample, const PrecisionContext& ctx) {
  if (r.sign() < 0) throw DomainError("hadamard_convergence_check: r must be >= 0");
  PrecisionScope scope(ctx.mantissa_bits() + 32);
  BigReal radius = BigReal::pi() * r;
  for (const auto& z : sample)
    if (!(abs(z) < radius) && !(r.is_zero() && abs(z).is_zero()))
      throw DomainError("hadamard_convergence_check: sample point outside |z| < pi r");
  BoundReport rep;
  rep.bound_name = "r^2 cosh(pi r)/n >= sup |R - W| / max(U0, V0)";
  rep.add_param("n", std::to_string(t.n));
  rep.add_param("p", std::to_string(t.p));
  rep.add_param("capped", t.capped ? "true" : "false");
  rep.add_param("r", r.to_string(8));
  rep.add_param("points", std::to_string(sample.size()));
  BigReal core = r * r * cosh(BigReal::pi() * r);
  rep.bound_value = core / BigReal(t.n);
  rep.add_param("bound_at_p", (core / BigReal(t.p)).to_string(8));
  BigReal scale = max(t.U0, t.V0);
  BigReal worst(0L);
  // P - U and Q - V nearly cancel in R - W, so the components are reported too.
  BigReal worst_p(0L);
  BigReal worst_q(0L);
  long K = 2 * t.p;
  for (const auto& z : sample) {
    HadamardValues h = hadamard_R(t, K, z, ctx);
    BigComplex u = U_eval(t.n, z, ctx);
    BigComplex v = V_eval(t.n, z, ctx);
    BigComplex w = W_eval(t.n, z, ctx);
    worst = max(worst, abs(h.R - w) / scale);
    worst_p = max(worst_p, abs(h.P - u) / t.U0);
    worst_q = max(worst_q, abs(h.Q - v) / t.V0);
  }
  rep.empirical_value = worst;
  rep.add_param("sup_P_minus_U_over_U0", worst_p.to_string(8));
  rep.add_param("sup_Q_minus_V_over_V0", worst_q.to_string(8));
  return rep;
}

std::vector<BigComplex> disk_sample(double radius, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<BigComplex> out;
  for (int i = 0; i < count; ++i) {
    double rho = radius * std::sqrt(unit(rng)) * (1.0 - 1e-9);
    double th = 2.0 * M_PI * unit(rng);
    out.emplace_back(rho * std::cos(th), rho * std::sin(th));
  }
  return out;
}

namespace {

// R on the real axis; also returns max(|P|, |Q|) to judge cancellation.
BigReal r_real(const HadamardTruncation& t, const BigReal& x, BigReal* scale) {
  BigReal x2 = x * x;
  BigReal P = t.U0;
  BigReal Q = t.V0;
  size_t K = static_cast<size_t>(2 * t.p);
  for (size_t k = 0; k < K; ++k) {
    P *= BigReal(1L) - x2 / (t.x_roots[k] * t.x_roots[k]);
    Q *= BigReal(1L) - x2 / (t.y_roots[k] * t.y_roots[k]);
  }
  if (scale) *scale = max(abs(P), abs(Q));
  return P - Q;
}

int r_sign(const HadamardTruncation& t, const BigReal& x, long bits) {
  for (long b = bits; b <= 4 * bits; b *= 2) {
    PrecisionScope scope(b);
    BigReal scale;
    BigReal v = r_real(t, x, &scale);
    if (abs(v) > scale * exp2i(-(b - 24)) || (v.is_zero() && scale.is_zero())) return v.sign();
  }
  throw NonconvergenceError("r_root_pattern: sign of R unresolved; raise precision");
}

}  // namespace

ZeroLedger r_root_pattern(const HadamardTruncation& t, const PrecisionContext& ctx) {
  ZeroLedger ledger;
  ledger.n = t.n;
  long bits = ctx.mantissa_bits() + 32;
  PrecisionScope scope(bits);
  struct Bracket {
    long index;
    const char* name;
    BigReal lo, hi;
    int s_lo, s_hi;
  };
  std::vector<Bracket> brackets;
  auto x = [&](long k) { return t.x_roots[static_cast<size_t>(k - 1)]; };
  auto y = [&](long k) { return t.y_roots[static_cast<size_t>(k - 1)]; };
  brackets.push_back({1, "rootz1", BigReal(0L), x(1), 1, -1});
  for (long k = 1; k <= t.p; ++k) {
    brackets.push_back({2 * k, "rootz2k", y(2 * k - 1), x(2 * k), -1, 1});
    if (k <= t.p - 1) brackets.push_back({2 * k + 1, "rootz2kp1", y(2 * k), x(2 * k + 1), 1, -1});
  }
  for (long k = 1; k <= 2 * t.p; ++k) {
    bool ok = x(k) < y(k);
    if (!ok && ledger.interlace_ok) ledger.first_violation = k;
    ledger.interlace_ok = ledger.interlace_ok && ok;
  }
  for (const auto& b : brackets) {
    std::string where = std::string(b.name) + " bracket for z_" + std::to_string(b.index);
    if (!(b.lo < b.hi)) throw BracketFailure(where + " is empty (interlacing fails)", b.index);
    int sl = r_sign(t, b.lo, bits);
    int sh = r_sign(t, b.hi, bits);
    if (sl != b.s_lo || sh != b.s_hi)
      throw BracketFailure(where + ": expected signs " + std::to_string(b.s_lo) + "/" + std::to_string(b.s_hi) +
                               ", found " + std::to_string(sl) + "/" + std::to_string(sh),
                           b.index);
    BigReal lo = b.lo;
    BigReal hi = b.hi;
    for (int it = 0; it < 80; ++it) {
      BigReal mid = (lo + hi) / 2L;
      int sm = r_sign(t, mid, bits);
      if (sm == 0) {
        lo = hi = mid;
        break;
      }
      if (sm == sl)
        lo = mid;
      else
        hi = mid;
    }
    ledger.r_roots.push_back({b.index, b.name, b.lo, b.hi, (lo + hi) / 2L});
  }
  std::sort(ledger.r_roots.begin(), ledger.r_roots.end(),
            [](const RRoot& a, const RRoot& b) { return a.lo < b.lo; });
  for (size_t i = 1; i < ledger.r_roots.size(); ++i)
    if (!(ledger.r_roots[i - 1].hi < ledger.r_roots[i].lo)) ledger.brackets_disjoint = false;
  std::sort(ledger.r_roots.begin(), ledger.r_roots.end(),
            [](const RRoot& a, const RRoot& b) { return a.index < b.index; });
  return ledger;
}

ZeroLedger r_root_pattern(long n, long p_cap, const PrecisionContext& ctx) {
  return r_root_pattern(hadamard_truncation(n, p_cap, ctx), ctx);
}

bool DensityProbe::pass() const {
  return abs(BigReal(count) - expected) <= BigReal(1L);
}

DensityProbe zero_density_probe(long n, const BigReal& T, const PrecisionContext& ctx, int steps_per_pi) {
  require_odd_n(n, "zero_density_probe");
  if (steps_per_pi < 1) throw DomainError("zero_density_probe: steps_per_pi must be positive");
  auto t = uv_table(n, ctx);
  PrecisionScope scope(t->bits());
  // T = pi given in double precision lands a hair below pi.
  if (T < BigReal::pi() * (BigReal(1L) - exp2i(-40))) throw DomainError("zero_density_probe: T must be >= pi");
  DensityProbe out;
  out.expected = T / BigReal::pi();
  BigReal h = BigReal::pi() / static_cast<long>(steps_per_pi);
  int prev = 0;
  for (long i = 1;; ++i) {
    BigReal x = h * i;
    if (!(x < T)) break;
    BigReal u = t->eval(2, x, t->bits());
    BigReal v = t->eval(1, x, t->bits());
    BigReal w = u - v;
    if (!(abs(w) > max(abs(u), abs(v)) * exp2i(-(t->bits() - 32))))
      throw NonconvergenceError("zero_density_probe: W sign unresolved at this precision; use PrecisionContext::for_n");
    int s = w.sign();
    if (prev != 0 && s != prev) ++out.count;
    prev = s;
  }
  return out;
}

}  // namespace xilab

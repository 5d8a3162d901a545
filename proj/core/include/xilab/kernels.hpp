#pragma once

#include "xilab/bigfloat.hpp"
#include "xilab/precision.hpp"

namespace xilab {

enum class KernelVariant { exact, truncated, polya, polya2, debruijn, hejhal, shi, sinc_cosh };

struct KernelSpec {
  KernelVariant variant = KernelVariant::exact;
  long n = 0;    // truncated(n), sinc_cosh(n)
  long m = 0;    // hejhal(m), shi(m, a)
  double a = 0;  // shi(m, a)

  static KernelSpec exact() { return {KernelVariant::exact, 0, 0, 0}; }
  static KernelSpec truncated(long n) { return {KernelVariant::truncated, n, 0, 0}; }
  static KernelSpec polya() { return {KernelVariant::polya, 0, 0, 0}; }
  static KernelSpec polya2() { return {KernelVariant::polya2, 0, 0, 0}; }
  static KernelSpec debruijn() { return {KernelVariant::debruijn, 0, 0, 0}; }
  static KernelSpec hejhal(long m) { return {KernelVariant::hejhal, 0, m, 0}; }
  static KernelSpec shi(long m, double a) { return {KernelVariant::shi, 0, m, a}; }
  static KernelSpec sinc_cosh(long n) { return {KernelVariant::sinc_cosh, n, 0, 0}; }
};

// phi_k(t) = (4 (pi k^2)^2 e^{9t/2} - 6 pi k^2 e^{5t/2}) exp(-pi k^2 e^{2t}).
BigReal phi_term(long k, const BigReal& t, const PrecisionContext& ctx);

// Throws DomainError when the spec's parameters are out of range.
void validate(const KernelSpec& spec, const PrecisionContext& ctx);
BigReal kernel_eval(const KernelSpec& spec, const BigReal& t, const PrecisionContext& ctx);

// The Polya, de Bruijn, Hejhal and Shi kernels approximate Phi/2 (their tails
// carry 2 pi^2 e^{9t/2} where Phi carries 4 pi^2 e^{9t/2}). The Shi constants
// are therefore built from Phi(0)/2, which is what reproduces b = 5.059069.
BigReal classical_phi0(const PrecisionContext& ctx);
// b = e^{2 pi} Phi(0) / (8 pi^2) - 1.
BigReal shi_b(const PrecisionContext& ctx);
// Positive root of mu (1 - a^mu) = b.
BigReal shi_solve_mu(const BigReal& a, const PrecisionContext& ctx);

// psi_k(x) = (2 (pi k^2)^2 x^2 - 3 pi k^2 x) exp(-pi k^2 x).
BigReal psi_term(long k, const BigReal& x, const PrecisionContext& ctx);
// Psi_n(x) = (1/2) sum_{k<=n} (psi_k(x) + x^{-1/2} psi_k(1/x)), so that
// x^{1/4} Psi_n(x) = x^{-1/4} Psi_n(1/x) and Phi_n(t) = 2 e^{t/2} Psi_n(e^{2t}).
BigReal psi_n(const BigReal& x, long n, const PrecisionContext& ctx);
// Psi(x) = sum_{k>=1} psi_k(x), summed to rel_tol.
BigReal psi_full(const BigReal& x, const PrecisionContext& ctx);

// Least positive zero of Phi_n, for 2 <= n <= 12.
BigReal smallest_positive_kernel_zero(long n, const PrecisionContext& ctx);

class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// phi(x) = sum_{n>=1} (-1)^{n+1} exp(-pi n^2 x).
BigReal alt_phi(const BigReal& x, const PrecisionContext& ctx);
// varphi(x) = phi(x/4) - phi(x).
BigReal alt_varphi(const BigReal& x, const PrecisionContext& ctx);

}  // namespace xilab

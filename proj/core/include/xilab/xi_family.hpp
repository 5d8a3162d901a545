#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "xilab/bigfloat.hpp"
#include "xilab/precision.hpp"
#include "xilab/quadrature.hpp"
#include "xilab/report.hpp"

namespace xilab {

// The ladder (phi_{n,j}, c_{n,j}, S_{n,2j}) for j = 1..m_max.
// c_{n,j} = ln n (2j+1) pi^j / Gamma(j) S_{n,2j},  phi_{n,j} = (j + 1/4) ln n.
struct CoefficientTable {
  long n = 0;
  long m_max = 0;
  long bits = 0;
  BigReal omega;
  std::vector<BigReal> phi;
  std::vector<BigReal> c;
  std::vector<BigReal> log_c;
  std::vector<mpz_class> s2j;

  const BigReal& phi_at(long j) const { return phi[static_cast<size_t>(j - 1)]; }
  const BigReal& c_at(long j) const { return c[static_cast<size_t>(j - 1)]; }
  const BigReal& log_c_at(long j) const { return log_c[static_cast<size_t>(j - 1)]; }
};

// Throws ResourceCapError when m_max exceeds 10^7.
CoefficientTable build_coefficients(long n, long m_max, const PrecisionContext& ctx, bool keep_power_sums = true);

// log2 c_{n,j} in double arithmetic, for sizing guards and truncation points.
double log2_c_estimate(long n, long j);

// Bits lost to cancellation when summing sum_j (-1)^j c_{n,j} pair(w, phi_{n,j})
// for |Im w| <= im_w, estimated from the largest term.
double sinc_series_guard_bits(long n, long j_max, double im_w);

// Smallest J beyond the peak such that all terms j > J of the infinite sinc
// series fall below 2^{-bits} relative to an O(1) sum.
long sinc_series_terms(long n, long bits, double im_w);

// sinc(w - i phi) + sinc(w + i phi) = 2 (w sin w cosh phi + phi cos w sinh phi) / (w^2 + phi^2).
BigComplex sinc_pair(const BigComplex& w, const BigReal& phi);

enum class Family { xi, e, f, g, h, w, xi_alt };
enum class Representation { automatic, quadrature, gamma, sinc };

struct ApproximantId {
  Family family = Family::xi;
  long n = 0;
  long m = 0;
  long l = 0;
  double beta = 0.5;
  Representation rep = Representation::automatic;

  static ApproximantId xi() { return {Family::xi, 0, 0, 0, 0.5, Representation::quadrature}; }
  static ApproximantId e(long n, double beta, Representation rep = Representation::quadrature) {
    return {Family::e, n, 0, 0, beta, rep};
  }
  static ApproximantId f(long n, Representation rep = Representation::quadrature) {
    return {Family::f, n, 0, 0, 0.5, rep};
  }
  static ApproximantId g(long m, long n) { return {Family::g, n, m, 0, 0.5, Representation::sinc}; }
  static ApproximantId h(long l, long n) { return {Family::h, n, 0, l, 0.5, Representation::sinc}; }
  static ApproximantId w(long n) { return {Family::w, n, 0, 14, 0.5, Representation::sinc}; }
  static ApproximantId xi_alt() { return {Family::xi_alt, 0, 0, 0, 0.5, Representation::gamma}; }

  // Number of sinc terms for G, H and W: m, 2 + l n^3, 2 + 14 n^3.
  long sinc_terms() const;
  std::string label() const;
};

class RepresentationUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws DomainError for invalid parameters and RepresentationUnavailable for
// combinations that have no implemented representation.
void validate(const ApproximantId& id);

// An approximant bound to a precision. Quadrature rules and coefficient tables
// are built once and reused; evaluation is const and thread-safe.
class Approximant {
 public:
  Approximant(const ApproximantId& id, const PrecisionContext& ctx);
  ~Approximant();
  Approximant(Approximant&&) noexcept;
  Approximant& operator=(Approximant&&) noexcept;

  // Sizes quadrature rules and guards for |Re z| <= x_max, |Im z| <= y_max.
  // Called lazily with the first argument's extent otherwise.
  void prepare(double x_max, double y_max);

  BigComplex operator()(const BigComplex& z) const;

  const ApproximantId& id() const;
  const PrecisionContext& context() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

BigComplex approximant_eval(const ApproximantId& id, const BigComplex& z, const PrecisionContext& ctx);

// Xi(z) = 2 int_0^T Phi(t) cos(z t) dt with a tail cutoff below rel_tol. |Im z| <= 10.
BigComplex xi_reference(const BigComplex& z, const PrecisionContext& ctx);

// Max pairwise relative difference between quadrature-, gamma- and sinc-F on the grid.
// Bound: 10^3 rel_tol.
BoundReport representation_crosscheck(long n, const std::vector<BigComplex>& grid, const PrecisionContext& ctx);

// xi_a(s) = (2^s - 1) pi^{-s/2} Gamma(s/2) eta(s) through the upper incomplete gamma series
// of the theta kernel varphi.
BigComplex xi_alt(const BigComplex& s, const PrecisionContext& ctx);
// Same function from the defining product with eta by Borwein's method (Re s > 0).
BigComplex xi_alt_direct(const BigComplex& s, const PrecisionContext& ctx);
// Same function as the Mellin integral 2 int_0^inf varphi(e^{2t}) (e^{st} + e^{(1-s)t}) dt.
BigComplex xi_alt_mellin(const BigComplex& s, const PrecisionContext& ctx);

}  // namespace xilab

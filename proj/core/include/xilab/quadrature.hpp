#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "xilab/bigfloat.hpp"
#include "xilab/precision.hpp"

namespace xilab {

// Gauss-Legendre nodes and weights on [-1, 1] at a fixed mantissa width.
struct GaussLegendreRule {
  int order = 0;
  long bits = 0;
  std::vector<BigReal> nodes;
  std::vector<BigReal> weights;
};

// Cached per (order, bits); safe to call from several threads.
std::shared_ptr<const GaussLegendreRule> gauss_legendre(int order, long bits);

int default_gauss_order(const PrecisionContext& ctx);

using RealIntegrand = std::function<BigReal(const BigReal&)>;

// Adaptive Gauss-Legendre panels: a panel is accepted when the order-N and
// order-2N estimates agree to abs_tol; otherwise it is bisected.
BigReal integrate(const RealIntegrand& f, const BigReal& a, const BigReal& b, const PrecisionContext& ctx,
                  const BigReal& abs_tol, int max_depth = 40);

// A composite rule whose panels were refined for a probe integrand. Reused to
// integrate f(t) * g(t) for many cheap g (e.g. cos(z t) over a z grid).
class CompositeRule {
 public:
  CompositeRule() = default;
  // Refines panels of [a, b] until `probe` integrates to abs_tol.
  static CompositeRule refine(const std::function<BigComplex(const BigReal&)>& probe, const BigReal& a,
                              const BigReal& b, const PrecisionContext& ctx, const BigReal& abs_tol,
                              int max_depth = 40);

  const std::vector<BigReal>& nodes() const { return nodes_; }
  const std::vector<BigReal>& weights() const { return weights_; }
  size_t panel_count() const { return panels_; }

 private:
  std::vector<BigReal> nodes_;
  std::vector<BigReal> weights_;
  size_t panels_ = 0;
};

}  // namespace xilab

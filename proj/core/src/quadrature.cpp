#include "xilab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace xilab {

namespace {

std::shared_ptr<GaussLegendreRule> build_rule(int order, long bits) {
  auto rule = std::make_shared<GaussLegendreRule>();
  rule->order = order;
  rule->bits = bits;
  rule->nodes.resize(static_cast<size_t>(order));
  rule->weights.resize(static_cast<size_t>(order));
  PrecisionScope scope(bits + 32);
  BigReal tol = exp2i(-(bits + 16));
  int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    BigReal x(std::cos(M_PI * (i + 0.75) / (order + 0.5)));
    BigReal dp;
    for (int it = 0; it < 100; ++it) {
      BigReal p0(1L);
      BigReal p1 = x;
      for (int k = 2; k <= order; ++k) {
        BigReal p2 = ((2L * k - 1) * x * p1 - BigReal(k - 1) * p0) / static_cast<long>(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      // P_n' = n (x P_n - P_{n-1}) / (x^2 - 1)
      dp = BigReal(static_cast<long>(order)) * (x * p1 - p0) / (x * x - BigReal(1L));
      BigReal dx = p1 / dp;
      x -= dx;
      if (abs(dx) < tol) break;
    }
    {
      BigReal p0(1L);
      BigReal p1 = x;
      for (int k = 2; k <= order; ++k) {
        BigReal p2 = ((2L * k - 1) * x * p1 - BigReal(k - 1) * p0) / static_cast<long>(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = BigReal(static_cast<long>(order)) * (x * p1 - p0) / (x * x - BigReal(1L));
    }
    BigReal w = BigReal(2L) / ((BigReal(1L) - x * x) * dp * dp);
    size_t lo = static_cast<size_t>(i);
    size_t hi = static_cast<size_t>(order - 1 - i);
    rule->nodes[lo] = -x;
    rule->nodes[hi] = x;
    rule->weights[lo] = w;
    rule->weights[hi] = w;
  }
  if (order % 2 == 1) rule->nodes[static_cast<size_t>(order / 2)] = BigReal(0L);
  for (auto& v : rule->nodes) v.round_to(bits);
  for (auto& v : rule->weights) v.round_to(bits);
  return rule;
}

template <class T, class F>
T panel_sum(const F& f, const BigReal& a, const BigReal& b, const GaussLegendreRule& rule) {
  BigReal half = (b - a) / 2L;
  BigReal mid = (a + b) / 2L;
  T acc{};
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    BigReal t = mid + half * rule.nodes[i];
    acc += f(t) * rule.weights[i];
  }
  return acc * half;
}

BigReal magnitude(const BigComplex& v) { return abs(v); }

}  // namespace

std::shared_ptr<const GaussLegendreRule> gauss_legendre(int order, long bits) {
  static std::mutex mu;
  static std::map<std::pair<int, long>, std::shared_ptr<GaussLegendreRule>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({order, bits});
    if (it != cache.end()) return it->second;
  }
  auto rule = build_rule(order, bits);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(order, bits), rule);
  return rule;
}

int default_gauss_order(const PrecisionContext& ctx) {
  long n = ctx.mantissa_bits() / 8;
  if (n < 20) n = 20;
  if (n > 160) n = 160;
  return static_cast<int>(n);
}

BigReal integrate(const RealIntegrand& f, const BigReal& a, const BigReal& b, const PrecisionContext& ctx,
                  const BigReal& abs_tol, int max_depth) {
  long bits = ctx.mantissa_bits() + 32;
  PrecisionScope scope(bits);
  int order = default_gauss_order(ctx);
  auto lo = gauss_legendre(order, bits);
  auto hi = gauss_legendre(2 * order, bits);
  struct Panel {
    BigReal a, b;
    int depth;
  };
  std::vector<Panel> stack{{a, b, 0}};
  BigReal total(0L);
  BigReal width = abs(b - a);
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    BigReal i1 = panel_sum<BigReal>(f, p.a, p.b, *lo);
    BigReal i2 = panel_sum<BigReal>(f, p.a, p.b, *hi);
    BigReal share = abs_tol * abs(p.b - p.a) / width;
    if (abs(i1 - i2) <= share || p.depth >= max_depth) {
      total += i2;
      continue;
    }
    BigReal m = (p.a + p.b) / 2L;
    stack.push_back({m, p.b, p.depth + 1});
    stack.push_back({p.a, m, p.depth + 1});
  }
  total.round_to(ctx.mantissa_bits());
  return total;
}

CompositeRule CompositeRule::refine(const std::function<BigComplex(const BigReal&)>& probe, const BigReal& a,
                                    const BigReal& b, const PrecisionContext& ctx, const BigReal& abs_tol,
                                    int max_depth) {
  long bits = ctx.mantissa_bits() + 32;
  PrecisionScope scope(bits);
  int order = default_gauss_order(ctx);
  auto lo = gauss_legendre(order, bits);
  auto hi = gauss_legendre(2 * order, bits);
  struct Panel {
    BigReal a, b;
    int depth;
  };
  std::vector<Panel> stack{{a, b, 0}};
  std::vector<std::pair<BigReal, BigReal>> accepted;
  BigReal width = abs(b - a);
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    BigComplex i1 = panel_sum<BigComplex>(probe, p.a, p.b, *lo);
    BigComplex i2 = panel_sum<BigComplex>(probe, p.a, p.b, *hi);
    BigReal share = abs_tol * abs(p.b - p.a) / width;
    if (magnitude(i1 - i2) <= share || p.depth >= max_depth) {
      accepted.emplace_back(p.a, p.b);
      continue;
    }
    BigReal m = (p.a + p.b) / 2L;
    stack.push_back({m, p.b, p.depth + 1});
    stack.push_back({p.a, m, p.depth + 1});
  }
  CompositeRule rule;
  rule.panels_ = accepted.size();
  for (const auto& [pa, pb] : accepted) {
    BigReal half = (pb - pa) / 2L;
    BigReal mid = (pa + pb) / 2L;
    for (size_t i = 0; i < hi->nodes.size(); ++i) {
      rule.nodes_.push_back(mid + half * hi->nodes[i]);
      rule.weights_.push_back(half * hi->weights[i]);
    }
  }
  return rule;
}

}  // namespace xilab

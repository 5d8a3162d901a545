#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "xilab/bigfloat.hpp"
#include "xilab/precision.hpp"

namespace xilab::detail {

constexpr double kLog2E = 1.4426950408889634;

inline double log2_mag(const BigComplex& z) {
  double a = z.re.log2_abs();
  double b = z.im.log2_abs();
  return std::max(a, b);
}

// Running state for a series whose terms are produced by the caller. Tracks the
// largest term so the caller can detect cancellation and retry with more bits.
struct SeriesState {
  BigComplex sum;
  double max_term_log2 = -std::numeric_limits<double>::infinity();
  int small_run = 0;

  // Returns true once the termination rule is met.
  bool add(const BigComplex& term, long k, double min_index, double tol_log2) {
    sum += term;
    double tl = log2_mag(term);
    max_term_log2 = std::max(max_term_log2, tl);
    double sl = log2_mag(sum);
    if (tl < sl + tol_log2 || (term.re.is_zero() && term.im.is_zero())) {
      ++small_run;
    } else {
      small_run = 0;
    }
    return small_run >= 8 && static_cast<double>(k) >= min_index;
  }

  double cancellation_bits() const {
    double sl = log2_mag(sum);
    if (!std::isfinite(sl)) return 0.0;
    return std::max(0.0, max_term_log2 - sl);
  }
};

// Runs `body(guard_bits)` and repeats with more guard bits while the measured
// cancellation eats into the guard.
template <class Body>
BigComplex with_cancellation_guard(const PrecisionContext& ctx, double initial_guard, Body&& body) {
  long guard = 32 + static_cast<long>(std::ceil(std::max(0.0, initial_guard)));
  for (int attempt = 0; attempt < 6; ++attempt) {
    PrecisionScope scope(ctx.mantissa_bits() + guard);
    SeriesState st = body();
    double lost = st.cancellation_bits();
    if (lost + 16.0 < static_cast<double>(guard)) {
      PrecisionScope out(ctx.mantissa_bits());
      BigComplex r = st.sum;
      r.re.round_to(ctx.mantissa_bits());
      r.im.round_to(ctx.mantissa_bits());
      return r;
    }
    guard = static_cast<long>(std::ceil(lost)) + 48;
  }
  throw NonconvergenceError("series cancellation exceeded guard escalation");
}


}  // namespace xilab::detail

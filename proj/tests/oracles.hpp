#pragma once

#include <gmpxx.h>

#include <functional>

#include "xilab/bigfloat.hpp"
#include "xilab/precision.hpp"
#include "xilab/quadrature.hpp"

namespace oracle {

using xilab::BigComplex;
using xilab::BigReal;

inline double rel_err(const BigReal& a, const BigReal& b) {
  BigReal d = abs(a - b);
  BigReal s = xilab::max(abs(a), abs(b));
  if (s.is_zero()) return 0.0;
  return (d / s).to_double();
}

inline double rel_err(const BigComplex& a, const BigComplex& b) {
  BigReal d = abs(a - b);
  BigReal s = xilab::max(abs(a), abs(b));
  if (s.is_zero()) return 0.0;
  return (d / s).to_double();
}

// Plain composite Simpson rule, independent of the library's Gauss-Legendre code.
inline BigReal simpson(const std::function<BigReal(const BigReal&)>& f, const BigReal& a, const BigReal& b,
                       long panels) {
  BigReal h = (b - a) / (2 * panels);
  BigReal sum = f(a) + f(b);
  for (long i = 1; i < 2 * panels; ++i) {
    BigReal v = f(a + h * BigReal(i));
    sum += (i % 2 == 1) ? v * 4L : v * 2L;
  }
  return sum * h / 3L;
}

// Richardson-extrapolated Simpson: (16 S_{2N} - S_N) / 15.
inline BigReal simpson_rich(const std::function<BigReal(const BigReal&)>& f, const BigReal& a, const BigReal& b,
                            long panels) {
  BigReal s1 = simpson(f, a, b, panels);
  BigReal s2 = simpson(f, a, b, 2 * panels);
  return (s2 * 16L - s1) / 15L;
}

// Exact partial sum of pFq with rational parameters and argument.
inline mpq_class pfq_rational(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b, const mpq_class& z,
                              int terms) {
  mpq_class term = 1;
  mpq_class sum = 1;
  for (int k = 0; k < terms; ++k) {
    for (const auto& ai : a) term *= ai + k;
    for (const auto& bi : b) term /= bi + k;
    term *= z;
    term /= k + 1;
    sum += term;
  }
  return sum;
}

}  // namespace oracle

#pragma once

#include <stdexcept>
#include <string>

#include "xilab/bigfloat.hpp"

namespace xilab {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonconvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Working mantissa width, exponent range and tolerance for one computation.
// Immutable once built.
class PrecisionContext {
 public:
  explicit PrecisionContext(long mantissa_bits = 128, int exponent_bits = 31);
  PrecisionContext(long mantissa_bits, int exponent_bits, long rel_tol_log2);

  // max(128, ceil(1.5*pi*n^3/ln 2) + 256): magnitudes reach exp(pi n^3).
  static PrecisionContext for_n(long n);
  static long auto_bits(long n);

  long mantissa_bits() const { return mantissa_bits_; }
  int exponent_bits() const { return exponent_bits_; }
  // rel_tol = 2^rel_tol_log2.
  long rel_tol_log2() const { return rel_tol_log2_; }
  BigReal rel_tol() const;
  // Same context with extra mantissa bits (tolerance is kept).
  PrecisionContext widened(long extra_bits) const;
  PrecisionContext doubled() const;

 private:
  long mantissa_bits_;
  int exponent_bits_;
  long rel_tol_log2_;
};

}  // namespace xilab

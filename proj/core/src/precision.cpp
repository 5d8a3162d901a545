#include "xilab/precision.hpp"

#include <cmath>

namespace xilab {

PrecisionContext::PrecisionContext(long mantissa_bits, int exponent_bits)
    : PrecisionContext(mantissa_bits, exponent_bits, -(mantissa_bits - 16)) {}

PrecisionContext::PrecisionContext(long mantissa_bits, int exponent_bits, long rel_tol_log2)
    : mantissa_bits_(mantissa_bits), exponent_bits_(exponent_bits), rel_tol_log2_(rel_tol_log2) {
  if (mantissa_bits < 64) throw DomainError("mantissa_bits must be >= 64");
  if (exponent_bits < 31) throw DomainError("exponent_bits must be >= 31");
  if (exponent_bits > 62) throw DomainError("exponent_bits must be <= 62");
  if (rel_tol_log2 >= 0) throw DomainError("rel_tol must be < 1");
}

long PrecisionContext::auto_bits(long n) {
  double nn = static_cast<double>(n);
  long bits = static_cast<long>(std::ceil(1.5 * M_PI * nn * nn * nn / std::log(2.0))) + 256;
  return bits < 128 ? 128 : bits;
}

PrecisionContext PrecisionContext::for_n(long n) { return PrecisionContext(auto_bits(n)); }

BigReal PrecisionContext::rel_tol() const {
  PrecisionScope scope(mantissa_bits_);
  return exp2i(rel_tol_log2_);
}

PrecisionContext PrecisionContext::widened(long extra_bits) const {
  return PrecisionContext(mantissa_bits_ + extra_bits, exponent_bits_, rel_tol_log2_);
}

PrecisionContext PrecisionContext::doubled() const {
  return PrecisionContext(2 * mantissa_bits_, exponent_bits_);
}

}  // namespace xilab

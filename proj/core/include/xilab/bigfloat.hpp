#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <string>

namespace xilab {

// Bits used for values created by arithmetic on the current thread.
long working_precision();

class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

class BigReal {
 public:
  BigReal();
  BigReal(int v);
  BigReal(long v);
  BigReal(double v);
  explicit BigReal(const mpz_class& v);
  explicit BigReal(const mpq_class& v);
  explicit BigReal(const std::string& decimal);

  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  static BigReal with_precision(long bits);
  static BigReal pi();
  static BigReal ln2();
  static BigReal inf(int sign = 1);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  // Rounds in place to the given mantissa width.
  void round_to(long bits);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  std::string to_string(int digits) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  // log2|x| as a double; -inf for zero. Safe far outside double range.
  double log2_abs() const;
  double log10_abs() const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator*=(long o);
  BigReal& operator/=(long o);

 private:
  explicit BigReal(long bits, int);
  mpfr_t v_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, long b);
BigReal operator*(long a, const BigReal& b);
BigReal operator/(const BigReal& a, long b);

int compare(const BigReal& a, const BigReal& b);
inline bool operator<(const BigReal& a, const BigReal& b) { return compare(a, b) < 0; }
inline bool operator>(const BigReal& a, const BigReal& b) { return compare(a, b) > 0; }
inline bool operator<=(const BigReal& a, const BigReal& b) { return compare(a, b) <= 0; }
inline bool operator>=(const BigReal& a, const BigReal& b) { return compare(a, b) >= 0; }
inline bool operator==(const BigReal& a, const BigReal& b) { return compare(a, b) == 0; }
inline bool operator!=(const BigReal& a, const BigReal& b) { return compare(a, b) != 0; }

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal expm1(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal log2(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal tan(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal floor(const BigReal& x);
BigReal ceil(const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
BigReal min(const BigReal& a, const BigReal& b);
BigReal max(const BigReal& a, const BigReal& b);
// 2^e exactly.
BigReal exp2i(long e);

struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() = default;
  BigComplex(const BigReal& r) : re(r), im(0) {}
  BigComplex(const BigReal& r, const BigReal& i) : re(r), im(i) {}
  BigComplex(double r) : re(r), im(0) {}
  BigComplex(double r, double i) : re(r), im(i) {}

  BigComplex operator-() const { return {-re, -im}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigReal& b);
BigComplex operator*(const BigReal& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigReal& b);

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal norm(const BigComplex& z);
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);
BigComplex sin(const BigComplex& z);
BigComplex cos(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, const BigComplex& w);
// x^w for real x > 0.
BigComplex pow(const BigReal& x, const BigComplex& w);
BigComplex reciprocal(const BigComplex& z);
// sin(w)/w with the removable point handled by its Taylor series.
BigComplex sinc(const BigComplex& w);

}  // namespace xilab

#include "xilab/bigfloat.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace xilab {

namespace {

thread_local long g_precision = 128;

struct ExponentRange {
  ExponentRange() {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
  }
};
const ExponentRange g_exponent_range;

}  // namespace

long working_precision() { return g_precision; }

PrecisionScope::PrecisionScope(long bits) : saved_(g_precision) {
  g_precision = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
}

PrecisionScope::~PrecisionScope() { g_precision = saved_; }

BigReal::BigReal(long bits, int) { mpfr_init2(v_, bits); }

BigReal::BigReal() {
  mpfr_init2(v_, g_precision);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(int v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigReal::BigReal(long v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigReal::BigReal(double v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const std::string& decimal) {
  mpfr_init2(v_, g_precision);
  mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::with_precision(long bits) {
  BigReal r(bits, 0);
  mpfr_set_zero(r.v_, 1);
  return r;
}

BigReal BigReal::pi() {
  BigReal r;
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::ln2() {
  BigReal r;
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::inf(int sign) {
  BigReal r;
  mpfr_set_inf(r.v_, sign);
  return r;
}

void BigReal::round_to(long bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

std::string BigReal::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

double BigReal::log2_abs() const {
  if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
  if (!mpfr_number_p(v_)) return std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

double BigReal::log10_abs() const { return log2_abs() * std::log10(2.0); }

BigReal BigReal::operator-() const {
  BigReal r;
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

#define XILAB_BINARY(op, fn)                              \
  BigReal operator op(const BigReal& a, const BigReal& b) { \
    BigReal r;                                            \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);             \
    return r;                                             \
  }
XILAB_BINARY(+, mpfr_add)
XILAB_BINARY(-, mpfr_sub)
XILAB_BINARY(*, mpfr_mul)
XILAB_BINARY(/, mpfr_div)
#undef XILAB_BINARY

BigReal operator*(const BigReal& a, long b) {
  BigReal r;
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

BigReal operator*(long a, const BigReal& b) { return b * a; }

BigReal operator/(const BigReal& a, long b) {
  BigReal r;
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

int compare(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.raw(), b.raw()); }

#define XILAB_UNARY(name, fn)          \
  BigReal name(const BigReal& x) {     \
    BigReal r;                         \
    fn(r.raw(), x.raw(), MPFR_RNDN);   \
    return r;                          \
  }
XILAB_UNARY(abs, mpfr_abs)
XILAB_UNARY(sqrt, mpfr_sqrt)
XILAB_UNARY(exp, mpfr_exp)
XILAB_UNARY(expm1, mpfr_expm1)
XILAB_UNARY(log, mpfr_log)
XILAB_UNARY(log1p, mpfr_log1p)
XILAB_UNARY(log2, mpfr_log2)
XILAB_UNARY(sin, mpfr_sin)
XILAB_UNARY(cos, mpfr_cos)
XILAB_UNARY(tan, mpfr_tan)
XILAB_UNARY(sinh, mpfr_sinh)
XILAB_UNARY(cosh, mpfr_cosh)
#undef XILAB_UNARY

BigReal floor(const BigReal& x) {
  BigReal r;
  mpfr_floor(r.raw(), x.raw());
  return r;
}

BigReal ceil(const BigReal& x) {
  BigReal r;
  mpfr_ceil(r.raw(), x.raw());
  return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r;
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r;
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, long n) {
  BigReal r;
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r;
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigReal min(const BigReal& a, const BigReal& b) { return a < b ? a : b; }
BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal exp2i(long e) {
  BigReal r(1L);
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  *this = *this * o;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  *this = *this / o;
  return *this;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  // Smith's scaling keeps the intermediate products in range.
  if (b.im.is_zero()) return {a.re / b.re, a.im / b.re};
  if (abs(b.re) >= abs(b.im)) {
    BigReal r = b.im / b.re;
    BigReal d = b.re + b.im * r;
    return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
  }
  BigReal r = b.re / b.im;
  BigReal d = b.re * r + b.im;
  return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

BigComplex operator*(const BigComplex& a, const BigReal& b) { return {a.re * b, a.im * b}; }
BigComplex operator*(const BigReal& a, const BigComplex& b) { return {a * b.re, a * b.im}; }
BigComplex operator/(const BigComplex& a, const BigReal& b) { return {a.re / b, a.im / b}; }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
BigReal abs(const BigComplex& z) { return hypot(z.re, z.im); }
BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex exp(const BigComplex& z) {
  BigReal m = exp(z.re);
  if (z.im.is_zero()) return {m, BigReal(0)};
  BigReal s, c;
  mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
  return {m * c, m * s};
}

BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

BigComplex sin(const BigComplex& z) {
  if (z.im.is_zero()) return {sin(z.re), BigReal(0)};
  BigReal s, c, sh, ch;
  mpfr_sin_cos(s.raw(), c.raw(), z.re.raw(), MPFR_RNDN);
  mpfr_sinh_cosh(sh.raw(), ch.raw(), z.im.raw(), MPFR_RNDN);
  return {s * ch, c * sh};
}

BigComplex cos(const BigComplex& z) {
  if (z.im.is_zero()) return {cos(z.re), BigReal(0)};
  BigReal s, c, sh, ch;
  mpfr_sin_cos(s.raw(), c.raw(), z.re.raw(), MPFR_RNDN);
  mpfr_sinh_cosh(sh.raw(), ch.raw(), z.im.raw(), MPFR_RNDN);
  return {c * ch, -(s * sh)};
}

BigComplex sqrt(const BigComplex& z) {
  if (z.re.is_zero() && z.im.is_zero()) return z;
  BigReal r = abs(z);
  BigReal t = sqrt((r + abs(z.re)) / 2L);
  if (z.re.sign() >= 0) return {t, z.im / (t * 2L)};
  BigReal im = z.im.sign() >= 0 ? t : -t;
  return {abs(z.im) / (t * 2L), im};
}

BigComplex pow(const BigComplex& z, const BigComplex& w) { return exp(w * log(z)); }

BigComplex pow(const BigReal& x, const BigComplex& w) { return exp(w * log(x)); }

BigComplex reciprocal(const BigComplex& z) { return BigComplex(BigReal(1L)) / z; }

BigComplex sinc(const BigComplex& w) {
  long p = working_precision();
  BigReal mag = abs(w);
  if (mag.is_zero()) return {BigReal(1L), BigReal(0)};
  if (mag.log2_abs() < -static_cast<double>(p) / 2.0) {
    // 1 - w^2/6 + w^4/120 suffices below 2^(-p/2).
    BigComplex w2 = w * w;
    BigComplex r = BigComplex(BigReal(1L)) - w2 / BigReal(6L) + (w2 * w2) / BigReal(120L);
    return r;
  }
  return sin(w) / w;
}

}  // namespace xilab

#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "xilab/bigfloat.hpp"
#include "xilab/precision.hpp"

namespace xilab {

BigReal erfc(const BigReal& x, const PrecisionContext& ctx);

// gamma_hat(s, x) = sum_j (-x)^j / (j! (j+s)) = gamma(s, x) / x^s, entire in x.
// term_cap <= 0 selects the default cap 10*(|x|+|s|+64) + 2*bits.
BigComplex gamma_lower_normalized(const BigComplex& s, const BigReal& x, const PrecisionContext& ctx,
                                  long term_cap = 0);
// d/ds gamma_hat(s, x) = -sum_j (-x)^j / (j! (j+s)^2).
BigComplex gamma_lower_normalized_ds(const BigComplex& s, const BigReal& x, const PrecisionContext& ctx,
                                     long term_cap = 0);

// Upper incomplete gamma Gamma(s, x) for x > 0 and any complex s. Uses the
// Legendre continued fraction at x >= A = 2|s| + 40 and
// Gamma(s, x) = Gamma(s, A) + int_x^A t^{s-1} e^{-t} dt below it.
BigComplex gamma_upper(const BigComplex& s, const BigReal& x, const PrecisionContext& ctx);
// Gamma(s) = Gamma(s, A) + A^s gamma_hat(s, A); s not a non-positive integer.
BigComplex gamma_complex(const BigComplex& s, const PrecisionContext& ctx);

// Generalized hypergeometric series pFq(a; b; z).
BigComplex hyp_pfq(const std::vector<BigComplex>& a, const std::vector<BigComplex>& b, const BigComplex& z,
                   const PrecisionContext& ctx, long term_cap = 0);
BigComplex kummer_1f1(const BigComplex& a, const BigComplex& b, const BigComplex& z, const PrecisionContext& ctx);
BigComplex hyp_2f2(const BigComplex& a1, const BigComplex& a2, const BigComplex& b1, const BigComplex& b2,
                   const BigComplex& z, const PrecisionContext& ctx);

BigReal lambert_w0(const BigReal& x, const PrecisionContext& ctx);
BigReal lambert_w_minus1(const BigReal& x, const PrecisionContext& ctx);

// S_{n,j} = sum_{k=1}^n k^j, exact.
mpz_class power_sum(long n, long j);

BigReal gamma_ln(const BigReal& x, const PrecisionContext& ctx);

// (actual - main_term) / envelope, with an optional separate envelope for the
// imaginary component when the two parts are bounded separately.
struct RemainderWitness {
  BigComplex main_term;
  BigComplex actual;
  BigReal envelope;
  std::optional<BigReal> envelope_im;
  BigComplex epsilon;

  bool split() const { return envelope_im.has_value(); }
  bool pass() const;
  // max(|Re eps|, |Im eps|) when split, |eps| otherwise.
  BigReal magnitude() const;
};

RemainderWitness make_witness(const BigComplex& main_term, const BigComplex& actual, const BigReal& envelope);
RemainderWitness make_split_witness(const BigComplex& main_term, const BigComplex& actual, const BigReal& envelope_re,
                                    const BigReal& envelope_im);

}  // namespace xilab

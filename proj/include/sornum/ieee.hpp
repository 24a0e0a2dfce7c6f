#pragma once

#include "sornum/rational.hpp"

namespace sornum {

// Parametric binary float format: n_m mantissa bits, n_e exponent bits.
struct FloatFormat {
    unsigned n_m;
    unsigned n_e;
};

inline constexpr FloatFormat kBinary16{10, 5};
inline constexpr FloatFormat kBinary32{23, 8};
inline constexpr FloatFormat kBinary64{52, 11};

struct FormatMetrics {
    long e_min;  // smallest normal exponent
    long e_max;  // largest normal exponent
    long bias;
    Rational min_subnormal;
    Rational min_normal;
    Rational max_normal;
    mpz_class count_subnormal;  // |M0|, zeros included
    mpz_class count_normal;     // |M1|
    mpz_class count_nan;
    mpz_class count_total;  // |M|
};

FormatMetrics format_metrics(const FloatFormat& f);

// Nearest representable with ties to even mantissa; magnitudes at or beyond
// 2^e_max * (2 - 2^-(n_m+1)) overflow to infinity of the input's sign.
struct RoundResult {
    bool overflow = false;
    int sign = 0;  // meaningful on overflow
    Rational value;
};
RoundResult round_nearest_even(const FloatFormat& f, const Rational& x);

// Directed roundings; |x| must stay within the finite range
// (throws std::domain_error past max_normal in the rounding direction).
Rational round_up(const FloatFormat& f, const Rational& x);
Rational round_down(const FloatFormat& f, const Rational& x);

}  // namespace sornum

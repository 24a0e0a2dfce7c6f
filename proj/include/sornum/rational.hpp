#pragma once

#include <gmpxx.h>
#include <string>

namespace sornum {

// Exact rational numbers back every finite value in the library. mpq_class
// keeps fractions in lowest terms with a positive denominator, which is all
// the invariants we need.
using Rational = mpq_class;

// 10^k for any integer k (negative k gives 1/10^|k|).
Rational pow10q(long k);

// Parses a decimal literal ("-12", "1.7", "2.5e-3") exactly.
// Throws std::invalid_argument on malformed input.
Rational rational_from_decimal(const std::string& s);

// The exact value of a finite double. Throws on NaN/Inf.
Rational rational_from_double(double d);

// Exact textual form: a plain decimal when the denominator is 2^a*5^b,
// otherwise the fraction "p/q". Round-trips through rational_from_*.
std::string decimal_string(const Rational& q);

// log10 of a positive rational, good to well below 1e-9 even for values
// with thousands of digits.
double log10_approx(const Rational& q);

// Scientific notation with the given number of significant digits,
// e.g. sci_string(5000, 3) == "5.00e+03". Works far outside double range.
std::string sci_string(const Rational& q, int sig_digits);

}  // namespace sornum

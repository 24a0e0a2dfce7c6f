#include "sornum/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace sornum {

Rational pow10q(long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    if (k >= 0) return Rational(p);
    Rational r(1, p);
    r.canonicalize();
    return r;
}

Rational rational_from_decimal(const std::string& s) {
    const char* p = s.c_str();
    const char* end = p + s.size();
    auto fail = [&]() -> void {
        throw std::invalid_argument("not a decimal literal: '" + s + "'");
    };
    if (p == end) fail();

    bool negative = false;
    if (*p == '+' || *p == '-') {
        negative = (*p == '-');
        ++p;
    }
    std::string digits;
    long frac_len = 0;
    while (p != end && std::isdigit(static_cast<unsigned char>(*p))) digits += *p++;
    if (p != end && *p == '.') {
        ++p;
        while (p != end && std::isdigit(static_cast<unsigned char>(*p))) {
            digits += *p++;
            ++frac_len;
        }
    }
    if (digits.empty()) fail();

    long expo = 0;
    if (p != end && (*p == 'e' || *p == 'E')) {
        ++p;
        bool eneg = false;
        if (p != end && (*p == '+' || *p == '-')) {
            eneg = (*p == '-');
            ++p;
        }
        if (p == end) fail();
        long v = 0;
        while (p != end && std::isdigit(static_cast<unsigned char>(*p))) {
            v = v * 10 + (*p - '0');
            if (v > 1000000) fail();
            ++p;
        }
        expo = eneg ? -v : v;
    }
    if (p != end) fail();

    mpz_class mant(digits, 10);
    Rational r(mant);
    r *= pow10q(expo - frac_len);
    if (negative) r = -r;
    r.canonicalize();
    return r;
}

Rational rational_from_double(double d) {
    if (!std::isfinite(d)) throw std::invalid_argument("non-finite double");
    Rational r;
    mpq_set_d(r.get_mpq_t(), d);
    return r;
}

std::string decimal_string(const Rational& q) {
    if (q == 0) return "0";
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    bool negative = num < 0;
    if (negative) num = -num;

    unsigned long twos = 0, fives = 0;
    mpz_class d = den;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
        d /= 5;
        ++fives;
    }
    if (d != 1) {
        // no finite decimal expansion; exact fraction instead
        return q.get_str();
    }
    unsigned long k = std::max(twos, fives);
    mpz_class scale2, scale5;
    mpz_ui_pow_ui(scale2.get_mpz_t(), 2, k - twos);
    mpz_ui_pow_ui(scale5.get_mpz_t(), 5, k - fives);
    mpz_class scaled = num * scale2 * scale5;

    std::string digits = scaled.get_str();
    std::string out;
    if (negative) out += '-';
    if (k == 0) {
        out += digits;
    } else {
        if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
        out += digits.substr(0, digits.size() - k);
        out += '.';
        out += digits.substr(digits.size() - k);
    }
    return out;
}

double log10_approx(const Rational& q) {
    if (q <= 0) throw std::invalid_argument("log10 of non-positive value");
    mpfr_t n, d;
    mpfr_init2(n, 128);
    mpfr_init2(d, 128);
    mpfr_set_z(n, q.get_num().get_mpz_t(), MPFR_RNDN);
    mpfr_set_z(d, q.get_den().get_mpz_t(), MPFR_RNDN);
    mpfr_log10(n, n, MPFR_RNDN);
    mpfr_log10(d, d, MPFR_RNDN);
    mpfr_sub(n, n, d, MPFR_RNDN);
    double r = mpfr_get_d(n, MPFR_RNDN);
    mpfr_clear(n);
    mpfr_clear(d);
    return r;
}

namespace {

long floor_log10(const Rational& q) {
    // q > 0; estimate then correct with exact comparisons
    long e = static_cast<long>(std::floor(log10_approx(q)));
    while (pow10q(e) > q) --e;
    while (pow10q(e + 1) <= q) ++e;
    return e;
}

}  // namespace

std::string sci_string(const Rational& q, int sig_digits) {
    if (sig_digits < 1) throw std::invalid_argument("sig_digits must be >= 1");
    if (q == 0) {
        std::string m = "0";
        if (sig_digits > 1) m += "." + std::string(sig_digits - 1, '0');
        return m + "e+00";
    }
    Rational a = q < 0 ? Rational(-q) : q;
    long e = floor_log10(a);
    // round a / 10^(e - sig + 1) to the nearest integer (half away from zero)
    Rational scaled = a * pow10q(sig_digits - 1 - e);
    Rational twice = 2 * scaled;
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), twice.get_num().get_mpz_t(), twice.get_den().get_mpz_t());
    n = (n + 1) / 2;  // floor((2x+1)/2) rounds half up
    mpz_class full;
    mpz_ui_pow_ui(full.get_mpz_t(), 10, static_cast<unsigned long>(sig_digits));
    if (n == full) {
        n /= 10;
        ++e;
    }
    std::string digits = n.get_str();
    std::string out;
    if (q < 0) out += '-';
    out += digits[0];
    if (sig_digits > 1) {
        out += '.';
        out += digits.substr(1);
    }
    out += 'e';
    out += (e < 0) ? '-' : '+';
    long ae = e < 0 ? -e : e;
    std::string es = std::to_string(ae);
    if (es.size() < 2) es.insert(0, 2 - es.size(), '0');
    out += es;
    return out;
}

}  // namespace sornum

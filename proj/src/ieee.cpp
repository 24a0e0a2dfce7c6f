#include "sornum/ieee.hpp"

#include <algorithm>
#include <stdexcept>

namespace sornum {

namespace {

Rational pow2q(long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
    if (k >= 0) return Rational(p);
    Rational r(1, p);
    r.canonicalize();
    return r;
}

void validate(const FloatFormat& f) {
    if (f.n_m < 1 || f.n_e < 2) throw std::invalid_argument("invalid float format");
}

long floor_log2(const Rational& q) {
    // q > 0
    long e = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
    while (pow2q(e) > q) --e;
    while (pow2q(e + 1) <= q) ++e;
    return e;
}

struct Neighbors {
    Rational lo;        // largest k*2^u <= q
    Rational hi;        // smallest k*2^u >= q
    mpz_class k_lo;     // lo / 2^u
    long u;             // ulp exponent
};

// Representable neighbors of a positive magnitude below the next binade past
// max_normal. hi may exceed max_normal; callers decide.
Neighbors neighbors(const FloatFormat& f, const Rational& q) {
    long e_min = -(1L << (f.n_e - 1)) + 2;
    long e = floor_log2(q);
    long u = std::max(e, e_min) - static_cast<long>(f.n_m);
    // floor/ceil of q / 2^u
    mpz_class tn = q.get_num(), td = q.get_den();
    if (u >= 0)
        td <<= static_cast<unsigned long>(u);
    else
        tn <<= static_cast<unsigned long>(-u);
    Neighbors nb;
    nb.u = u;
    mpz_fdiv_q(nb.k_lo.get_mpz_t(), tn.get_mpz_t(), td.get_mpz_t());
    mpz_class k_hi;
    mpz_cdiv_q(k_hi.get_mpz_t(), tn.get_mpz_t(), td.get_mpz_t());
    nb.lo = Rational(nb.k_lo) * pow2q(u);
    nb.hi = Rational(k_hi) * pow2q(u);
    nb.lo.canonicalize();
    nb.hi.canonicalize();
    return nb;
}

}  // namespace

FormatMetrics format_metrics(const FloatFormat& f) {
    validate(f);
    FormatMetrics m;
    m.e_min = -(1L << (f.n_e - 1)) + 2;
    m.e_max = (1L << (f.n_e - 1)) - 1;
    m.bias = m.e_max;
    m.min_subnormal = pow2q(m.e_min - static_cast<long>(f.n_m));
    m.min_normal = pow2q(m.e_min);
    m.max_normal = pow2q(m.e_max) * (2 - pow2q(-static_cast<long>(f.n_m)));
    m.max_normal.canonicalize();
    mpz_class one = 1;
    m.count_subnormal = one << (f.n_m + 1);
    m.count_total = one << (1 + f.n_e + f.n_m);
    m.count_normal = m.count_total - (one << (f.n_m + 2));
    m.count_nan = (one << (f.n_m + 1)) - 2;
    return m;
}

RoundResult round_nearest_even(const FloatFormat& f, const Rational& x) {
    validate(f);
    RoundResult r;
    if (x == 0) {
        r.value = 0;
        return r;
    }
    int s = sgn(x);
    Rational q = s < 0 ? Rational(-x) : x;
    long e_max = (1L << (f.n_e - 1)) - 1;
    Rational threshold = pow2q(e_max) * (2 - pow2q(-static_cast<long>(f.n_m) - 1));
    if (q >= threshold) {
        r.overflow = true;
        r.sign = s;
        return r;
    }
    FormatMetrics m = format_metrics(f);
    Neighbors nb = neighbors(f, q);
    Rational picked;
    if (nb.hi > m.max_normal) {
        picked = nb.lo;  // q < threshold guarantees lo is the nearest
    } else if (q - nb.lo < nb.hi - q) {
        picked = nb.lo;
    } else if (q - nb.lo > nb.hi - q) {
        picked = nb.hi;
    } else {
        // exact midpoint: even mantissa wins
        picked = mpz_even_p(nb.k_lo.get_mpz_t()) ? nb.lo : nb.hi;
    }
    r.value = s < 0 ? Rational(-picked) : picked;
    return r;
}

Rational round_down(const FloatFormat& f, const Rational& x) {
    validate(f);
    if (x == 0) return Rational(0);
    FormatMetrics m = format_metrics(f);
    if (x > 0) {
        if (x >= m.max_normal) return m.max_normal;
        return neighbors(f, x).lo;
    }
    Rational q(-x);
    Rational hi = neighbors(f, q).hi;
    if (hi > m.max_normal) throw std::domain_error("magnitude beyond the finite range");
    return Rational(-hi);
}

Rational round_up(const FloatFormat& f, const Rational& x) {
    validate(f);
    if (x == 0) return Rational(0);
    FormatMetrics m = format_metrics(f);
    if (x < 0) {
        if (x <= -m.max_normal) return Rational(-m.max_normal);
        return Rational(-neighbors(f, Rational(-x)).lo);
    }
    Rational hi = neighbors(f, x).hi;
    if (hi > m.max_normal) throw std::domain_error("magnitude beyond the finite range");
    return hi;
}

}  // namespace sornum

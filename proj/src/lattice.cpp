#include "sornum/lattice.hpp"

#include <stdexcept>

namespace sornum {

void validate_lattice(const Lattice& lat) {
    for (size_t i = 0; i < lat.points.size(); ++i) {
        if (lat.points[i] <= 1)
            throw std::invalid_argument("lattice points must be > 1");
        if (i > 0 && lat.points[i - 1] >= lat.points[i])
            throw std::invalid_argument("lattice points must be strictly increasing");
    }
}

Lattice linear_lattice(unsigned long p, const Rational& m) {
    if (p == 0) throw std::invalid_argument("linear lattice needs p >= 1");
    if (m <= 1) throw std::invalid_argument("linear lattice needs m > 1");
    Lattice lat;
    lat.points.reserve(p);
    Rational step = (m - 1) / p;
    for (unsigned long i = 1; i <= p; ++i) {
        Rational v = 1 + i * step;
        v.canonicalize();
        lat.points.push_back(std::move(v));
    }
    validate_lattice(lat);
    return lat;
}

namespace {

Rational decade_point(unsigned long long i, unsigned s) {
    // per-decade point count: 10^s - 10^(s-1)
    unsigned long long dec = 9;
    for (unsigned k = 1; k < s; ++k) dec *= 10;
    unsigned long long r = i % dec;
    unsigned long long d = i / dec;
    // (10^(s-1) + r) / 10^(s-1) * 10^d
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 10, s - 1);
    Rational v(denom + mpz_class(static_cast<unsigned long>(r)), denom);
    v.canonicalize();
    v *= pow10q(static_cast<long>(d));
    v.canonicalize();
    return v;
}

}  // namespace

Lattice decade_lattice(unsigned long long p, unsigned s) {
    if (s < 1) throw std::invalid_argument("decade lattice needs s >= 1");
    Lattice lat;
    lat.points.reserve(static_cast<size_t>(p));
    for (unsigned long long i = 1; i <= p; ++i) lat.points.push_back(decade_point(i, s));
    validate_lattice(lat);
    return lat;
}

Rational decade_max(unsigned long long p, unsigned s) {
    if (p == 0) throw std::invalid_argument("decade_max needs p >= 1");
    if (s < 1) throw std::invalid_argument("decade_max needs s >= 1");
    return decade_point(p, s);
}

std::vector<PointEnclosure> exponential_lattice(unsigned long p, const Rational& m,
                                                mpfr_prec_t frac_bits) {
    if (p == 0) throw std::invalid_argument("exponential lattice needs p >= 1");
    if (m <= 1) throw std::invalid_argument("exponential lattice needs m > 1");
    std::vector<PointEnclosure> out;
    out.reserve(p);
    for (unsigned long i = 1; i <= p; ++i) {
        // exact when m^i is a perfect p-th power (componentwise on the
        // canonical fraction)
        mpz_class ni, di;
        mpz_pow_ui(ni.get_mpz_t(), m.get_num().get_mpz_t(), i);
        mpz_pow_ui(di.get_mpz_t(), m.get_den().get_mpz_t(), i);
        mpz_class rn, rd;
        bool en = mpz_root(rn.get_mpz_t(), ni.get_mpz_t(), p) != 0;
        bool ed = mpz_root(rd.get_mpz_t(), di.get_mpz_t(), p) != 0;
        if (en && ed) {
            Rational v(rn, rd);
            v.canonicalize();
            out.push_back({v, v});
            continue;
        }
        PointEnclosure pe;
        for (int dir : {-1, +1}) {
            mpfr_rnd_t rnd = dir < 0 ? MPFR_RNDD : MPFR_RNDU;
            mpfr_t t;
            mpfr_init2(t, frac_bits + 32);
            mpfr_set_q(t, m.get_mpq_t(), rnd);
            mpfr_log(t, t, rnd);
            mpfr_mul_ui(t, t, i, rnd);
            mpfr_div_ui(t, t, p, rnd);
            mpfr_exp(t, t, rnd);
            Rational q;
            mpfr_get_q(q.get_mpq_t(), t);
            mpfr_clear(t);
            (dir < 0 ? pe.lo : pe.hi) = std::move(q);
        }
        out.push_back(std::move(pe));
    }
    // enclosures must respect the strict ordering of the true values
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        if (!(out[i].hi < out[i + 1].lo || (out[i].exact() && out[i].hi <= out[i + 1].lo)))
            throw std::invalid_argument("exponential lattice enclosures overlap; raise precision");
    }
    return out;
}

}  // namespace sornum

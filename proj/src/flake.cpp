#include "sornum/flake.hpp"

#include <algorithm>

namespace sornum {

bool contains(const OpenInterval& iv, const RStar& x) {
    const RStar& lo = iv.lo;
    const RStar& hi = iv.hi;
    if (lo.is_inf() && hi.is_inf()) return x.is_finite();
    if (lo.is_inf()) return x.is_finite() && x.value() < hi.value();
    if (hi.is_inf()) return x.is_finite() && x.value() > lo.value();
    if (lo.value() <= hi.value())
        return x.is_finite() && lo.value() < x.value() && x.value() < hi.value();
    // degenerate: wraps through infinity
    return x.is_inf() || x.value() > lo.value() || x.value() < hi.value();
}

bool contains(const Flake& f, const RStar& x) {
    switch (f.kind()) {
        case Flake::Kind::Empty: return false;
        case Flake::Kind::Singleton: return f.point() == x;
        case Flake::Kind::Interval: return contains(f.as_interval(), x);
    }
    return false;
}

Flake oadd(const OpenInterval& a, const OpenInterval& b) {
    const RStar &al = a.lo, &ah = a.hi, &bl = b.lo, &bh = b.hi;

    if (al == ah) {
        if (al.is_finite()) return Flake::empty();
        // a is all reals
        if (bl.is_finite() && bh.is_finite() && bl.value() >= bh.value())
            return Flake::empty();
        return Flake::reals();
    }
    if (bl == bh) return oadd(b, a);

    if (al.is_inf() && bl.is_inf()) return Flake::interval(RStar::inf(), rs_add(ah, bh));
    if (ah.is_inf() && bh.is_inf()) return Flake::interval(rs_add(al, bl), RStar::inf());
    if (al.is_inf() && bh.is_inf()) return Flake::reals();
    if (ah.is_inf() && bl.is_inf()) return oadd(b, a);

    if (al.is_inf()) {  // b is fully finite here
        if (bl.value() > bh.value()) return Flake::empty();
        return Flake::interval(RStar::inf(), rs_add(ah, bh));
    }
    if (ah.is_inf()) {
        if (bl.value() > bh.value()) return Flake::empty();
        return Flake::interval(rs_add(al, bl), RStar::inf());
    }
    if (bl.is_inf() || bh.is_inf()) return oadd(b, a);

    // all endpoints finite
    bool a_deg = al.value() > ah.value();
    bool b_deg = bl.value() > bh.value();
    if (a_deg && b_deg) return Flake::empty();
    Rational lo = al.value() + bl.value();
    Rational hi = ah.value() + bh.value();
    if (a_deg || b_deg) {
        // one wrapped operand: sound only while the two half-lines stay
        // apart; otherwise the true sum is the whole circle, undefined here
        if (lo <= hi) return Flake::empty();
    }
    return Flake::interval(RStar(std::move(lo)), RStar(std::move(hi)));
}

namespace {

inline Rational pmin(const Rational& x, const Rational& y) { return x < y ? x : y; }
inline Rational pmax(const Rational& x, const Rational& y) { return x > y ? x : y; }

}  // namespace

Flake omul(const OpenInterval& a, const OpenInterval& b) {
    const RStar &al = a.lo, &ah = a.hi, &bl = b.lo, &bh = b.hi;

    if (al == ah) {
        if (al.is_finite()) return Flake::empty();
        if (bl.is_finite() && bh.is_finite() && bl.value() >= bh.value())
            return Flake::empty();
        return Flake::reals();
    }
    if (bl == bh) return omul(b, a);

    if (al.is_inf() && bl.is_inf()) {
        if (ah.value() <= 0 && bh.value() <= 0)
            return Flake::interval(rs_mul(ah, bh), RStar::inf());
        return Flake::reals();
    }
    if (ah.is_inf() && bh.is_inf()) {
        if (al.value() >= 0 && bl.value() >= 0)
            return Flake::interval(rs_mul(al, bl), RStar::inf());
        return Flake::reals();
    }
    if (al.is_inf() && bh.is_inf()) {
        if (ah.value() <= 0 && bl.value() >= 0)
            return Flake::interval(RStar::inf(), rs_mul(ah, bl));
        return Flake::reals();
    }
    if (ah.is_inf() && bl.is_inf()) return omul(b, a);

    if (al.is_inf()) {  // b fully finite
        if (bl.value() > bh.value()) return Flake::reals();
        Rational p1 = ah.value() * bl.value();
        Rational p2 = ah.value() * bh.value();
        if (bl.value() >= 0) return Flake::interval(RStar::inf(), RStar(pmax(p1, p2)));
        if (bh.value() <= 0) return Flake::interval(RStar(pmin(p1, p2)), RStar::inf());
        return Flake::reals();
    }
    if (ah.is_inf()) {
        if (bl.value() > bh.value()) return Flake::reals();
        Rational p1 = al.value() * bl.value();
        Rational p2 = al.value() * bh.value();
        if (bl.value() >= 0) return Flake::interval(RStar(pmin(p1, p2)), RStar::inf());
        if (bh.value() <= 0) return Flake::interval(RStar::inf(), RStar(pmax(p1, p2)));
        return Flake::reals();
    }
    if (bl.is_inf() || bh.is_inf()) return omul(b, a);

    // all endpoints finite from here on
    const Rational &alv = al.value(), &ahv = ah.value();
    const Rational &blv = bl.value(), &bhv = bh.value();
    if (alv > ahv && blv > bhv) return Flake::empty();
    if (alv > ahv) {
        if (sgn(blv) != sgn(bhv)) return Flake::empty();
        // wrapped a, sign-definite b: each half-line of a scales into a new
        // half-line whose finite end comes from the a endpoint that bounds
        // it; which b endpoint pairs with which a endpoint flips with the
        // sign of b
        Rational lo, hi;
        if (sgn(blv) > 0) {
            lo = pmin(alv * blv, alv * bhv);
            hi = pmax(ahv * blv, ahv * bhv);
        } else {
            lo = pmin(ahv * blv, ahv * bhv);
            hi = pmax(alv * blv, alv * bhv);
        }
        if (lo <= hi) return Flake::empty();  // halves meet: whole circle, undefined
        return Flake::interval(RStar(std::move(lo)), RStar(std::move(hi)));
    }
    if (blv > bhv) return omul(b, a);

    Rational p1 = alv * blv, p2 = alv * bhv, p3 = ahv * blv, p4 = ahv * bhv;
    Rational mn = pmin(pmin(p1, p2), pmin(p3, p4));
    Rational mx = pmax(pmax(p1, p2), pmax(p3, p4));
    return Flake::interval(RStar(mn), RStar(mx));
}

namespace {

// singleton + interval
Flake fadd_si(const RStar& t, const OpenInterval& b) {
    const RStar &bl = b.lo, &bh = b.hi;
    if (t.is_inf()) {
        if (finite_ge(bl, bh)) return Flake::empty();
        return Flake::singleton(RStar::inf());
    }
    if (bl.is_finite() && bh.is_finite() && bl.value() == bh.value()) return Flake::empty();
    return Flake::interval(rs_add(t, bl), rs_add(t, bh));
}

// singleton * interval
Flake fmul_si(const RStar& t, const OpenInterval& b) {
    const RStar &bl = b.lo, &bh = b.hi;
    if (t.is_inf()) {
        if (bl.is_inf()) return (bh.is_finite() && bh.value() < 0)
                                    ? Flake::singleton(RStar::inf())
                                    : Flake::empty();
        if (bh.is_inf()) return (bl.is_finite() && bl.value() > 0)
                                    ? Flake::singleton(RStar::inf())
                                    : Flake::empty();
        if (bl.value() > bh.value()) return Flake::empty();
        if (sgn(bl.value()) == sgn(bh.value())) return Flake::singleton(RStar::inf());
        return Flake::empty();
    }
    if (bl.is_inf()) {
        if (t.value() > 0) return Flake::interval(RStar::inf(), rs_mul(t, bh));
        if (t.value() < 0) return Flake::interval(rs_mul(t, bh), RStar::inf());
        return Flake::empty();
    }
    if (bh.is_inf()) {
        if (t.value() > 0) return Flake::interval(rs_mul(t, bl), RStar::inf());
        if (t.value() < 0) return Flake::interval(RStar::inf(), rs_mul(t, bl));
        return Flake::empty();
    }
    Rational p1 = t.value() * bl.value();
    Rational p2 = t.value() * bh.value();
    if (bl.value() > bh.value()) return Flake::interval(RStar(pmax(p1, p2)), RStar(pmin(p1, p2)));
    if (bl.value() == bh.value()) return Flake::empty();
    return Flake::interval(RStar(pmin(p1, p2)), RStar(pmax(p1, p2)));
}

}  // namespace

Flake fadd(const Flake& a, const Flake& b) {
    if (a.is_empty() || b.is_empty()) return Flake::empty();
    if (a.is_interval() && b.is_interval()) return oadd(a.as_interval(), b.as_interval());
    if (a.is_singleton() && b.is_singleton()) {
        const RStar &ta = a.point(), &tb = b.point();
        if (ta.is_inf() && tb.is_inf()) return Flake::empty();
        return Flake::singleton(rs_add(ta, tb));
    }
    if (a.is_singleton()) return fadd_si(a.point(), b.as_interval());
    return fadd_si(b.point(), a.as_interval());
}

Flake fmul(const Flake& a, const Flake& b) {
    if (a.is_empty() || b.is_empty()) return Flake::empty();
    if (a.is_interval() && b.is_interval()) return omul(a.as_interval(), b.as_interval());
    if (a.is_singleton() && b.is_singleton()) {
        const RStar &ta = a.point(), &tb = b.point();
        bool a_inf = ta.is_inf();
        bool b_inf = tb.is_inf();
        bool a_zero = ta.is_finite() && ta.value() == 0;
        bool b_zero = tb.is_finite() && tb.value() == 0;
        if (a_inf && (b_zero || b_inf)) return Flake::empty();
        if ((a_zero || a_inf) && b_inf) return Flake::empty();
        return Flake::singleton(rs_mul(ta, tb));
    }
    if (a.is_singleton()) return fmul_si(a.point(), b.as_interval());
    return fmul_si(b.point(), a.as_interval());
}

Flake fneg(const Flake& a) {
    switch (a.kind()) {
        case Flake::Kind::Empty: return a;
        case Flake::Kind::Singleton: return Flake::singleton(a.point().negated());
        case Flake::Kind::Interval: return Flake::interval(a.hi().negated(), a.lo().negated());
    }
    return Flake::empty();
}

Flake finv(const Flake& a) {
    switch (a.kind()) {
        case Flake::Kind::Empty: return a;
        case Flake::Kind::Singleton: return Flake::singleton(a.point().inverted());
        case Flake::Kind::Interval: return Flake::interval(a.hi().inverted(), a.lo().inverted());
    }
    return Flake::empty();
}

std::optional<Flake> feval_monotone(const MonotoneMap& f, const Flake& a) {
    switch (a.kind()) {
        case Flake::Kind::Empty: return Flake::empty();
        case Flake::Kind::Singleton: {
            const RStar& x = a.point();
            if (x.is_inf()) return Flake::singleton(RStar::inf());
            auto lo = f.eval(x, -1);
            auto hi = f.eval(x, +1);
            if (!lo || !hi) return std::nullopt;
            if (*lo == *hi) return Flake::singleton(*lo);
            // inexact evaluation: true value lies strictly inside
            return Flake::interval(*lo, *hi);
        }
        case Flake::Kind::Interval: {
            if (f.interval_ok && !f.interval_ok(a.as_interval())) return std::nullopt;
            std::optional<RStar> lo, hi;
            if (f.increasing) {
                lo = f.eval(a.lo(), -1);
                hi = f.eval(a.hi(), +1);
            } else {
                lo = f.eval(a.hi(), -1);
                hi = f.eval(a.lo(), +1);
            }
            if (!lo || !hi) return std::nullopt;
            return Flake::interval(*lo, *hi);
        }
    }
    return std::nullopt;
}

MonotoneMap ln_map(mpfr_prec_t frac_bits) {
    MonotoneMap m;
    m.increasing = true;
    m.eval = [frac_bits](const RStar& x, int dir) -> std::optional<RStar> {
        if (x.is_inf()) return RStar::inf();
        const Rational& q = x.value();
        int s = sgn(q);
        if (s < 0) return std::nullopt;
        if (s == 0) return RStar::inf();  // limit toward 0 on the circle
        if (q == 1) return RStar(Rational(0));
        mpfr_rnd_t rnd = dir < 0 ? MPFR_RNDD : MPFR_RNDU;
        mpfr_t t;
        mpfr_init2(t, frac_bits + 32);
        mpfr_set_q(t, q.get_mpq_t(), rnd);
        mpfr_log(t, t, rnd);
        Rational r;
        mpfr_get_q(r.get_mpq_t(), t);
        mpfr_clear(t);
        return RStar(std::move(r));
    };
    m.interval_ok = [](const OpenInterval& iv) {
        if (iv.lo.is_inf()) return false;  // extends below every real
        if (iv.lo.value() < 0) return false;
        if (iv.hi.is_finite() && iv.lo.value() > iv.hi.value()) return false;  // wraps
        return true;
    };
    return m;
}

}  // namespace sornum

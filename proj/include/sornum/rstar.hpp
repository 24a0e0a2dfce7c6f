#pragma once

#include "sornum/rational.hpp"

#include <cassert>

namespace sornum {

// A value on the projective circle: a finite rational or the single unsigned
// infinity (its own negation, reciprocal of zero).
class RStar {
public:
    RStar() : q_(0), inf_(false) {}
    RStar(Rational q) : q_(std::move(q)), inf_(false) {}
    RStar(int v) : q_(v), inf_(false) {}
    RStar(long v) : q_(static_cast<long>(v)), inf_(false) {}

    static RStar inf() {
        RStar r;
        r.inf_ = true;
        return r;
    }

    bool is_inf() const { return inf_; }
    bool is_finite() const { return !inf_; }

    const Rational& value() const {
        assert(!inf_);
        return q_;
    }

    // strict sign trichotomy of a finite value
    int sign() const {
        assert(!inf_);
        return sgn(q_);
    }

    RStar negated() const {
        if (inf_) return *this;  // -inf = inf
        return RStar(Rational(-q_));
    }

    RStar inverted() const {
        if (inf_) return RStar(Rational(0));  // 1/inf = 0
        if (q_ == 0) return inf();            // 1/0 = inf
        Rational r(q_.get_den(), q_.get_num());
        r.canonicalize();
        return RStar(std::move(r));
    }

    friend bool operator==(const RStar& a, const RStar& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.q_ == b.q_;
    }
    friend bool operator!=(const RStar& a, const RStar& b) { return !(a == b); }

private:
    Rational q_;
    bool inf_;
};

// finite-only comparisons; false whenever either side is inf
inline bool finite_lt(const RStar& a, const RStar& b) {
    return a.is_finite() && b.is_finite() && a.value() < b.value();
}
inline bool finite_le(const RStar& a, const RStar& b) {
    return a.is_finite() && b.is_finite() && a.value() <= b.value();
}
inline bool finite_gt(const RStar& a, const RStar& b) { return finite_lt(b, a); }
inline bool finite_ge(const RStar& a, const RStar& b) { return finite_le(b, a); }

// a + b; undefined (asserted) for inf + inf
inline RStar rs_add(const RStar& a, const RStar& b) {
    if (a.is_inf() || b.is_inf()) {
        assert(!(a.is_inf() && b.is_inf()));
        return RStar::inf();
    }
    return RStar(Rational(a.value() + b.value()));
}

// a * b; undefined (asserted) for inf*inf and 0*inf
inline RStar rs_mul(const RStar& a, const RStar& b) {
    if (a.is_inf() || b.is_inf()) {
        assert(!(a.is_inf() && b.is_inf()));
        const RStar& fin = a.is_inf() ? b : a;
        assert(fin.value() != 0);
        (void)fin;
        return RStar::inf();
    }
    return RStar(Rational(a.value() * b.value()));
}

}  // namespace sornum

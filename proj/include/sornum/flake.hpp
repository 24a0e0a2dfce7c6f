#pragma once

#include "sornum/rstar.hpp"

#include <functional>
#include <mpfr.h>
#include <optional>

namespace sornum {

// Raw open interval on the projective circle. (inf, inf) denotes all finite
// reals; lo > hi (both finite) is the degenerate interval wrapping through
// infinity: {x > lo} u {inf} u {x < hi}.
struct OpenInterval {
    RStar lo;
    RStar hi;
};

bool contains(const OpenInterval& iv, const RStar& x);

// Empty set, singleton, or open interval. Intervals with equal finite
// endpoints denote the empty set and normalize to Empty on construction,
// so equality is structural.
class Flake {
public:
    enum class Kind { Empty, Singleton, Interval };

    static Flake empty() { return Flake(); }
    static Flake singleton(RStar x) {
        Flake f;
        f.kind_ = Kind::Singleton;
        f.iv_.lo = std::move(x);
        return f;
    }
    static Flake interval(RStar lo, RStar hi) {
        if (lo.is_finite() && hi.is_finite() && lo.value() == hi.value()) return empty();
        Flake f;
        f.kind_ = Kind::Interval;
        f.iv_.lo = std::move(lo);
        f.iv_.hi = std::move(hi);
        return f;
    }
    static Flake interval(const OpenInterval& iv) { return interval(iv.lo, iv.hi); }
    // all finite reals, i.e. the circle minus infinity
    static Flake reals() { return interval(RStar::inf(), RStar::inf()); }

    Kind kind() const { return kind_; }
    bool is_empty() const { return kind_ == Kind::Empty; }
    bool is_singleton() const { return kind_ == Kind::Singleton; }
    bool is_interval() const { return kind_ == Kind::Interval; }

    const RStar& point() const {
        assert(kind_ == Kind::Singleton);
        return iv_.lo;
    }
    const RStar& lo() const {
        assert(kind_ == Kind::Interval);
        return iv_.lo;
    }
    const RStar& hi() const {
        assert(kind_ == Kind::Interval);
        return iv_.hi;
    }
    const OpenInterval& as_interval() const {
        assert(kind_ == Kind::Interval);
        return iv_;
    }

    friend bool operator==(const Flake& a, const Flake& b) {
        if (a.kind_ != b.kind_) return false;
        switch (a.kind_) {
            case Kind::Empty: return true;
            case Kind::Singleton: return a.iv_.lo == b.iv_.lo;
            case Kind::Interval: return a.iv_.lo == b.iv_.lo && a.iv_.hi == b.iv_.hi;
        }
        return false;
    }
    friend bool operator!=(const Flake& a, const Flake& b) { return !(a == b); }

private:
    Flake() = default;
    Kind kind_ = Kind::Empty;
    OpenInterval iv_;  // Singleton stores its value in iv_.lo
};

bool contains(const Flake& f, const RStar& x);

// Open-interval addition and multiplication (the full case tables, including
// degenerate operands). Results are normalized Flakes: Empty for the
// undefined cases, (inf, inf) for all reals.
Flake oadd(const OpenInterval& a, const OpenInterval& b);
Flake omul(const OpenInterval& a, const OpenInterval& b);

// Flake-level operations: dispatch to oadd/omul for intervals, singleton
// rules otherwise; Empty operands are absorbing.
Flake fadd(const Flake& a, const Flake& b);
Flake fmul(const Flake& a, const Flake& b);
Flake fneg(const Flake& a);
Flake finv(const Flake& a);

// Strictly monotone real function with outward-directed endpoint evaluation.
// eval(x, dir): dir < 0 rounds the result down, dir > 0 up; returns the exact
// value as a single rational when possible (then both directions agree),
// nullopt on a domain violation. eval must map inf to inf. interval_ok
// reports whether the whole open point set of an interval lies inside the
// function's domain (endpoints alone cannot tell for unbounded intervals).
struct MonotoneMap {
    bool increasing = true;
    std::function<std::optional<RStar>(const RStar&, int)> eval;
    std::function<bool(const OpenInterval&)> interval_ok;
};

// Monotone image of a Flake; nullopt signals a domain violation, decided by
// the caller. Decreasing maps go through a ↦ -((-f)(a)).
std::optional<Flake> feval_monotone(const MonotoneMap& f, const Flake& a);

// Natural logarithm with outward-safe enclosures at the given number of
// fractional bits. Domain is [0, inf] on the circle: ln tends to inf (the
// projective infinity) at 0, so 0 and inf map to inf; negative values are
// domain violations.
MonotoneMap ln_map(mpfr_prec_t frac_bits = 64);

}  // namespace sornum

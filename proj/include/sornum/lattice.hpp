#pragma once

#include "sornum/rational.hpp"

#include <mpfr.h>
#include <vector>

namespace sornum {

// Generator points of a Unum environment: strictly increasing exact values,
// all in (1, inf). Constructors validate; throw std::invalid_argument.
struct Lattice {
    std::vector<Rational> points;
};

void validate_lattice(const Lattice& lat);

// { 1 + i*(m-1)/p : i = 1..p }
Lattice linear_lattice(unsigned long p, const Rational& m);

// p_i = [1 + 10^-(s-1) * (i mod (10^s - 10^(s-1)))] * 10^floor(i / (10^s - 10^(s-1)))
// for i = 1..p: all s-significant-digit decimals, decade by decade.
Lattice decade_lattice(unsigned long long p, unsigned s);

// last element of decade_lattice(p, s), computed directly
Rational decade_max(unsigned long long p, unsigned s);

// One geometric lattice point exp(i*ln(m)/p) as a directed enclosure;
// lo == hi when the value is rational (m^i a perfect p-th power).
struct PointEnclosure {
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
};

// { exp(i*ln(m)/p) : i = 1..p } with outward-safe enclosures at the given
// fractional precision. Exact points collapse to lo == hi; the p-th point is
// always exactly m.
std::vector<PointEnclosure> exponential_lattice(unsigned long p, const Rational& m,
                                                mpfr_prec_t frac_bits = 64);

}  // namespace sornum

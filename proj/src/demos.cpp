#include "sornum/demos.hpp"

#include <cmath>

namespace sornum {

std::vector<FloatRow> spike_float() {
    std::vector<FloatRow> rows;
    const double center = 4.0 / 3.0;
    const double ulp = 0x1p-52;  // spacing of binary64 in [1, 2)
    for (int k = -10; k <= 10; ++k) {
        double x = center + k * ulp;
        double y = std::log(std::fabs(3.0 * (1.0 - x) + 1.0));
        rows.push_back({k, y});
    }
    return rows;
}

std::vector<FloatRow> devil_float() {
    std::vector<FloatRow> rows;
    double u0 = 2.0, u1 = -4.0;
    rows.push_back({0, u0});
    rows.push_back({1, u1});
    for (int n = 2; n <= 25; ++n) {
        double u = 111.0 - 1130.0 / u1 + 3000.0 / (u1 * u0);
        u0 = u1;
        u1 = u;
        rows.push_back({n, u});
    }
    return rows;
}

std::vector<FloatRow> bank_float() {
    std::vector<FloatRow> rows;
    double a = 1.718281828459045235;  // e - 1 to binary64
    rows.push_back({0, a});
    for (int n = 1; n <= 25; ++n) {
        a = a * n - 1.0;
        rows.push_back({n, a});
    }
    return rows;
}

std::vector<SornRow> spike_unum(const Runtime& rt) {
    std::vector<SornRow> rows;
    const Sorn one = rt.blur(Flake::singleton(RStar(Rational(1))));
    const Sorn three = rt.blur(Flake::singleton(RStar(Rational(3))));
    Rational lo(5, 6);   // 1/1.2
    Rational hi(19, 10);
    size_t first = rt.env().index_of(RStar(lo));
    size_t last = rt.env().index_of(RStar(hi));
    for (size_t i = first; i <= last; ++i) {
        Sorn x = rt.uemp();
        x.set(i);
        Sorn t = rt.uadd(one, rt.uneg(x));
        t = rt.umul(three, t);
        t = rt.uadd(t, one);
        t = rt.ulog(rt.uabs(t));
        rows.push_back({static_cast<int>(i), std::move(t)});
    }
    return rows;
}

std::vector<SornRow> devil_unum(const Runtime& rt) {
    std::vector<SornRow> rows;
    const Sorn c111 = rt.blur(Flake::singleton(RStar(Rational(111))));
    const Sorn c1130 = rt.blur(Flake::singleton(RStar(Rational(1130))));
    const Sorn c3000 = rt.blur(Flake::singleton(RStar(Rational(3000))));
    Sorn u0 = rt.blur(Flake::singleton(RStar(Rational(2))));
    Sorn u1 = rt.blur(Flake::singleton(RStar(Rational(-4))));
    rows.push_back({0, u0});
    rows.push_back({1, u1});
    for (int n = 2; n <= 25; ++n) {
        Sorn t1 = rt.udiv(c1130, u1);
        Sorn t2 = rt.udiv(c3000, rt.umul(u1, u0));
        Sorn u = rt.uadd(rt.uadd(c111, rt.uneg(t1)), t2);
        u0 = u1;
        u1 = u;
        rows.push_back({n, u1});
    }
    return rows;
}

std::vector<SornRow> bank_unum(const Runtime& rt) {
    std::vector<SornRow> rows;
    const Sorn one = rt.blur(Flake::singleton(RStar(Rational(1))));
    Sorn a = rt.uinterval(Rational(17, 10), Rational(9, 5));
    rows.push_back({0, a});
    for (int n = 1; n <= 25; ++n) {
        Sorn cn = rt.blur(Flake::singleton(RStar(Rational(n))));
        a = rt.uadd(rt.umul(a, cn), rt.uneg(one));
        rows.push_back({n, a});
    }
    return rows;
}

std::vector<SornRow> euler_unum(const Runtime& rt, int n_max) {
    std::vector<SornRow> rows;
    Sorn fact = rt.blur(Flake::singleton(RStar(Rational(1))));  // k! so far
    Sorn sum = rt.blur(Flake::singleton(RStar(Rational(1))));   // 1/0!
    rows.push_back({0, sum});
    for (int n = 1; n <= n_max; ++n) {
        Sorn cn = rt.blur(Flake::singleton(RStar(Rational(n))));
        fact = rt.umul(fact, cn);
        sum = rt.uadd(sum, rt.uinv(fact));
        rows.push_back({n, sum});
    }
    return rows;
}

}  // namespace sornum

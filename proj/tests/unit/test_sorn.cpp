#include <doctest.h>

#include "sornum/sorn.hpp"

#include <random>

using namespace sornum;

namespace {

RStar q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return RStar(std::move(r));
}

Runtime& demo_rt() {
    static Runtime rt = [] {
        Lattice lat;
        lat.points = {Rational(2), Rational(7, 2), Rational(5), Rational(6)};
        UnumEnv env(std::move(lat));
        TableSet t = generate(env, 64, 1);
        return Runtime(std::move(env), std::move(t));
    }();
    return rt;
}

Runtime& machine_rt() {
    static Runtime rt = [] {
        UnumEnv env = machine_env(8, 1);
        TableSet t = generate(env, 64, 0);
        return Runtime(std::move(env), std::move(t));
    }();
    return rt;
}

Sorn bits(const Runtime& rt, std::initializer_list<size_t> is) {
    Sorn s = rt.uemp();
    for (size_t i : is) s.set(i);
    return s;
}

}  // namespace

TEST_CASE("SORN bitset basics") {
    Sorn s(70);
    CHECK(s.none());
    s.set(0);
    s.set(69);
    CHECK(s.count() == 2);
    CHECK(s.test(69));
    s.reset(69);
    CHECK(s.count() == 1);
    s.set_all();
    CHECK(s.all());
    CHECK(s.count() == 70);
    s.clear();
    s.set_range(68, 2);  // wraps
    CHECK(s.set_bits() == std::vector<size_t>{0, 1, 2, 68, 69});
    Sorn o(70);
    o.set(5);
    s |= o;
    CHECK(s.test(5));
    s &= o;
    CHECK(s.count() == 1);
}

TEST_CASE("blurring a sum narrows to the covering Unums") {
    Runtime& rt = demo_rt();
    Sorn a = rt.blur(Flake::interval(q(1), q(2)));
    Sorn b = rt.blur(Flake::singleton(q(7, 2)));
    CHECK(a.set_bits() == std::vector<size_t>{11});
    CHECK(b.set_bits() == std::vector<size_t>{14});
    Sorn sum = rt.uadd(a, b);
    // (1,2) + {3.5} = (4.5, 5.5), covered by (3.5,5), {5}, (5,6)
    CHECK(sum.set_bits() == std::vector<size_t>{15, 16, 17});
    CHECK(rt.uout(sum) == "(3.5, 6)");
}

TEST_CASE("dependent evaluation pairs bits instead of crossing them") {
    Runtime& rt = demo_rt();
    Sorn x = bits(rt, {10, 12});  // {1} or {2}
    Sorn indep = rt.usub(x, x);
    Sorn dep = rt.usub(x, x, Dep::dependent);
    CHECK(dep.set_bits() == std::vector<size_t>{0});  // x - x = {0}
    CHECK(indep.test(0));
    CHECK(rt.usup(indep, dep));
    CHECK(indep.count() > dep.count());

    Sorn ratio = rt.udiv(x, x, Dep::dependent);
    CHECK(ratio.set_bits() == std::vector<size_t>{10});  // x / x = {1}
}

TEST_CASE("division and subtraction reduce to the dual tables") {
    Runtime& rt = demo_rt();
    Sorn two = rt.blur(Flake::singleton(q(2)));
    Sorn one = rt.blur(Flake::singleton(q(1)));
    CHECK(rt.usub(two, one).set_bits() == std::vector<size_t>{10});
    CHECK(rt.udiv(one, two).set_bits() == std::vector<size_t>{8});  // {1/2}
    // 1/0 is the projective infinity, not an error
    Sorn zero = rt.blur(Flake::singleton(q(0)));
    CHECK(rt.udiv(one, zero).set_bits() == std::vector<size_t>{20});
}

TEST_CASE("undefined pairs widen to R* by default and annihilate in strict mode") {
    Runtime& rt = demo_rt();
    Sorn zero = rt.blur(Flake::singleton(q(0)));
    Sorn inf = rt.blur(Flake::singleton(RStar::inf()));
    CHECK(rt.umul(zero, inf).all());
    CHECK(rt.uout(rt.umul(zero, inf)) == "R*");
    CHECK(rt.uadd(inf, inf).all());

    rt.set_strict_empty(true);
    CHECK(rt.umul(zero, inf).none());
    CHECK(rt.uadd(inf, inf).none());
    // defined results are unaffected
    CHECK(rt.uadd(zero, inf).set_bits() == std::vector<size_t>{20});
    rt.set_strict_empty(false);
}

TEST_CASE("unary operations permute the circle") {
    Runtime& rt = demo_rt();
    Sorn a = bits(rt, {11, 14});  // (1,2) u {3.5}
    Sorn n = rt.uneg(a);
    CHECK(n.set_bits() == std::vector<size_t>{26, 29});
    CHECK(rt.uequ(rt.uneg(n), a));
    Sorn v = rt.uinv(a);
    CHECK(rt.uequ(rt.uinv(v), a));
    CHECK(rt.uabs(n) == rt.uabs(a));
    CHECK(rt.usup(rt.uabs(a), a));
}

TEST_CASE("logarithms through the table") {
    Runtime& rt = demo_rt();
    CHECK(rt.ulog(rt.blur(Flake::singleton(q(1)))).set_bits() == std::vector<size_t>{0});
    CHECK(rt.ulog(rt.blur(Flake::singleton(q(0)))).set_bits() == std::vector<size_t>{20});
    CHECK(rt.ulog(rt.blur(Flake::singleton(RStar::inf()))).set_bits() ==
          std::vector<size_t>{20});
    // any negative content empties the result
    CHECK(rt.ulog(rt.blur(Flake::singleton(q(-1)))).none());
    CHECK(rt.ulog(bits(rt, {10, 30})).none());
    // ln(2,3.5) is a sound enclosure of (0.693.., 1.252..)
    Sorn img = rt.ulog(bits(rt, {13}));
    CHECK(img.test(rt.env().index_of(q(7, 10))));
    CHECK(img.test(rt.env().index_of(q(5, 4))));
    CHECK_FALSE(img.test(rt.env().index_of(q(-1))));
}

TEST_CASE("set algebra and comparisons") {
    Runtime& rt = demo_rt();
    Sorn a = bits(rt, {1, 2, 3});
    Sorn b = bits(rt, {3, 4});
    CHECK(rt.ucut(a, b).set_bits() == std::vector<size_t>{3});
    CHECK(rt.uuni(a, b).set_bits() == std::vector<size_t>{1, 2, 3, 4});
    CHECK(rt.uequ(a, a));
    CHECK_FALSE(rt.uequ(a, b));
    CHECK(rt.usup(rt.uuni(a, b), a));
    CHECK_FALSE(rt.usup(a, b));
    CHECK_THROWS_AS(rt.uadd(a, Sorn(8)), std::invalid_argument);
}

TEST_CASE("closed rational intervals map to minimal SORNs") {
    Runtime& rt = demo_rt();
    CHECK(rt.uinterval(Rational(17, 10), Rational(9, 5)).set_bits() ==
          std::vector<size_t>{11});
    Sorn s = rt.uinterval(Rational(2), Rational(5));
    CHECK(s.set_bits() == std::vector<size_t>{12, 13, 14, 15, 16});
    CHECK(rt.uout(s) == "[2, 5]");
    CHECK(rt.uinterval(2.0, 5.0) == s);
    CHECK_THROWS_AS(rt.uinterval(Rational(2), Rational(1)), std::invalid_argument);
}

TEST_CASE("text form of SORN sets") {
    Runtime& rt = demo_rt();
    CHECK(rt.uout(rt.uemp()) == "empty");
    CHECK(rt.uout(rt.uset()) == "R*");
    Sorn wrap = rt.uemp();
    wrap.set_range(17, 23);
    CHECK(rt.uout(wrap) == "(5, -5)");
    CHECK(rt.uout(bits(rt, {10, 14})) == "[1, 1] u [3.5, 3.5]");
    CHECK(rt.uout(bits(rt, {2})) == "[1/6, 1/6]");
    CHECK(rt.uout(bits(rt, {19, 20, 21})) == "(6, -6)");
}

TEST_CASE("interval hull picks the complement of the largest gap") {
    Runtime& rt = demo_rt();
    CHECK(rt.hull(rt.uemp()).is_empty);
    CHECK(rt.hull(rt.uset()).is_full);

    Hull h = rt.hull(bits(rt, {12, 16}));
    CHECK_FALSE(h.is_empty);
    CHECK(h.lo == q(2));
    CHECK_FALSE(h.lo_open);
    CHECK(h.hi == q(5));
    CHECK_FALSE(h.hi_open);

    Sorn wrap = rt.uemp();
    wrap.set_range(38, 2);
    Hull w = rt.hull(wrap);
    CHECK(w.lo == q(-1, 6));
    CHECK(w.hi == q(1, 6));

    Hull g = rt.hull(bits(rt, {11}));
    CHECK(g.lo == q(1));
    CHECK(g.lo_open);
    CHECK(g.hi == q(2));
    CHECK(g.hi_open);
}

TEST_CASE("maximal runs enumeration") {
    Runtime& rt = demo_rt();
    CHECK(rt.runs(rt.uemp()).empty());
    auto all = rt.runs(rt.uset());
    REQUIRE(all.size() == 1);
    CHECK(all[0] == std::pair<size_t, size_t>{0, 39});
    Sorn s = bits(rt, {0, 1, 5, 39});
    auto rs = rt.runs(s);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0] == std::pair<size_t, size_t>{5, 5});
    CHECK(rs[1] == std::pair<size_t, size_t>{39, 1});
}

TEST_CASE("runtime construction checks table compatibility") {
    UnumEnv small = machine_env(4, 1);
    TableSet big = generate(machine_env(5, 1), 64, 1);
    CHECK_THROWS_AS(Runtime(small, big), std::invalid_argument);
}

TEST_CASE("machine runtime containment sampling") {
    Runtime& rt = machine_rt();
    const UnumEnv& env = rt.env();
    std::mt19937 rng(20240823);
    std::uniform_int_distribution<int> num(-300, 300);
    std::uniform_int_distribution<int> den(1, 9);
    for (int t = 0; t < 1500; ++t) {
        Rational x(num(rng), den(rng));
        Rational y(num(rng), den(rng));
        x.canonicalize();
        y.canonicalize();
        Sorn a = rt.blur(Flake::singleton(RStar(x)));
        Sorn b = rt.blur(Flake::singleton(RStar(y)));
        CHECK(rt.uadd(a, b).test(env.index_of(RStar(Rational(x + y)))));
        CHECK(rt.umul(a, b).test(env.index_of(RStar(Rational(x * y)))));
        CHECK(rt.usub(a, b).test(env.index_of(RStar(Rational(x - y)))));
        if (y != 0) CHECK(rt.udiv(a, b).test(env.index_of(RStar(Rational(x / y)))));
        CHECK(rt.uneg(a).test(env.index_of(RStar(Rational(-x)))));
        CHECK(rt.uabs(a).test(env.index_of(RStar(Rational(abs(x))))));
    }
}

TEST_CASE("operations are monotone in their arguments") {
    Runtime& rt = machine_rt();
    std::mt19937 rng(555);
    std::uniform_int_distribution<size_t> pick(0, rt.env().size() - 1);
    for (int t = 0; t < 300; ++t) {
        Sorn a = bits(rt, {pick(rng), pick(rng)});
        Sorn c = bits(rt, {pick(rng)});
        Sorn wide = a;
        wide.set(pick(rng));
        CHECK(rt.usup(rt.uadd(wide, c), rt.uadd(a, c)));
        CHECK(rt.usup(rt.umul(wide, c), rt.umul(a, c)));
    }
}

#include <doctest.h>

#include "sornum/env.hpp"

#include <random>

using namespace sornum;

namespace {

RStar q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return RStar(std::move(r));
}

UnumEnv demo_env() {
    Lattice lat;
    lat.points = {Rational(2), Rational(7, 2), Rational(5), Rational(6)};
    return UnumEnv(std::move(lat));
}

}  // namespace

TEST_CASE("environment enumeration over {2, 3.5, 5, 6}") {
    UnumEnv env = demo_env();
    REQUIRE(env.size() == 40);

    // even indices are the singletons in circle order
    CHECK(env.unum(0) == Flake::singleton(q(0)));
    CHECK(env.unum(2) == Flake::singleton(q(1, 6)));
    CHECK(env.unum(4) == Flake::singleton(q(1, 5)));
    CHECK(env.unum(6) == Flake::singleton(q(2, 7)));
    CHECK(env.unum(8) == Flake::singleton(q(1, 2)));
    CHECK(env.unum(10) == Flake::singleton(q(1)));
    CHECK(env.unum(12) == Flake::singleton(q(2)));
    CHECK(env.unum(14) == Flake::singleton(q(7, 2)));
    CHECK(env.unum(16) == Flake::singleton(q(5)));
    CHECK(env.unum(18) == Flake::singleton(q(6)));
    CHECK(env.unum(20) == Flake::singleton(RStar::inf()));
    CHECK(env.unum(22) == Flake::singleton(q(-6)));
    CHECK(env.unum(30) == Flake::singleton(q(-1)));
    CHECK(env.unum(38) == Flake::singleton(q(-1, 6)));

    // odd indices are the open gaps between neighbours
    CHECK(env.unum(11) == Flake::interval(q(1), q(2)));
    CHECK(env.unum(15) == Flake::interval(q(7, 2), q(5)));
    CHECK(env.unum(19) == Flake::interval(q(6), RStar::inf()));
    CHECK(env.unum(21) == Flake::interval(RStar::inf(), q(-6)));
    CHECK(env.unum(39) == Flake::interval(q(-1, 6), q(0)));
}

TEST_CASE("index_of lands on the containing Unum") {
    UnumEnv env = demo_env();
    CHECK(env.index_of(q(0)) == 0);
    CHECK(env.index_of(q(2)) == 12);
    CHECK(env.index_of(RStar::inf()) == 20);
    CHECK(env.index_of(q(-1, 6)) == 38);
    CHECK(env.index_of(q(3)) == 13);
    CHECK(env.index_of(q(100)) == 19);
    CHECK(env.index_of(q(1, 100)) == 1);
    CHECK(env.index_of(q(-7)) == 21);
    CHECK(env.index_of(q(-1, 100)) == 39);
}

TEST_CASE("the Unums partition the projective line") {
    UnumEnv env = demo_env();
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> num(-220, 220);
    std::uniform_int_distribution<int> den(1, 30);
    for (int t = 0; t < 400; ++t) {
        RStar x = (t == 0) ? RStar::inf() : q(num(rng), den(rng));
        size_t hits = 0, where = 0;
        for (size_t i = 0; i < env.size(); ++i)
            if (contains(env.unum(i), x)) {
                ++hits;
                where = i;
            }
        REQUIRE(hits == 1);
        CHECK(where == env.index_of(x));
    }
}

TEST_CASE("negation, inversion and magnitude index maps") {
    UnumEnv env = demo_env();
    for (size_t i = 0; i < env.size(); ++i) {
        CHECK(fneg(env.unum(i)) == env.unum(env.neg_index(i)));
        CHECK(finv(env.unum(i)) == env.unum(env.inv_index(i)));
        size_t a = env.abs_index(i);
        if (i <= env.size() / 2)
            CHECK(a == i);
        else
            CHECK(env.unum(a) == fneg(env.unum(i)));
        // all three are involutions or idempotent
        CHECK(env.neg_index(env.neg_index(i)) == i);
        CHECK(env.inv_index(env.inv_index(i)) == i);
        CHECK(env.abs_index(env.abs_index(i)) == env.abs_index(i));
    }
}

TEST_CASE("blur worked examples") {
    UnumEnv env = demo_env();
    CHECK(env.blur(Flake::empty()) == IndexRange::empty());
    CHECK(env.blur(Flake::singleton(q(7, 2))) == IndexRange::run(14, 14));
    CHECK(env.blur(Flake::interval(q(1), q(2))) == IndexRange::run(11, 11));
    // (4.5, 5.5) covers (3.5,5), {5}, (5,6)
    CHECK(env.blur(Flake::interval(q(9, 2), q(11, 2))) == IndexRange::run(15, 17));
    CHECK(env.blur(Flake::interval(q(2), q(7, 2))) == IndexRange::run(13, 13));
    CHECK(env.blur(Flake::interval(q(3, 2), q(3))) == IndexRange::run(11, 13));
    CHECK(env.blur(Flake::reals()) == IndexRange::run(0, 39));
    // half-lines close over {inf}
    CHECK(env.blur(Flake::interval(q(3), RStar::inf())) == IndexRange::run(13, 20));
    CHECK(env.blur(Flake::interval(RStar::inf(), q(-5))) == IndexRange::run(20, 23));
    // degenerate intervals pass through {inf}
    CHECK(env.blur(Flake::interval(q(5), q(-5))) == IndexRange::run(17, 23));
    CHECK(env.blur(Flake::interval(q(-5), q(-6))) == IndexRange::run(25, 21));
    // overlapping half-lines cover everything
    CHECK(env.blur(Flake::interval(q(1, 10), q(1, 20))) == IndexRange::run(0, 39));
}

TEST_CASE("blur is sound and tight on sampled intervals") {
    UnumEnv env = demo_env();
    const size_t N = env.size();
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> num(-90, 90);
    std::uniform_int_distribution<int> den(1, 12);
    auto rv = [&]() { return q(num(rng), den(rng)); };
    for (int t = 0; t < 3000; ++t) {
        RStar a = rv(), b = rv();
        int shape = t % 4;
        Flake f = Flake::empty();
        if (shape == 0)
            f = Flake::interval(a, b);
        else if (shape == 1)
            f = Flake::singleton(a);
        else if (shape == 2)
            f = Flake::interval(RStar::inf(), a);
        else
            f = Flake::interval(a, RStar::inf());
        if (f.is_empty()) continue;
        IndexRange r = env.blur(f);
        REQUIRE(r.kind == IndexRange::Kind::Run);
        size_t len = (r.end + N - r.start) % N + 1;
        // soundness: every member's Unum lies in the run
        for (int s = 0; s < 12; ++s) {
            RStar x = rv();
            if (!contains(f, x)) continue;
            size_t d = (env.index_of(x) + N - r.start) % N;
            CHECK(d < len);
        }
        // tightness at finite closed ends: first and last Unum of the run
        // intersect the closure of f
        if (f.is_interval() && f.lo().is_finite() && f.hi().is_finite() &&
            finite_lt(f.lo(), f.hi())) {
            const Flake& first = env.unum(r.start);
            const Flake& last = env.unum(r.end);
            if (first.is_singleton())
                CHECK(!finite_lt(first.point(), f.lo()));
            if (last.is_singleton())
                CHECK(!finite_lt(f.hi(), last.point()));
        }
    }
}

TEST_CASE("machine lattice sizes") {
    CHECK(lattice_size_from_bits(8) == 31);
    CHECK(lattice_size_from_bits(12) == 511);
    CHECK(lattice_size_from_bits(16) == 8191);
    CHECK_THROWS_AS(lattice_size_from_bits(2), std::invalid_argument);
}

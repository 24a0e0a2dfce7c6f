#include "sornum/env.hpp"

#include <stdexcept>

namespace sornum {

namespace {

// Total order along the circle starting at 0: 0, positives ascending, inf,
// negatives ascending.
int circle_class(const RStar& x) {
    if (x.is_inf()) return 2;
    int s = x.sign();
    if (s == 0) return 0;
    return s > 0 ? 1 : 3;
}

bool circle_less(const RStar& a, const RStar& b) {
    int ca = circle_class(a), cb = circle_class(b);
    if (ca != cb) return ca < cb;
    if (a.is_inf()) return false;
    return a.value() < b.value();
}

}  // namespace

UnumEnv::UnumEnv(Lattice lat) : lat_(std::move(lat)) {
    validate_lattice(lat_);
    const size_t n = lat_.points.size();
    const size_t quarter = n + 1;  // singletons per quadrant
    sing_.reserve(4 * quarter);

    sing_.push_back(RStar(Rational(0)));
    for (size_t j = 1; j <= n; ++j) {  // 1/p_n < ... < 1/p_1
        Rational v(lat_.points[n - j].get_den(), lat_.points[n - j].get_num());
        v.canonicalize();
        sing_.push_back(RStar(std::move(v)));
    }
    sing_.push_back(RStar(Rational(1)));
    for (size_t j = 0; j < n; ++j) sing_.push_back(RStar(lat_.points[j]));
    sing_.push_back(RStar::inf());
    for (size_t j = 0; j < n; ++j)  // -p_n < ... < -p_1
        sing_.push_back(RStar(Rational(-lat_.points[n - 1 - j])));
    sing_.push_back(RStar(Rational(-1)));
    for (size_t j = 0; j < n; ++j) {  // -1/p_1 < ... < -1/p_n
        Rational v(lat_.points[j].get_den(), lat_.points[j].get_num());
        v.canonicalize();
        sing_.push_back(RStar(Rational(-v)));
    }

    const size_t m = sing_.size();
    unums_.reserve(2 * m);
    for (size_t j = 0; j < m; ++j) {
        unums_.push_back(Flake::singleton(sing_[j]));
        unums_.push_back(Flake::interval(sing_[j], sing_[(j + 1) % m]));
    }
}

size_t UnumEnv::index_of(const RStar& x) const {
    // last singleton position j with sing_[j] <= x in circle order
    size_t lo = 0, hi = sing_.size();  // invariant: sing_[lo] <= x < sing_[hi]
    while (lo + 1 < hi) {
        size_t mid = (lo + hi) / 2;
        if (circle_less(x, sing_[mid]))
            hi = mid;
        else
            lo = mid;
    }
    if (sing_[lo] == x) return 2 * lo;
    return 2 * lo + 1;
}

IndexRange UnumEnv::blur(const Flake& f) const {
    const size_t N = size();
    switch (f.kind()) {
        case Flake::Kind::Empty:
            return IndexRange::empty();
        case Flake::Kind::Singleton:
            return IndexRange::run(static_cast<uint32_t>(index_of(f.point())),
                                   static_cast<uint32_t>(index_of(f.point())));
        case Flake::Kind::Interval:
            break;
    }
    const RStar& lo = f.lo();
    const RStar& hi = f.hi();
    if (lo.is_inf() && hi.is_inf()) return IndexRange::run(0, static_cast<uint32_t>(N - 1));

    size_t start, end;
    if (lo.is_inf()) {
        start = N / 2;  // closure at infinity
    } else {
        size_t i = index_of(lo);
        start = (i % 2 == 0) ? (i + 1) % N : i;
    }
    if (hi.is_inf()) {
        end = N / 2;
    } else {
        size_t i = index_of(hi);
        end = (i % 2 == 0) ? (i + N - 1) % N : i;
    }

    if (lo.is_finite() && hi.is_finite() && lo.value() > hi.value()) {
        // degenerate: the covered run must pass through {inf}; when the two
        // half-lines overlap around the circle the whole set is covered
        size_t mid = N / 2;
        size_t d_end = (end + N - start) % N;
        size_t d_mid = (mid + N - start) % N;
        if (d_mid > d_end) return IndexRange::run(0, static_cast<uint32_t>(N - 1));
    }
    return IndexRange::run(static_cast<uint32_t>(start), static_cast<uint32_t>(end));
}

unsigned long lattice_size_from_bits(unsigned n_b) {
    if (n_b <= 2) throw std::invalid_argument("need more than 2 bits");
    return (1ul << (n_b - 3)) - 1;
}

}  // namespace sornum

#pragma once

#include "sornum/tables.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sornum {

// Set Of Real Numbers: one bit per Unum of the environment. All-zero is the
// empty set, all-one is the whole circle R*.
class Sorn {
public:
    Sorn() = default;
    explicit Sorn(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool test(size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
    void set(size_t i) { w_[i / 64] |= (uint64_t{1} << (i % 64)); }
    void reset(size_t i) { w_[i / 64] &= ~(uint64_t{1} << (i % 64)); }
    void clear();
    void set_all();
    bool none() const;
    bool all() const;
    bool any() const { return !none(); }
    size_t count() const;

    // inclusive circular run start..end (mod size)
    void set_range(size_t start, size_t end);
    void or_range(const IndexRange& r);

    Sorn& operator|=(const Sorn& o);
    Sorn& operator&=(const Sorn& o);
    friend bool operator==(const Sorn& a, const Sorn& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
    friend bool operator!=(const Sorn& a, const Sorn& b) { return !(a == b); }

    // indices of set bits, ascending
    std::vector<size_t> set_bits() const;

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

enum class Dep { independent, dependent };

// Interval hull of a SORN: the shortest circular run covering all set bits
// (the complement of the largest empty gap), reported with Flake-style
// endpoints. Wrapping hulls come out with lo > hi, as usual.
struct Hull {
    bool is_empty = false;
    bool is_full = false;
    RStar lo;
    bool lo_open = true;
    RStar hi;
    bool hi_open = true;
};

// The table-driven arithmetic: an environment plus its generated tables.
// Immutable and freely shareable; every operation is pure.
class Runtime {
public:
    Runtime(UnumEnv env, TableSet tables);
    static Runtime load(const std::string& path);

    const UnumEnv& env() const { return env_; }
    const TableSet& tables() const { return tables_; }

    // In strict mode an undefined pair result makes the whole operation
    // empty (NaN-style propagation) instead of widening to R*.
    void set_strict_empty(bool on) { strict_empty_ = on; }
    bool strict_empty() const { return strict_empty_; }

    Sorn uemp() const { return Sorn(env_.size()); }
    Sorn uset() const;
    Sorn blur(const Flake& f) const;

    Sorn uadd(const Sorn& a, const Sorn& b, Dep dep = Dep::independent) const;
    Sorn usub(const Sorn& a, const Sorn& b, Dep dep = Dep::independent) const;
    Sorn umul(const Sorn& a, const Sorn& b, Dep dep = Dep::independent) const;
    Sorn udiv(const Sorn& a, const Sorn& b, Dep dep = Dep::independent) const;

    Sorn uneg(const Sorn& a) const;
    Sorn uinv(const Sorn& a) const;
    Sorn uabs(const Sorn& a) const;
    Sorn ulog(const Sorn& a) const;

    Sorn ucut(const Sorn& a, const Sorn& b) const;
    Sorn uuni(const Sorn& a, const Sorn& b) const;
    bool uequ(const Sorn& a, const Sorn& b) const;
    bool usup(const Sorn& a, const Sorn& b) const;  // a superset of b

    // minimal SORN covering the closed interval [lo, hi]; exact rationals in,
    // so decimal inputs land on lattice points when they should
    Sorn uinterval(const Rational& lo, const Rational& hi) const;
    Sorn uinterval(double lo, double hi) const;

    std::string uout(const Sorn& a) const;
    Hull hull(const Sorn& a) const;

    // maximal circular runs of set bits, ordered by start index
    std::vector<std::pair<size_t, size_t>> runs(const Sorn& a) const;

private:
    void check(const Sorn& s) const;
    Sorn dual(const Sorn& a, const Sorn& b, Dep dep, const std::vector<TableEntry>& table,
              const std::vector<uint16_t>* pair_map) const;

    UnumEnv env_;
    TableSet tables_;
    bool strict_empty_ = false;
};

}  // namespace sornum

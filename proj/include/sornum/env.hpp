#pragma once

#include "sornum/flake.hpp"
#include "sornum/lattice.hpp"

#include <cstdint>
#include <vector>

namespace sornum {

// A contiguous circular run of Unum indices {start, start+1, ..., end}
// (mod |U|), or one of the distinguished sentinels.
struct IndexRange {
    enum class Kind : uint8_t { Empty, Full, Run };
    Kind kind = Kind::Empty;
    uint32_t start = 0;
    uint32_t end = 0;

    static IndexRange empty() { return {}; }
    static IndexRange full() { return {Kind::Full, 0, 0}; }
    static IndexRange run(uint32_t s, uint32_t e) { return {Kind::Run, s, e}; }

    friend bool operator==(const IndexRange& a, const IndexRange& b) {
        if (a.kind != b.kind) return false;
        if (a.kind != Kind::Run) return true;
        return a.start == b.start && a.end == b.end;
    }
    friend bool operator!=(const IndexRange& a, const IndexRange& b) { return !(a == b); }
};

// The enumerated circle of Unums over a lattice P: 8*(|P|+1) Flakes,
// alternating singletons (even indices) and the open intervals between them,
// counter-clockwise from {0} through {1}, {inf}, {-1} and back.
class UnumEnv {
public:
    explicit UnumEnv(Lattice lat);

    size_t size() const { return unums_.size(); }
    const Flake& unum(size_t i) const { return unums_[i]; }
    const Lattice& lattice() const { return lat_; }

    // index of the unique Unum containing x
    size_t index_of(const RStar& x) const;

    // The Unums covering f: minimal at finite endpoints; intervals reaching
    // infinity also cover the {inf} Unum (closure on the circle). Full runs
    // come back as Run(0, size-1); the Full sentinel is reserved for the
    // SORN layer's undefined-result rule.
    IndexRange blur(const Flake& f) const;

    size_t neg_index(size_t i) const { return (size() - i) % size(); }
    size_t inv_index(size_t i) const { return (size() / 2 + size() - i) % size(); }
    size_t abs_index(size_t i) const { return i <= size() / 2 ? i : size() - i; }

private:
    Lattice lat_;
    std::vector<Flake> unums_;
    std::vector<RStar> sing_;  // value of the singleton at index 2j, circle order
};

// |P| for a machine environment with n_b bits: 2^(n_b-3) - 1
unsigned long lattice_size_from_bits(unsigned n_b);

}  // namespace sornum

#pragma once

#include "sornum/env.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace sornum {

// One table cell: a circular run (start, end) or a sentinel.
struct TableEntry {
    uint16_t a = 0xFFFF;
    uint16_t b = 0xFFFE;
    friend bool operator==(const TableEntry& x, const TableEntry& y) {
        return x.a == y.a && x.b == y.b;
    }
};

inline constexpr TableEntry kEntryFull{0xFFFF, 0xFFFF};
inline constexpr TableEntry kEntryEmpty{0xFFFF, 0xFFFE};

TableEntry encode_entry(const IndexRange& r, size_t n_unums);
IndexRange decode_entry(const TableEntry& e, size_t n_unums);

// Precomputed arithmetic for one environment: triangular add/mul tables over
// index pairs i <= j, the ln table, and the unary index maps. n_b/n_s are 0
// for custom (non-machine) lattices, which cannot be serialized.
struct TableSet {
    uint8_t n_b = 0;
    uint8_t n_s = 0;
    std::vector<std::string> lattice;  // exact decimal strings
    uint32_t n_unums = 0;
    std::vector<TableEntry> add_table;
    std::vector<TableEntry> mul_table;
    std::vector<TableEntry> log_table;
    std::vector<uint16_t> neg_map;
    std::vector<uint16_t> inv_map;
    std::vector<uint16_t> abs_map;

    // position of pair (i, j), i <= j, in the row-major triangle
    size_t tri_index(size_t i, size_t j) const {
        return i * n_unums - i * (i - 1) / 2 + (j - i);
    }

    friend bool operator==(const TableSet&, const TableSet&) = default;
};

// Fills every table by direct evaluation: blur(fadd/fmul(u_i, u_j)), with
// undefined (Empty) results stored as the Full sentinel; ln entries for
// positive Unums, Empty sentinel otherwise. threads = 0 picks the hardware
// count; any schedule produces identical tables.
TableSet generate(const UnumEnv& env, mpfr_prec_t ln_bits = 64, unsigned threads = 0);

// Machine environment (n_b bits, n_s significant decimal digits) over the
// decade lattice with 2^(n_b-3)-1 points. n_b must be in [3, 16].
TableSet generate_machine(unsigned n_b, unsigned n_s, mpfr_prec_t ln_bits = 64,
                          unsigned threads = 0);
UnumEnv machine_env(unsigned n_b, unsigned n_s);

// add+mul payload in bits under 2*n_b-bit-per-entry accounting:
// n_b * 2^(n_b+1) * (2^n_b + 1)
unsigned long long table_size_bits(unsigned n_b);

struct TableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadMagicError : TableError {
    using TableError::TableError;
};
struct BadVersionError : TableError {
    using TableError::TableError;
};
struct TruncatedError : TableError {
    using TableError::TableError;
};
struct BadChecksumError : TableError {
    using TableError::TableError;
};

// Binary table file: magic "SORN", version u16, n_b u8, n_s u8, lattice
// count u32 + length-prefixed decimal strings, add/mul/log tables, the three
// index maps, trailing CRC32. Little-endian throughout.
void serialize(const TableSet& t, std::ostream& out);
TableSet deserialize(std::istream& in);
void save_tables(const TableSet& t, const std::string& path);
TableSet load_tables(const std::string& path);

}  // namespace sornum

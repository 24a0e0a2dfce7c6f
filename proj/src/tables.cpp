#include "sornum/tables.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>
#include <istream>
#include <ostream>
#include <thread>

namespace sornum {

TableEntry encode_entry(const IndexRange& r, size_t n_unums) {
    switch (r.kind) {
        case IndexRange::Kind::Empty: return kEntryEmpty;
        case IndexRange::Kind::Full: return kEntryFull;
        case IndexRange::Kind::Run: break;
    }
    (void)n_unums;
    return {static_cast<uint16_t>(r.start), static_cast<uint16_t>(r.end)};
}

IndexRange decode_entry(const TableEntry& e, size_t n_unums) {
    if (e == kEntryFull) return IndexRange::full();
    if (e == kEntryEmpty) return IndexRange::empty();
    if (e.a >= n_unums || e.b >= n_unums)
        throw TableError("table entry index out of range");
    return IndexRange::run(e.a, e.b);
}

namespace {

TableEntry blurred_or_full(const UnumEnv& env, const Flake& f) {
    if (f.is_empty()) return kEntryFull;  // undefined result widens to R*
    return encode_entry(env.blur(f), env.size());
}

}  // namespace

TableSet generate(const UnumEnv& env, mpfr_prec_t ln_bits, unsigned threads) {
    const size_t n = env.size();
    TableSet t;
    t.n_unums = static_cast<uint32_t>(n);
    t.lattice.reserve(env.lattice().points.size());
    for (const Rational& p : env.lattice().points) t.lattice.push_back(decimal_string(p));

    const size_t tri = n * (n + 1) / 2;
    t.add_table.resize(tri);
    t.mul_table.resize(tri);
    t.log_table.resize(n);
    t.neg_map.resize(n);
    t.inv_map.resize(n);
    t.abs_map.resize(n);

    for (size_t i = 0; i < n; ++i) {
        t.neg_map[i] = static_cast<uint16_t>(env.neg_index(i));
        t.inv_map[i] = static_cast<uint16_t>(env.inv_index(i));
        t.abs_map[i] = static_cast<uint16_t>(env.abs_index(i));
    }

    MonotoneMap ln = ln_map(ln_bits);
    for (size_t i = 0; i < n; ++i) {
        // ln entries only for Unums inside (0, inf)
        if (i >= 1 && i < n / 2) {
            auto img = feval_monotone(ln, env.unum(i));
            t.log_table[i] = img ? encode_entry(env.blur(*img), n) : kEntryEmpty;
        } else {
            t.log_table[i] = kEntryEmpty;
        }
    }

    unsigned nthreads = threads ? threads : std::thread::hardware_concurrency();
    if (nthreads == 0) nthreads = 1;
    auto fill_rows = [&](size_t first, size_t last) {
        for (size_t i = first; i < last; ++i) {
            size_t base = t.tri_index(i, i);
            for (size_t j = i; j < n; ++j) {
                t.add_table[base + j - i] = blurred_or_full(env, fadd(env.unum(i), env.unum(j)));
                t.mul_table[base + j - i] = blurred_or_full(env, fmul(env.unum(i), env.unum(j)));
            }
        }
    };
    if (nthreads == 1 || n < 64) {
        fill_rows(0, n);
    } else {
        // interleave rows in blocks so the (shrinking) rows spread evenly
        std::vector<std::thread> pool;
        const size_t block = 16;
        for (unsigned w = 0; w < nthreads; ++w) {
            pool.emplace_back([&, w]() {
                for (size_t b = w * block; b < n; b += nthreads * block)
                    fill_rows(b, std::min(n, b + block));
            });
        }
        for (auto& th : pool) th.join();
    }
    return t;
}

UnumEnv machine_env(unsigned n_b, unsigned n_s) {
    if (n_b < 3 || n_b > 16) throw std::invalid_argument("n_b must be in [3, 16]");
    if (n_s < 1) throw std::invalid_argument("n_s must be >= 1");
    return UnumEnv(decade_lattice(lattice_size_from_bits(n_b), n_s));
}

TableSet generate_machine(unsigned n_b, unsigned n_s, mpfr_prec_t ln_bits, unsigned threads) {
    TableSet t = generate(machine_env(n_b, n_s), ln_bits, threads);
    t.n_b = static_cast<uint8_t>(n_b);
    t.n_s = static_cast<uint8_t>(n_s);
    return t;
}

unsigned long long table_size_bits(unsigned n_b) {
    if (n_b < 3) throw std::invalid_argument("n_b must be >= 3");
    unsigned long long n = 1ull << n_b;
    return static_cast<unsigned long long>(n_b) * 2 * n * (n + 1);
}

namespace {

constexpr char kMagic[4] = {'S', 'O', 'R', 'N'};
constexpr uint16_t kVersion = 1;

void put16(std::string& s, uint16_t v) {
    s.push_back(static_cast<char>(v & 0xFF));
    s.push_back(static_cast<char>(v >> 8));
}

void put32(std::string& s, uint32_t v) {
    for (int k = 0; k < 4; ++k) s.push_back(static_cast<char>((v >> (8 * k)) & 0xFF));
}

struct Reader {
    const std::string& buf;
    size_t pos = 0;
    void need(size_t k) const {
        if (pos + k > buf.size()) throw TruncatedError("table file truncated");
    }
    uint8_t u8() {
        need(1);
        return static_cast<uint8_t>(buf[pos++]);
    }
    uint16_t u16() {
        need(2);
        uint16_t v = static_cast<uint8_t>(buf[pos]) |
                     (static_cast<uint16_t>(static_cast<uint8_t>(buf[pos + 1])) << 8);
        pos += 2;
        return v;
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int k = 0; k < 4; ++k)
            v |= static_cast<uint32_t>(static_cast<uint8_t>(buf[pos + k])) << (8 * k);
        pos += 4;
        return v;
    }
    std::string bytes(size_t k) {
        need(k);
        std::string s = buf.substr(pos, k);
        pos += k;
        return s;
    }
};

}  // namespace

void serialize(const TableSet& t, std::ostream& out) {
    if (t.n_b == 0)
        throw std::invalid_argument("only machine table sets are serializable");
    std::string buf;
    buf.append(kMagic, 4);
    put16(buf, kVersion);
    buf.push_back(static_cast<char>(t.n_b));
    buf.push_back(static_cast<char>(t.n_s));
    put32(buf, static_cast<uint32_t>(t.lattice.size()));
    for (const std::string& p : t.lattice) {
        put16(buf, static_cast<uint16_t>(p.size()));
        buf.append(p);
    }
    auto put_entries = [&](const std::vector<TableEntry>& v) {
        for (const TableEntry& e : v) {
            put16(buf, e.a);
            put16(buf, e.b);
        }
    };
    put_entries(t.add_table);
    put_entries(t.mul_table);
    put_entries(t.log_table);
    for (uint16_t v : t.neg_map) put16(buf, v);
    for (uint16_t v : t.inv_map) put16(buf, v);
    for (uint16_t v : t.abs_map) put16(buf, v);

    uint32_t crc = static_cast<uint32_t>(
        crc32(0, reinterpret_cast<const Bytef*>(buf.data()), static_cast<uInt>(buf.size())));
    put32(buf, crc);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw TableError("write failure");
}

TableSet deserialize(std::istream& in) {
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (buf.size() < 4 || std::memcmp(buf.data(), kMagic, 4) != 0)
        throw BadMagicError("bad magic");
    if (buf.size() < 4 + 2 + 2 + 4 + 4) throw TruncatedError("table file truncated");

    uint32_t stored_crc = 0;
    for (int k = 0; k < 4; ++k)
        stored_crc |= static_cast<uint32_t>(static_cast<uint8_t>(buf[buf.size() - 4 + k]))
                      << (8 * k);
    uint32_t crc = static_cast<uint32_t>(crc32(
        0, reinterpret_cast<const Bytef*>(buf.data()), static_cast<uInt>(buf.size() - 4)));
    if (crc != stored_crc) throw BadChecksumError("checksum mismatch");

    Reader r{buf};
    r.pos = 4;
    uint16_t version = r.u16();
    if (version != kVersion) throw BadVersionError("unsupported version");

    TableSet t;
    t.n_b = r.u8();
    t.n_s = r.u8();
    uint32_t np = r.u32();
    if (np > (1u << 16)) throw TableError("implausible lattice size");
    t.lattice.reserve(np);
    for (uint32_t i = 0; i < np; ++i) {
        uint16_t len = r.u16();
        t.lattice.push_back(r.bytes(len));
    }
    t.n_unums = 8 * (np + 1);
    const size_t n = t.n_unums;
    const size_t tri = n * (n + 1) / 2;
    auto get_entries = [&](std::vector<TableEntry>& v, size_t count) {
        v.resize(count);
        for (size_t i = 0; i < count; ++i) {
            v[i].a = r.u16();
            v[i].b = r.u16();
        }
    };
    get_entries(t.add_table, tri);
    get_entries(t.mul_table, tri);
    get_entries(t.log_table, n);
    auto get_map = [&](std::vector<uint16_t>& v) {
        v.resize(n);
        for (size_t i = 0; i < n; ++i) v[i] = r.u16();
    };
    get_map(t.neg_map);
    get_map(t.inv_map);
    get_map(t.abs_map);
    if (r.pos != buf.size() - 4) throw TableError("trailing bytes in table file");
    return t;
}

void save_tables(const TableSet& t, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw TableError("cannot open '" + path + "' for writing");
    serialize(t, f);
}

TableSet load_tables(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw TableError("cannot open '" + path + "'");
    return deserialize(f);
}

}  // namespace sornum

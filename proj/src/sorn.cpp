#include "sornum/sorn.hpp"

#include <algorithm>
#include <stdexcept>

namespace sornum {

void Sorn::clear() { std::fill(w_.begin(), w_.end(), 0); }

void Sorn::set_all() {
    std::fill(w_.begin(), w_.end(), ~uint64_t{0});
    if (n_ % 64) w_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
}

bool Sorn::none() const {
    for (uint64_t w : w_)
        if (w) return false;
    return true;
}

bool Sorn::all() const {
    if (n_ == 0) return true;
    for (size_t k = 0; k + 1 < w_.size(); ++k)
        if (w_[k] != ~uint64_t{0}) return false;
    uint64_t last = (n_ % 64) ? (uint64_t{1} << (n_ % 64)) - 1 : ~uint64_t{0};
    return w_.back() == last;
}

size_t Sorn::count() const {
    size_t c = 0;
    for (uint64_t w : w_) c += static_cast<size_t>(__builtin_popcountll(w));
    return c;
}

void Sorn::set_range(size_t start, size_t end) {
    if (start <= end) {
        for (size_t i = start; i <= end; ++i) set(i);
    } else {
        for (size_t i = start; i < n_; ++i) set(i);
        for (size_t i = 0; i <= end; ++i) set(i);
    }
}

void Sorn::or_range(const IndexRange& r) {
    switch (r.kind) {
        case IndexRange::Kind::Empty: return;
        case IndexRange::Kind::Full: set_all(); return;
        case IndexRange::Kind::Run: set_range(r.start, r.end); return;
    }
}

Sorn& Sorn::operator|=(const Sorn& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
}

Sorn& Sorn::operator&=(const Sorn& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
}

std::vector<size_t> Sorn::set_bits() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < w_.size(); ++k) {
        uint64_t w = w_[k];
        while (w) {
            unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
            out.push_back(64 * k + b);
            w &= w - 1;
        }
    }
    return out;
}

Runtime::Runtime(UnumEnv env, TableSet tables)
    : env_(std::move(env)), tables_(std::move(tables)) {
    const size_t n = env_.size();
    if (tables_.n_unums != n) throw std::invalid_argument("tables do not match environment size");
    if (tables_.lattice.size() != env_.lattice().points.size())
        throw std::invalid_argument("tables do not match environment lattice");
    for (size_t i = 0; i < tables_.lattice.size(); ++i)
        if (decimal_string(env_.lattice().points[i]) != tables_.lattice[i])
            throw std::invalid_argument("tables were generated for a different lattice");
    const size_t tri = n * (n + 1) / 2;
    if (tables_.add_table.size() != tri || tables_.mul_table.size() != tri ||
        tables_.log_table.size() != n || tables_.neg_map.size() != n ||
        tables_.inv_map.size() != n || tables_.abs_map.size() != n)
        throw std::invalid_argument("table payload sizes inconsistent");
}

Runtime Runtime::load(const std::string& path) {
    TableSet t = load_tables(path);
    Lattice lat;
    lat.points.reserve(t.lattice.size());
    for (const std::string& s : t.lattice) lat.points.push_back(rational_from_decimal(s));
    return Runtime(UnumEnv(std::move(lat)), std::move(t));
}

void Runtime::check(const Sorn& s) const {
    if (s.size() != env_.size()) throw std::invalid_argument("SORN size mismatch");
}

Sorn Runtime::uset() const {
    Sorn s(env_.size());
    s.set_all();
    return s;
}

Sorn Runtime::blur(const Flake& f) const {
    Sorn s(env_.size());
    s.or_range(env_.blur(f));
    return s;
}

Sorn Runtime::dual(const Sorn& a, const Sorn& b, Dep dep, const std::vector<TableEntry>& table,
                   const std::vector<uint16_t>* pair_map) const {
    check(a);
    check(b);
    const size_t n = env_.size();
    Sorn out(n);
    auto apply = [&](size_t i, size_t j, bool& full, bool& undef) {
        const TableEntry& e = table[tables_.tri_index(std::min(i, j), std::max(i, j))];
        if (e == kEntryFull) {
            (strict_empty_ ? undef : full) = true;
            return;
        }
        if (e == kEntryEmpty) return;
        out.or_range(decode_entry(e, n));
    };

    bool full = false, undef = false;
    std::vector<size_t> ai = a.set_bits();
    if (dep == Dep::dependent) {
        // same-variable pairing: bit i of the first operand with its mapped
        // partner in the (already negated/inverted) second operand
        for (size_t i : ai) {
            size_t j = pair_map ? (*pair_map)[i] : i;
            if (!b.test(j)) continue;
            apply(i, j, full, undef);
            if (undef) return uemp();
            if (full) return uset();
        }
    } else {
        std::vector<size_t> bi = b.set_bits();
        for (size_t i : ai) {
            for (size_t j : bi) {
                apply(i, j, full, undef);
                if (undef) return uemp();
                if (full) return uset();
            }
            if (!strict_empty_ && out.all()) return out;
        }
    }
    return out;
}

Sorn Runtime::uadd(const Sorn& a, const Sorn& b, Dep dep) const {
    return dual(a, b, dep, tables_.add_table, nullptr);
}

Sorn Runtime::usub(const Sorn& a, const Sorn& b, Dep dep) const {
    return dual(a, uneg(b), dep, tables_.add_table, &tables_.neg_map);
}

Sorn Runtime::umul(const Sorn& a, const Sorn& b, Dep dep) const {
    return dual(a, b, dep, tables_.mul_table, nullptr);
}

Sorn Runtime::udiv(const Sorn& a, const Sorn& b, Dep dep) const {
    return dual(a, uinv(b), dep, tables_.mul_table, &tables_.inv_map);
}

namespace {

Sorn permute(const Sorn& a, const std::vector<uint16_t>& map, size_t n) {
    Sorn out(n);
    for (size_t i : a.set_bits()) out.set(map[i]);
    return out;
}

}  // namespace

Sorn Runtime::uneg(const Sorn& a) const {
    check(a);
    return permute(a, tables_.neg_map, env_.size());
}

Sorn Runtime::uinv(const Sorn& a) const {
    check(a);
    return permute(a, tables_.inv_map, env_.size());
}

Sorn Runtime::uabs(const Sorn& a) const {
    check(a);
    return permute(a, tables_.abs_map, env_.size());
}

Sorn Runtime::ulog(const Sorn& a) const {
    check(a);
    const size_t n = env_.size();
    // any strictly negative Unum poisons the whole set
    for (size_t i : a.set_bits())
        if (i > n / 2) return uemp();
    Sorn out(n);
    for (size_t i : a.set_bits()) {
        if (i == 0 || i == n / 2) {
            // ln tends to the projective infinity both at 0 and at inf
            out.set(n / 2);
            continue;
        }
        const TableEntry& e = tables_.log_table[i];
        if (e == kEntryEmpty || e == kEntryFull) continue;
        out.or_range(decode_entry(e, n));
    }
    return out;
}

Sorn Runtime::ucut(const Sorn& a, const Sorn& b) const {
    check(a);
    check(b);
    Sorn out = a;
    out &= b;
    return out;
}

Sorn Runtime::uuni(const Sorn& a, const Sorn& b) const {
    check(a);
    check(b);
    Sorn out = a;
    out |= b;
    return out;
}

bool Runtime::uequ(const Sorn& a, const Sorn& b) const {
    check(a);
    check(b);
    return a == b;
}

bool Runtime::usup(const Sorn& a, const Sorn& b) const {
    check(a);
    check(b);
    Sorn u = a;
    u |= b;
    return u == a;
}

Sorn Runtime::uinterval(const Rational& lo, const Rational& hi) const {
    if (lo > hi) throw std::invalid_argument("uint needs lo <= hi");
    Sorn out = blur(Flake::singleton(RStar(lo)));
    out |= blur(Flake::interval(RStar(lo), RStar(hi)));
    out |= blur(Flake::singleton(RStar(hi)));
    return out;
}

Sorn Runtime::uinterval(double lo, double hi) const {
    return uinterval(rational_from_double(lo), rational_from_double(hi));
}

std::vector<std::pair<size_t, size_t>> Runtime::runs(const Sorn& a) const {
    check(a);
    const size_t n = env_.size();
    std::vector<std::pair<size_t, size_t>> out;
    if (a.none()) return out;
    if (a.all()) {
        out.emplace_back(0, n - 1);
        return out;
    }
    size_t z = 0;
    while (a.test(z)) ++z;
    bool in_run = false;
    size_t start = 0;
    for (size_t k = 1; k <= n; ++k) {
        size_t i = (z + k) % n;
        if (a.test(i)) {
            if (!in_run) {
                in_run = true;
                start = i;
            }
        } else if (in_run) {
            in_run = false;
            out.emplace_back(start, (i + n - 1) % n);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string fmt_rstar(const RStar& x) {
    return x.is_inf() ? "inf" : decimal_string(x.value());
}

}  // namespace

std::string Runtime::uout(const Sorn& a) const {
    check(a);
    if (a.none()) return "empty";
    if (a.all()) return "R*";
    std::string out;
    for (const auto& [s, e] : runs(a)) {
        if (!out.empty()) out += " u ";
        const Flake& us = env_.unum(s);
        const Flake& ue = env_.unum(e);
        out += us.is_singleton() ? "[" + fmt_rstar(us.point()) : "(" + fmt_rstar(us.lo());
        out += ", ";
        out += ue.is_singleton() ? fmt_rstar(ue.point()) + "]" : fmt_rstar(ue.hi()) + ")";
    }
    return out;
}

Hull Runtime::hull(const Sorn& a) const {
    check(a);
    Hull h;
    if (a.none()) {
        h.is_empty = true;
        return h;
    }
    if (a.all()) {
        h.is_full = true;
        return h;
    }
    const size_t n = env_.size();
    auto rs = runs(a);
    // complement of the largest empty gap; ties break on the earliest run
    size_t best = 0, best_gap = 0;
    for (size_t t = 0; t < rs.size(); ++t) {
        size_t next = (t + 1) % rs.size();
        size_t gap = (rs[next].first + n - rs[t].second - 1) % n;
        if (gap > best_gap) {
            best_gap = gap;
            best = t;
        }
    }
    size_t start = rs[(best + 1) % rs.size()].first;
    size_t end = rs[best].second;
    const Flake& us = env_.unum(start);
    const Flake& ue = env_.unum(end);
    if (us.is_singleton()) {
        h.lo = us.point();
        h.lo_open = false;
    } else {
        h.lo = us.lo();
        h.lo_open = true;
    }
    if (ue.is_singleton()) {
        h.hi = ue.point();
        h.hi_open = false;
    } else {
        h.hi = ue.hi();
        h.hi_open = true;
    }
    return h;
}

}  // namespace sornum

#pragma once

#include "sornum/sorn.hpp"

#include <vector>

namespace sornum {

// The four numerical experiments, in plain binary64 and in table-driven
// SORN arithmetic. Float rows are (step-or-offset, value); SORN rows carry
// the full bitset so callers can print hulls or exact unions.

struct FloatRow {
    int n;
    double value;
};

struct SornRow {
    int n;
    Sorn value;
};

// ln(|3*(1-x)+1|) over the 21 binary64 values around 4/3 (offsets in ulps,
// n = -10..10)
std::vector<FloatRow> spike_float();

// u_n = 111 - 1130/u_{n-1} + 3000/(u_{n-1}*u_{n-2}), u_0 = 2, u_1 = -4;
// n = 0..25
std::vector<FloatRow> devil_float();

// a_n = a_{n-1}*n - 1 from a_0 ~ e-1; n = 0..25
std::vector<FloatRow> bank_float();

// F(X) = LN(|{3} (x) ({1} (+) -X) (+) {1}|) for every Unum X in
// [1/1.2, 1.9]; n is the Unum index
std::vector<SornRow> spike_unum(const Runtime& rt);

// the devil recurrence with dependency-aware division; n = 0..25
std::vector<SornRow> devil_unum(const Runtime& rt);

// A_0 = uint(1.7, 1.8), A_n = A_{n-1} (x) {n} (+) -{1}; n = 0..25
std::vector<SornRow> bank_unum(const Runtime& rt);

// partial sums E_n = sum_{k<=n} 1/k! via dual ops; n = 0..20
std::vector<SornRow> euler_unum(const Runtime& rt, int n_max = 20);

}  // namespace sornum

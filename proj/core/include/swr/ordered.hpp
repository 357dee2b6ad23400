#pragma once

#include <vector>

#include "swr/criteria.hpp"
#include "swr/world.hpp"

namespace swr {

// Eventually-periodic welfare stream along a fixed enumeration of the
// population: prefix values followed by a repeating period.
struct PeriodicStream {
    std::vector<Rational> prefix;
    std::vector<Rational> period; // nonempty

    // 1-based position.
    const Rational& at(std::uint64_t n) const;
};

void validate_stream(const PeriodicStream& s);

// Catching Up: w weakly above v iff the partial-sum difference
// S_N = sum_{i<=N} (w_i - v_i) is eventually >= 0. Decided exactly from the
// per-super-period drift and the residue-class values of S.
Verdict cu_compare(const PeriodicStream& w, const PeriodicStream& v);

// Overtaking: strictly better iff S_N eventually > 0; equivalent iff S_N is
// eventually 0; the weak relation is the union of the two.
Verdict ot_compare(const PeriodicStream& w, const PeriodicStream& v);

// Forget the enumeration: one cell per distinct value; values recurring in
// the period get omega cells, values confined to the prefix finite ones.
World forget_order(const PeriodicStream& s);

} // namespace swr

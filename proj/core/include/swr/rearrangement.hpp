#pragma once

#include <map>
#include <utility>

#include "swr/world.hpp"

namespace swr {

// A realizable permutation between two cell structures: a matrix of
// cardinals whose rows sum to the source cell sizes and whose columns sum to
// the target cell sizes. Finite-support permutations are flows whose
// off-diagonal mass is finite.
struct Rearrangement {
    Population source;
    Population target;
    std::map<std::pair<CellId, CellId>, Cardinal> flow; // (source, target) -> mass

    static Rearrangement identity(const Population& p);

    // Swap the full contents of cells a and b (sizes must match), fix the rest.
    static Rearrangement swap_cells(const Population& p, const CellId& a, const CellId& b);

    Rearrangement inverse() const;

    bool is_finite_support() const; // off-diagonal mass finite (matching ids)
};

// Throws FlowError if row/column sums violate the invariant.
void validate_rearrangement(const Rearrangement& r);

// Image world: each target cell's value is the flow-weighted image of source
// values; a target cell receiving distinct values is a FlowError. Tails may
// only be moved whole-cell.
World apply_rearrangement(const Rearrangement& r, const World& w);

// True when the two worlds have identical cardinal-weighted value multisets
// (i.e. some rearrangement maps one onto the other).
bool rearrangement_equivalent(const World& a, const World& b);

} // namespace swr

#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "swr/population.hpp"
#include "swr/rational.hpp"
#include "swr/tail.hpp"

namespace swr {

// A cell carries one rational welfare level, or a tail descriptor when the
// cell is omega-sized.
using CellValue = std::variant<Rational, TailDescriptor>;

bool cell_value_equal(const CellValue& a, const CellValue& b);

class World {
  public:
    World() = default;
    World(Population pop, std::map<CellId, CellValue> assignment);

    const Population& population() const { return pop_; }
    const CellValue& value(const CellId& id) const;
    const std::map<CellId, CellValue>& assignment() const { return values_; }

    // Member of W_F: every cell carries a plain rational (a Constant
    // descriptor counts as plain).
    bool is_finite_valued() const;

    // The rational of a cell, if it carries one (Constant descriptors
    // included).
    std::optional<Rational> plain_value(const CellId& id) const;

    World with_value(const CellId& id, CellValue v) const;

    friend bool operator==(const World& a, const World& b);

  private:
    Population pop_;
    std::map<CellId, CellValue> values_;
};

// Merges cells that carry equal values in *both* worlds; the pair stays
// aligned and every comparator verdict is unchanged.
std::pair<World, World> canonicalize_pair(const World& w, const World& v);
World canonicalize(const World& w);

// Declared common refinement of two populations: each refined cell names its
// parent cell on each side; parent sizes must be the cardinal sums of their
// parts.
struct Correspondence {
    Population refined;
    std::map<CellId, CellId> left_parent;
    std::map<CellId, CellId> right_parent;
};

std::pair<World, World> align(const World& w, const World& v);
std::pair<World, World> align(const World& w, const World& v, const Correspondence& c);

// Pointwise affine combination; weights must be >= 0 and sum to exactly 1.
World convex_combine(const std::vector<std::pair<Rational, World>>& pairs);

// Pointwise difference w - v as a world over the shared population.
World world_sub(const World& w, const World& v);
World zero_world_like(const World& w);

struct RestrictedTransfer {
    CellId donor;
    CellId recipient;
    Rational amount;     // > 0
    Cardinal paired_count; // omega = the whole cell on both sides
};

World apply_restricted_transfers(const World& w, const std::vector<RestrictedTransfer>& ts);

} // namespace swr

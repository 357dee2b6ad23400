#pragma once

#include <map>
#include <string>
#include <vector>

#include "swr/cardinal.hpp"

namespace swr {

using CellId = std::string;

struct Cell {
    CellId id;
    Cardinal size;

    friend bool operator==(const Cell&, const Cell&) = default;
};

// Finite labeled cell partition of the countably infinite population.
// Cell order is representational only; semantics never depend on it.
class Population {
  public:
    Population() = default;
    explicit Population(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    bool has(const CellId& id) const { return index_.count(id) != 0; }
    Cardinal size_of(const CellId& id) const;

    // Equality as partitions: same id -> size map, ignoring order.
    friend bool operator==(const Population& a, const Population& b);

  private:
    std::vector<Cell> cells_;
    std::map<CellId, size_t> index_;
};

} // namespace swr

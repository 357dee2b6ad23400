#include "swr/population.hpp"

#include "swr/errors.hpp"

namespace swr {

Population::Population(std::vector<Cell> cells) : cells_(std::move(cells)) {
    bool any_omega = false;
    for (size_t i = 0; i < cells_.size(); ++i) {
        const Cell& c = cells_[i];
        if (c.size.is_zero())
            throw DomainError("cell '" + c.id + "' has size zero");
        if (!index_.emplace(c.id, i).second)
            throw DomainError("duplicate cell id '" + c.id + "'");
        any_omega = any_omega || c.size.is_omega();
    }
    if (!any_omega)
        throw DomainError("population must contain at least one omega cell");
}

Cardinal Population::size_of(const CellId& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw DomainError("unknown cell id '" + id + "'");
    return cells_[it->second].size;
}

bool operator==(const Population& a, const Population& b) {
    if (a.cells_.size() != b.cells_.size())
        return false;
    for (const Cell& c : a.cells_) {
        auto it = b.index_.find(c.id);
        if (it == b.index_.end() || b.cells_[it->second].size != c.size)
            return false;
    }
    return true;
}

} // namespace swr

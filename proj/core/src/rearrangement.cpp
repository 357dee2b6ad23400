#include "swr/rearrangement.hpp"

#include <algorithm>

#include "swr/errors.hpp"

namespace swr {

Rearrangement Rearrangement::identity(const Population& p) {
    Rearrangement r{p, p, {}};
    for (const Cell& c : p.cells())
        r.flow.emplace(std::make_pair(c.id, c.id), c.size);
    return r;
}

Rearrangement Rearrangement::swap_cells(const Population& p, const CellId& a, const CellId& b) {
    if (!(p.size_of(a) == p.size_of(b)))
        throw FlowError("swap_cells requires equal cell sizes");
    Rearrangement r{p, p, {}};
    for (const Cell& c : p.cells()) {
        if (c.id == a)
            r.flow.emplace(std::make_pair(a, b), c.size);
        else if (c.id == b)
            r.flow.emplace(std::make_pair(b, a), c.size);
        else
            r.flow.emplace(std::make_pair(c.id, c.id), c.size);
    }
    return r;
}

Rearrangement Rearrangement::inverse() const {
    Rearrangement r{target, source, {}};
    for (const auto& [key, mass] : flow)
        r.flow.emplace(std::make_pair(key.second, key.first), mass);
    return r;
}

bool Rearrangement::is_finite_support() const {
    for (const auto& [key, mass] : flow)
        if (key.first != key.second && mass.is_omega())
            return false;
    return true;
}

void validate_rearrangement(const Rearrangement& r) {
    std::map<CellId, std::vector<Cardinal>> rows, cols;
    for (const auto& [key, mass] : r.flow) {
        if (!r.source.has(key.first))
            throw FlowError("flow source cell '" + key.first + "' not in source population");
        if (!r.target.has(key.second))
            throw FlowError("flow target cell '" + key.second + "' not in target population");
        if (mass.is_zero())
            continue;
        rows[key.first].push_back(mass);
        cols[key.second].push_back(mass);
    }
    auto check = [](const Population& p, std::map<CellId, std::vector<Cardinal>>& sums,
                    const char* kind) {
        for (const Cell& c : p.cells()) {
            Cardinal total = Cardinal::finite(0);
            for (Cardinal m : sums[c.id])
                total = cardinal_add(total, m);
            if (!(total == c.size))
                throw FlowError(std::string(kind) + " sum of cell '" + c.id +
                                "' is " + total.to_string() + ", expected " +
                                c.size.to_string());
        }
    };
    check(r.source, rows, "row");
    check(r.target, cols, "column");
}

World apply_rearrangement(const Rearrangement& r, const World& w) {
    if (!(r.source == w.population()))
        throw FlowError("rearrangement source does not match the world's population");
    validate_rearrangement(r);

    std::map<CellId, size_t> row_entries, col_entries;
    for (const auto& [key, mass] : r.flow) {
        if (mass.is_zero())
            continue;
        row_entries[key.first]++;
        col_entries[key.second]++;
    }

    std::map<CellId, CellValue> out;
    for (const auto& [key, mass] : r.flow) {
        if (mass.is_zero())
            continue;
        const CellValue& v = w.value(key.first);
        if (std::holds_alternative<TailDescriptor>(v) &&
            (row_entries[key.first] > 1 || col_entries[key.second] > 1))
            throw FlowError("tail-valued cell '" + key.first + "' may only be moved whole-cell");
        auto [it, inserted] = out.emplace(key.second, v);
        if (!inserted && !cell_value_equal(it->second, v))
            throw FlowError("target cell '" + key.second +
                            "' would receive distinct values; refine the flow");
    }
    return World(r.target, std::move(out));
}

bool rearrangement_equivalent(const World& a, const World& b) {
    // Cardinal-weighted value multisets must match. Cardinal totals per value
    // are exact: finitely many omegas collapse to omega.
    auto profile = [](const World& w) {
        std::map<Rational, Cardinal> plain;
        std::vector<TailDescriptor> tails;
        for (const Cell& c : w.population().cells()) {
            if (auto p = w.plain_value(c.id)) {
                auto [it, inserted] = plain.emplace(*p, c.size);
                if (!inserted)
                    it->second = cardinal_add(it->second, c.size);
            } else {
                tails.push_back(std::get<TailDescriptor>(w.value(c.id)).normalized());
            }
        }
        return std::make_pair(plain, tails);
    };
    auto [pa, ta] = profile(a);
    auto [pb, tb] = profile(b);
    if (pa != pb || ta.size() != tb.size())
        return false;
    std::vector<bool> used(tb.size(), false);
    for (const auto& t : ta) {
        bool found = false;
        for (size_t i = 0; i < tb.size(); ++i) {
            if (!used[i] && t == tb[i]) {
                used[i] = true;
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

} // namespace swr

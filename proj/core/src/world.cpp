#include "swr/world.hpp"

#include <algorithm>

#include "swr/errors.hpp"

namespace swr {

namespace {

// Constant descriptors and plain rationals are the same value.
std::optional<Rational> as_plain(const CellValue& v) {
    if (const auto* r = std::get_if<Rational>(&v))
        return *r;
    const auto& t = std::get<TailDescriptor>(v);
    if (t.normalized().is_constant())
        return t.constant;
    return std::nullopt;
}

CellValue normalize_value(const CellValue& v) {
    if (auto p = as_plain(v))
        return *p;
    return std::get<TailDescriptor>(v).normalized();
}

} // namespace

bool cell_value_equal(const CellValue& a, const CellValue& b) {
    auto pa = as_plain(a), pb = as_plain(b);
    if (pa && pb)
        return *pa == *pb;
    if (pa || pb)
        return false;
    return std::get<TailDescriptor>(a) == std::get<TailDescriptor>(b);
}

World::World(Population pop, std::map<CellId, CellValue> assignment) : pop_(std::move(pop)) {
    for (const Cell& c : pop_.cells()) {
        auto it = assignment.find(c.id);
        if (it == assignment.end())
            throw DomainError("assignment missing cell '" + c.id + "'");
        CellValue v = normalize_value(it->second);
        if (std::holds_alternative<TailDescriptor>(v)) {
            if (c.size.is_finite())
                throw DomainError("tail descriptor on finite cell '" + c.id + "'");
            validate_tail(std::get<TailDescriptor>(v));
        }
        values_.emplace(c.id, std::move(v));
    }
    if (assignment.size() != pop_.cells().size())
        throw DomainError("assignment names cells outside the population");
}

const CellValue& World::value(const CellId& id) const {
    auto it = values_.find(id);
    if (it == values_.end())
        throw DomainError("unknown cell id '" + id + "'");
    return it->second;
}

bool World::is_finite_valued() const {
    for (const auto& [id, v] : values_) {
        (void)id;
        if (std::holds_alternative<TailDescriptor>(v))
            return false;
    }
    return true;
}

std::optional<Rational> World::plain_value(const CellId& id) const { return as_plain(value(id)); }

World World::with_value(const CellId& id, CellValue v) const {
    auto values = values_;
    values.at(id) = std::move(v);
    return World(pop_, std::move(values));
}

bool operator==(const World& a, const World& b) {
    if (!(a.pop_ == b.pop_))
        return false;
    for (const auto& [id, v] : a.values_)
        if (!cell_value_equal(v, b.value(id)))
            return false;
    return true;
}

std::pair<World, World> canonicalize_pair(const World& w, const World& v) {
    if (!(w.population() == v.population()))
        throw AlignmentError("canonicalize_pair requires aligned worlds");
    struct Group {
        CellId id;
        Cardinal size;
        CellValue wv, vv;
    };
    std::vector<Group> groups;
    for (const Cell& c : w.population().cells()) {
        const CellValue& wv = w.value(c.id);
        const CellValue& vv = v.value(c.id);
        bool merged = false;
        for (Group& g : groups) {
            if (cell_value_equal(g.wv, wv) && cell_value_equal(g.vv, vv) &&
                !std::holds_alternative<TailDescriptor>(g.wv) &&
                !std::holds_alternative<TailDescriptor>(g.vv)) {
                g.size = cardinal_add(g.size, c.size);
                if (c.id < g.id)
                    g.id = c.id;
                merged = true;
                break;
            }
        }
        if (!merged)
            groups.push_back({c.id, c.size, wv, vv});
    }
    std::vector<Cell> cells;
    std::map<CellId, CellValue> wa, va;
    for (const Group& g : groups) {
        cells.push_back({g.id, g.size});
        wa.emplace(g.id, g.wv);
        va.emplace(g.id, g.vv);
    }
    Population p(std::move(cells));
    return {World(p, std::move(wa)), World(p, std::move(va))};
}

World canonicalize(const World& w) { return canonicalize_pair(w, w).first; }

std::pair<World, World> align(const World& w, const World& v) {
    if (!(w.population() == v.population()))
        throw AlignmentError("worlds are over different populations and no "
                             "correspondence was supplied");
    return {w, v};
}

std::pair<World, World> align(const World& w, const World& v, const Correspondence& c) {
    // Each parent cell must be covered exactly by its declared parts.
    auto check_cover = [&](const Population& parent, const std::map<CellId, CellId>& parent_of,
                           const char* side) {
        std::map<CellId, Cardinal> covered;
        for (const Cell& part : c.refined.cells()) {
            auto it = parent_of.find(part.id);
            if (it == parent_of.end())
                throw AlignmentError(std::string("refined cell '") + part.id +
                                     "' has no parent on the " + side + " side");
            if (!parent.has(it->second))
                throw AlignmentError("unknown parent cell '" + it->second + "'");
            auto [pos, inserted] = covered.emplace(it->second, part.size);
            if (!inserted)
                pos->second = cardinal_add(pos->second, part.size);
        }
        for (const Cell& pc : parent.cells()) {
            auto it = covered.find(pc.id);
            if (it == covered.end() || !(it->second == pc.size))
                throw AlignmentError("parts of cell '" + pc.id + "' do not sum to its size");
        }
    };
    check_cover(w.population(), c.left_parent, "left");
    check_cover(v.population(), c.right_parent, "right");

    auto split_count = [&](const std::map<CellId, CellId>& parent_of, const CellId& parent) {
        size_t n = 0;
        for (const auto& [part, par] : parent_of)
            if (par == parent)
                ++n;
        return n;
    };
    std::map<CellId, CellValue> wa, va;
    for (const Cell& part : c.refined.cells()) {
        const CellId& wp = c.left_parent.at(part.id);
        const CellId& vp = c.right_parent.at(part.id);
        const CellValue& wv = w.value(wp);
        const CellValue& vv = v.value(vp);
        if (std::holds_alternative<TailDescriptor>(wv) && split_count(c.left_parent, wp) > 1)
            throw UnsupportedTailCombination("cannot split tail-valued cell '" + wp + "'");
        if (std::holds_alternative<TailDescriptor>(vv) && split_count(c.right_parent, vp) > 1)
            throw UnsupportedTailCombination("cannot split tail-valued cell '" + vp + "'");
        wa.emplace(part.id, wv);
        va.emplace(part.id, vv);
    }
    return {World(c.refined, std::move(wa)), World(c.refined, std::move(va))};
}

World convex_combine(const std::vector<std::pair<Rational, World>>& pairs) {
    if (pairs.empty())
        throw WeightError("empty combination");
    Rational total = 0;
    for (const auto& [a, wld] : pairs) {
        (void)wld;
        if (a < 0)
            throw WeightError("negative weight " + format_rational(a));
        total += a;
    }
    if (total != 1)
        throw WeightError("weights sum to " + format_rational(total) + ", expected 1");
    const Population& p = pairs.front().second.population();
    for (const auto& [a, wld] : pairs) {
        (void)a;
        if (!(wld.population() == p))
            throw AlignmentError("convex_combine requires aligned worlds");
    }
    std::map<CellId, CellValue> out;
    for (const Cell& c : p.cells()) {
        bool all_plain = true;
        for (const auto& [a, wld] : pairs) {
            (void)a;
            if (!wld.plain_value(c.id))
                all_plain = false;
        }
        if (all_plain) {
            Rational v = 0;
            for (const auto& [a, wld] : pairs)
                v += a * *wld.plain_value(c.id);
            out.emplace(c.id, v);
            continue;
        }
        TailDescriptor acc;
        for (const auto& [a, wld] : pairs) {
            if (a == 0)
                continue;
            const CellValue& cv = wld.value(c.id);
            TailDescriptor t = std::holds_alternative<Rational>(cv)
                                   ? TailDescriptor::constant_of(std::get<Rational>(cv))
                                   : std::get<TailDescriptor>(cv);
            if (t.has_harmonic())
                throw UnsupportedTailCombination(
                    "harmonic tails are outside the convex-combination closure");
            acc = tail_add(acc, tail_scale(a, t));
        }
        out.emplace(c.id, acc);
    }
    return World(p, std::move(out));
}

World world_sub(const World& w, const World& v) {
    if (!(w.population() == v.population()))
        throw AlignmentError("world_sub requires aligned worlds");
    std::map<CellId, CellValue> out;
    for (const Cell& c : w.population().cells()) {
        auto pw = w.plain_value(c.id), pv = v.plain_value(c.id);
        if (pw && pv) {
            out.emplace(c.id, Rational(*pw - *pv));
            continue;
        }
        auto as_tail = [](const CellValue& cv) {
            return std::holds_alternative<Rational>(cv)
                       ? TailDescriptor::constant_of(std::get<Rational>(cv))
                       : std::get<TailDescriptor>(cv);
        };
        out.emplace(c.id, tail_sub(as_tail(w.value(c.id)), as_tail(v.value(c.id))));
    }
    return World(w.population(), std::move(out));
}

World zero_world_like(const World& w) {
    std::map<CellId, CellValue> out;
    for (const Cell& c : w.population().cells())
        out.emplace(c.id, Rational(0));
    return World(w.population(), std::move(out));
}

World apply_restricted_transfers(const World& w, const std::vector<RestrictedTransfer>& ts) {
    // Mutable cell list; split cells keep the original id on the untouched
    // remainder so later transfers can keep referring to it.
    struct RCell {
        CellId id;
        Cardinal size;
        CellValue value;
    };
    std::vector<RCell> cells;
    for (const Cell& c : w.population().cells())
        cells.push_back({c.id, c.size, w.value(c.id)});

    size_t fresh = 0;
    auto find_cell = [&](const CellId& id) -> RCell& {
        for (RCell& c : cells)
            if (c.id == id)
                return c;
        throw TransferError("unknown cell '" + id + "'");
    };

    // Applies `delta` to paired individuals of one cell, splitting when the
    // pairing covers only part of it. paired == omega takes the whole cell.
    auto adjust = [&](const CellId& id, Cardinal paired, const Rational& delta) {
        RCell& c = find_cell(id);
        auto plain = as_plain(c.value);
        if (!plain)
            throw TransferError("transfers require rational-valued cells");
        if (paired > c.size)
            throw TransferError("paired count exceeds size of cell '" + id + "'");
        Rational after = *plain + delta;
        bool whole = paired.is_omega() || paired == c.size;
        if (whole) {
            c.value = after;
        } else {
            Cardinal rest = c.size.is_omega() ? Cardinal::omega()
                                              : Cardinal::finite(c.size.value() - paired.value());
            c.size = rest;
            // the input may already contain #t ids from an earlier transfer pass
            CellId nid;
            auto taken = [&](const CellId& cand) {
                for (const RCell& x : cells)
                    if (x.id == cand)
                        return true;
                return false;
            };
            do {
                nid = id + "#t" + std::to_string(fresh++);
            } while (taken(nid));
            cells.push_back({nid, paired, CellValue(after)});
        }
    };

    for (const RestrictedTransfer& t : ts) {
        if (t.amount <= 0)
            throw TransferError("transfer amount must be positive");
        if (t.paired_count.is_zero())
            continue;
        const RCell& donor = find_cell(t.donor);
        const RCell& recipient = find_cell(t.recipient);
        auto dv = as_plain(donor.value), rv = as_plain(recipient.value);
        if (!dv || !rv)
            throw TransferError("transfers require rational-valued cells");
        if (*dv <= 0)
            throw TransferError("donor cell '" + t.donor + "' must have positive value");
        if (*rv >= 0)
            throw TransferError("recipient cell '" + t.recipient + "' must have negative value");
        if (*dv - t.amount < 0)
            throw TransferError("donor would go negative");
        if (*rv + t.amount > 0)
            throw TransferError("recipient would go positive");
        adjust(t.donor, t.paired_count, -t.amount);
        adjust(t.recipient, t.paired_count, t.amount);
    }

    std::vector<Cell> pc;
    std::map<CellId, CellValue> assign;
    for (const RCell& c : cells) {
        pc.push_back({c.id, c.size});
        assign.emplace(c.id, c.value);
    }
    return World(Population(std::move(pc)), std::move(assign));
}

} // namespace swr

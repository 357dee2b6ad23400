#include "swr/generators.hpp"

#include <algorithm>

#include "swr/errors.hpp"

namespace swr {

namespace {

int draw(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(Rng& rng, int percent) { return draw(rng, 1, 100) <= percent; }

} // namespace

Rational random_rational(Rng& rng, const GenOptions& o) {
    int den = draw(rng, 1, o.max_denominator);
    int num = draw(rng, -o.max_magnitude * den, o.max_magnitude * den);
    return Rational(num, den);
}

Population random_population(Rng& rng, const GenOptions& o) {
    int n = draw(rng, o.min_cells, o.max_cells);
    std::vector<Cell> cells;
    bool have_omega = false;
    for (int i = 0; i < n; ++i) {
        bool omega = chance(rng, o.omega_percent) || (i == n - 1 && !have_omega);
        have_omega = have_omega || omega;
        cells.push_back({"c" + std::to_string(i),
                         omega ? Cardinal::omega()
                               : Cardinal::finite(
                                     static_cast<std::uint64_t>(draw(rng, 1, o.max_finite_size)))});
    }
    return Population(std::move(cells));
}

World random_world(Rng& rng, const Population& p, const GenOptions& o) {
    std::map<CellId, CellValue> assign;
    for (const Cell& c : p.cells()) {
        if (o.two_valued) {
            assign.emplace(c.id, Rational(draw(rng, 0, 1)));
            continue;
        }
        if (o.allow_tails && c.size.is_omega() && chance(rng, 25)) {
            Rational a = random_rational(rng, o);
            if (a == 0)
                a = 1;
            Rational r(draw(rng, 1, 3), 4); // 1/4, 1/2, 3/4
            if (chance(rng, 30))
                r = -r;
            assign.emplace(c.id, TailDescriptor::geometric_of(a, r));
            continue;
        }
        assign.emplace(c.id, random_rational(rng, o));
    }
    return World(p, std::move(assign));
}

std::pair<World, World> random_pair(Rng& rng, const GenOptions& o) {
    Population p = random_population(rng, o);
    World w = random_world(rng, p, o);
    World v = random_world(rng, p, o);
    return {std::move(w), std::move(v)};
}

Rational random_alpha(Rng& rng) {
    static const Rational lattice[] = {Rational(0),     Rational(1, 4), Rational(1, 3),
                                       Rational(1, 2),  Rational(2, 3), Rational(3, 4),
                                       Rational(1)};
    if (chance(rng, 60))
        return lattice[draw(rng, 0, 6)];
    int den = draw(rng, 2, 12);
    return Rational(draw(rng, 0, den), den);
}

std::vector<Rational> random_weights(Rng& rng, std::size_t n) {
    // n random positive integers normalized by their exact sum
    std::vector<Rational> w(n);
    Rational total = 0;
    for (auto& x : w) {
        x = Rational(draw(rng, 1, 12));
        total += x;
    }
    for (auto& x : w)
        x /= total;
    return w;
}

Refined random_refinement(Rng& rng, const Population& p,
                          const std::vector<const World*>& worlds) {
    Refined out;
    std::vector<Cell> cells;
    for (const Cell& c : p.cells()) {
        bool splittable = true;
        for (const World* w : worlds)
            if (!w->plain_value(c.id))
                splittable = false;
        int parts = splittable ? draw(rng, 1, 3) : 1;
        if (c.size.is_finite() && c.size.value() < static_cast<std::uint64_t>(parts))
            parts = static_cast<int>(c.size.value());
        if (parts == 1) {
            cells.push_back(c);
            out.parent[c.id] = c.id;
            continue;
        }
        if (c.size.is_omega()) {
            for (int i = 0; i < parts; ++i) {
                CellId id = c.id + "." + std::to_string(i);
                cells.push_back({id, Cardinal::omega()});
                out.parent[id] = c.id;
            }
        } else {
            std::uint64_t left = c.size.value();
            for (int i = 0; i < parts; ++i) {
                std::uint64_t take =
                    (i == parts - 1)
                        ? left
                        : static_cast<std::uint64_t>(
                              draw(rng, 1, static_cast<int>(left) - (parts - 1 - i)));
                CellId id = c.id + "." + std::to_string(i);
                cells.push_back({id, Cardinal::finite(take)});
                out.parent[id] = c.id;
                left -= take;
            }
        }
    }
    out.population = Population(std::move(cells));
    return out;
}

World inherit(const Refined& r, const World& w) {
    std::map<CellId, CellValue> assign;
    for (const Cell& c : r.population.cells())
        assign.emplace(c.id, w.value(r.parent.at(c.id)));
    return World(r.population, std::move(assign));
}

Rearrangement random_part_permutation(Rng& rng, const Population& p, bool finite_support) {
    // group cells by cardinality class and permute within groups
    std::map<Cardinal, std::vector<CellId>> groups;
    for (const Cell& c : p.cells())
        groups[c.size].push_back(c.id);
    Rearrangement r{p, p, {}};
    for (auto& [size, ids] : groups) {
        std::vector<CellId> image = ids;
        if (!(finite_support && size.is_omega()))
            std::shuffle(image.begin(), image.end(), rng);
        for (size_t i = 0; i < ids.size(); ++i)
            r.flow[{ids[i], image[i]}] = size;
    }
    return r;
}

PeriodicStream random_stream(Rng& rng, const GenOptions& o) {
    PeriodicStream s;
    int pl = draw(rng, 0, 3), pe = draw(rng, 1, 4);
    for (int i = 0; i < pl; ++i)
        s.prefix.push_back(random_rational(rng, o));
    for (int i = 0; i < pe; ++i)
        s.period.push_back(random_rational(rng, o));
    return s;
}

World dominating_world(Rng& rng, const World& w, const GenOptions& o) {
    const Population& p = w.population();
    std::map<CellId, CellValue> assign;
    std::vector<CellId> raised;
    if (o.two_valued) {
        // flip some 0-cells to 1; all-ones worlds have no strict dominator
        for (const Cell& c : p.cells()) {
            Rational v = *w.plain_value(c.id);
            bool flip = v == 0 && (chance(rng, 50) || raised.empty());
            if (flip)
                raised.push_back(c.id);
            assign.emplace(c.id, flip ? Rational(1) : v);
        }
        return World(p, std::move(assign));
    }
    for (const Cell& c : p.cells()) {
        const CellValue& v = w.value(c.id);
        bool raise = chance(rng, 40);
        if (raise) {
            Rational bump(draw(rng, 1, o.max_magnitude), draw(rng, 1, o.max_denominator));
            if (auto plain = w.plain_value(c.id))
                assign.emplace(c.id, *plain + bump);
            else
                assign.emplace(c.id, tail_shift(std::get<TailDescriptor>(v), bump));
            raised.push_back(c.id);
        } else {
            assign.emplace(c.id, v);
        }
    }
    if (raised.empty()) {
        // force one strict improvement
        const Cell& c = p.cells()[static_cast<size_t>(draw(
            rng, 0, static_cast<int>(p.cells().size()) - 1))];
        if (auto plain = w.plain_value(c.id))
            assign[c.id] = *plain + 1;
        else
            assign[c.id] = tail_shift(std::get<TailDescriptor>(w.value(c.id)), 1);
    }
    return World(p, std::move(assign));
}

std::pair<World, World> density_pair(Rng& rng, const GenOptions& o, bool both_sign_omega) {
    int n = std::max(1, draw(rng, o.min_cells, o.max_cells) - 2);
    std::vector<Cell> cells;
    for (int i = 0; i < n; ++i)
        cells.push_back({"c" + std::to_string(i),
                         Cardinal::finite(static_cast<std::uint64_t>(draw(rng, 1, o.max_finite_size)))});
    cells.push_back({"o0", Cardinal::omega()});
    cells.push_back({"o1", Cardinal::omega()});
    Population p(std::move(cells));
    std::map<CellId, CellValue> wa, va;
    for (int i = 0; i < n; ++i) {
        CellId id = "c" + std::to_string(i);
        wa.emplace(id, random_rational(rng, o));
        va.emplace(id, random_rational(rng, o));
    }
    Rational b0 = random_rational(rng, o), b1 = random_rational(rng, o);
    if (both_sign_omega) {
        Rational up(draw(rng, 1, o.max_magnitude)), down(draw(rng, 1, o.max_magnitude));
        wa.emplace("o0", b0 + up);
        va.emplace("o0", b0);
        wa.emplace("o1", b1 - down);
        va.emplace("o1", b1);
    } else {
        wa.emplace("o0", b0);
        va.emplace("o0", b0);
        wa.emplace("o1", b1);
        va.emplace("o1", b1);
    }
    return {World(p, std::move(wa)), World(p, std::move(va))};
}

} // namespace swr

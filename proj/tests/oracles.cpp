#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "swr/errors.hpp"

namespace swr::testing {

Rational q(const std::string& s) { return parse_rational(s); }

Population mk_pop(const std::vector<std::pair<std::string, std::string>>& cells) {
    std::vector<Cell> cs;
    for (const auto& [id, size] : cells)
        cs.push_back({id, parse_cardinal(size)});
    return Population(std::move(cs));
}

World mk_world(const Population& p,
               const std::vector<std::pair<std::string, CellValue>>& values) {
    std::map<CellId, CellValue> a;
    for (const auto& [id, v] : values)
        a.emplace(id, v);
    return World(p, std::move(a));
}

World mk_plain_world(const Population& p,
                     const std::vector<std::pair<std::string, std::string>>& values) {
    std::map<CellId, CellValue> a;
    for (const auto& [id, v] : values)
        a.emplace(id, parse_rational(v));
    return World(p, std::move(a));
}

Rational brute_force_sum(const std::vector<std::pair<Rational, std::uint64_t>>& blocks) {
    Rational total = 0;
    for (const auto& [delta, count] : blocks)
        for (std::uint64_t i = 0; i < count; ++i)
            total += delta;
    return total;
}

ExplicitPair expand_pair(const World& w, const World& v, std::uint64_t omega_truncation) {
    if (!(w.population() == v.population()))
        throw std::invalid_argument("expand_pair: populations differ");
    ExplicitPair out;
    for (const auto& cell : w.population().cells()) {
        auto a = w.plain_value(cell.id);
        auto b = v.plain_value(cell.id);
        if (!a || !b)
            throw std::invalid_argument("expand_pair: tail-valued cell");
        std::uint64_t n;
        if (cell.size.is_finite()) {
            n = cell.size.value();
        } else if (*a == *b) {
            n = omega_truncation;
        } else {
            throw std::invalid_argument("expand_pair: omega cell with nonzero delta");
        }
        for (std::uint64_t i = 0; i < n; ++i) {
            out.w.push_back(*a);
            out.v.push_back(*b);
        }
    }
    return out;
}

namespace {

// All size-k index subsets of [0, n), invoking f(sum of chosen values).
template <typename F>
void each_subset_sum(const std::vector<Rational>& vals, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    std::size_t n = vals.size();
    if (k > n)
        return;
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        Rational s = 0;
        for (std::size_t i : idx)
            s += vals[i];
        f(s);
        // next combination
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j)
                    idx[j] = idx[j - 1] + 1;
                goto next;
            }
        }
        break;
    next:;
    }
}

} // namespace

std::optional<bool> spd_quantifier_brute(const ExplicitPair& p, std::size_t max_k) {
    std::vector<Rational> gains, losses;
    for (std::size_t i = 0; i < p.w.size(); ++i) {
        Rational d = p.w[i] - p.v[i];
        if (d > 0)
            gains.push_back(d);
        else if (d < 0)
            losses.push_back(-d);
    }
    if (gains.empty() || losses.empty())
        return std::nullopt;
    for (std::size_t k = 1; k <= max_k; ++k) {
        if (k > gains.size() || k > losses.size())
            break;
        Rational min_gain_sum;
        bool have_g = false;
        each_subset_sum(gains, k, [&](const Rational& s) {
            if (!have_g || s < min_gain_sum) {
                min_gain_sum = s;
                have_g = true;
            }
        });
        Rational max_loss_sum;
        bool have_l = false;
        each_subset_sum(losses, k, [&](const Rational& s) {
            if (!have_l || s > max_loss_sum) {
                max_loss_sum = s;
                have_l = true;
            }
        });
        if (have_g && have_l && min_gain_sum < max_loss_sum)
            return false;
    }
    return true;
}

namespace {

// Sign-split of one delta source: finite explicit terms plus exact
// remainders, with flags for infinite mass / infinite count per side.
struct MassAccum {
    Rational pos = 0, neg = 0;  // finite masses (neg stored as absolute value)
    bool pos_inf = false, neg_inf = false;
    bool pos_count_inf = false, neg_count_inf = false;

    void add_term(const Rational& d) {
        if (d > 0)
            pos += d;
        else if (d < 0)
            neg += -d;
    }
    void add_rem(const Rational& pos_mass, const Rational& neg_mass) {
        if (pos_mass > 0) {
            pos += pos_mass;
            pos_count_inf = true;
        }
        if (neg_mass > 0) {
            neg += neg_mass;
            neg_count_inf = true;
        }
    }
    void add_inf(int sign) {
        if (sign > 0) {
            pos_inf = true;
            pos_count_inf = true;
        } else {
            neg_inf = true;
            neg_count_inf = true;
        }
    }
};

Rational pow_q(const Rational& r, std::uint64_t n) {
    Rational acc = 1, base = r;
    while (n) {
        if (n & 1)
            acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

// Accumulates one delta tail on an omega cell. Only the shapes the
// cross-validation generators emit are supported: at most one geometric term,
// or harmonic (optionally with a constant), plus finitely many exceptions.
void accumulate_tail(MassAccum& m, const TailDescriptor& t0, std::uint64_t horizon) {
    TailDescriptor t = t0.normalized();
    if (t.geometric.size() > 1)
        throw std::invalid_argument("oracle tail: more than one geometric term");
    std::uint64_t h = horizon;
    if (!t.exceptions.empty())
        h = std::max<std::uint64_t>(h, t.exceptions.rbegin()->first);
    if (t.constant != 0 && !t.geometric.empty()) {
        // extend until the geometric part is dominated by the constant
        const auto& g = t.geometric.front();
        while (rational_abs(g.a) * pow_q(rational_abs(g.r), h + 1) >= rational_abs(t.constant))
            ++h;
    }
    if (t.constant != 0 && t.harmonic != 0) {
        while (rational_abs(t.harmonic) / Rational(h + 1) >= rational_abs(t.constant))
            ++h;
    }
    for (std::uint64_t n = 1; n <= h; ++n)
        m.add_term(t.term(n));
    // remainder beyond h
    if (t.constant != 0) {
        m.add_inf(sign_of(t.constant));
        return;
    }
    if (t.harmonic != 0) {
        m.add_inf(sign_of(t.harmonic));
        return;
    }
    if (t.geometric.empty())
        return;
    const auto& g = t.geometric.front();
    if (g.r > 0) {
        Rational mass = rational_abs(g.a) * pow_q(g.r, h + 1) / (1 - g.r);
        if (g.a > 0)
            m.add_rem(mass, 0);
        else
            m.add_rem(0, mass);
    } else {
        // alternating: split the tail beyond h by parity
        Rational r2 = g.r * g.r;
        std::uint64_t even = (h + 1) % 2 == 0 ? h + 1 : h + 2;
        std::uint64_t odd = (h + 1) % 2 == 1 ? h + 1 : h + 2;
        Rational mass_even = rational_abs(g.a) * pow_q(rational_abs(g.r), even) / (1 - r2);
        Rational mass_odd = rational_abs(g.a) * pow_q(rational_abs(g.r), odd) / (1 - r2);
        if (g.a > 0)
            m.add_rem(mass_even, mass_odd);
        else
            m.add_rem(mass_odd, mass_even);
    }
}

} // namespace

bool fsp_weak_brute(const World& w, const World& v, std::uint64_t horizon) {
    World d = world_sub(w, v);
    MassAccum m;
    for (const auto& cell : d.population().cells()) {
        const CellValue& val = d.value(cell.id);
        if (auto p = d.plain_value(cell.id)) {
            if (*p == 0)
                continue;
            if (cell.size.is_omega())
                m.add_inf(sign_of(*p));
            else
                for (std::uint64_t i = 0; i < cell.size.value(); ++i)
                    m.add_term(*p);
        } else {
            accumulate_tail(m, std::get<TailDescriptor>(val), horizon);
        }
    }
    if (m.neg_inf)
        return false;
    if (m.pos_inf)
        return true;
    // Both masses finite: a finite set can attain the full positive mass
    // only when the positive support is finite.
    if (m.pos_count_inf)
        return m.pos > m.neg;
    return m.pos >= m.neg;
}

namespace {

struct WalkS {
    std::uint64_t prefix_len;
    std::uint64_t period_len; // lcm
    Rational drift;
    std::vector<Rational> residue; // S_{P+1} .. S_{P+L}
};

WalkS walk(const PeriodicStream& w, const PeriodicStream& v) {
    std::uint64_t P = std::max(w.prefix.size(), v.prefix.size());
    std::uint64_t L = std::lcm<std::uint64_t>(w.period.size(), v.period.size());
    WalkS out{P, L, 0, {}};
    Rational s = 0;
    for (std::uint64_t n = 1; n <= P + 2 * L; ++n) {
        s += w.at(n) - v.at(n);
        if (n > P && n <= P + L)
            out.residue.push_back(s);
        if (n == P + L)
            out.drift = -s;
        if (n == P + 2 * L)
            out.drift += s;
    }
    return out;
}

} // namespace

bool cu_weak_brute(const PeriodicStream& w, const PeriodicStream& v) {
    WalkS s = walk(w, v);
    if (s.drift > 0)
        return true;
    if (s.drift < 0)
        return false;
    return std::all_of(s.residue.begin(), s.residue.end(),
                       [](const Rational& r) { return r >= 0; });
}

bool ot_strict_brute(const PeriodicStream& w, const PeriodicStream& v) {
    WalkS s = walk(w, v);
    if (s.drift > 0)
        return true;
    if (s.drift < 0)
        return false;
    return std::all_of(s.residue.begin(), s.residue.end(),
                       [](const Rational& r) { return r > 0; });
}

bool ot_equiv_brute(const PeriodicStream& w, const PeriodicStream& v) {
    WalkS s = walk(w, v);
    return s.drift == 0 && std::all_of(s.residue.begin(), s.residue.end(),
                                       [](const Rational& r) { return r == 0; });
}

} // namespace swr::testing

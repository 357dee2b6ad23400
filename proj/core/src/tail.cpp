#include "swr/tail.hpp"

#include <algorithm>
#include <map>

#include "swr/errors.hpp"

namespace swr {

TailDescriptor TailDescriptor::constant_of(Rational v) {
    TailDescriptor t;
    t.constant = std::move(v);
    return t;
}

TailDescriptor TailDescriptor::geometric_of(Rational a, Rational r) {
    TailDescriptor t;
    t.geometric.push_back({std::move(a), std::move(r)});
    return t;
}

TailDescriptor TailDescriptor::harmonic_of(Rational a) {
    TailDescriptor t;
    t.harmonic = std::move(a);
    return t;
}

namespace {

Rational rational_pow(const Rational& base, std::uint64_t e) {
    Rational acc = 1, b = base;
    while (e) {
        if (e & 1)
            acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace

Rational TailDescriptor::term(std::uint64_t n) const {
    if (auto it = exceptions.find(n); it != exceptions.end())
        return it->second;
    Rational v = constant;
    for (const auto& g : geometric)
        v += g.a * rational_pow(g.r, n);
    if (harmonic != 0)
        v += harmonic / Rational(n);
    return v;
}

TailDescriptor TailDescriptor::normalized() const {
    TailDescriptor out;
    out.constant = constant;
    out.harmonic = harmonic;
    std::map<Rational, Rational> by_ratio; // r -> summed coefficient
    for (const auto& g : geometric)
        by_ratio[g.r] += g.a;
    for (auto& [r, a] : by_ratio)
        if (a != 0)
            out.geometric.push_back({a, r});
    for (const auto& [n, v] : exceptions) {
        TailDescriptor base = *this;
        base.exceptions.clear();
        if (base.term(n) != v)
            out.exceptions.emplace(n, v);
    }
    return out;
}

bool operator==(const TailDescriptor& a, const TailDescriptor& b) {
    TailDescriptor na = a.normalized(), nb = b.normalized();
    auto key = [](const TailDescriptor& t) {
        auto geo = t.geometric;
        std::sort(geo.begin(), geo.end(), [](const GeometricTerm& x, const GeometricTerm& y) {
            return x.r < y.r;
        });
        return std::tuple(t.constant, t.harmonic, t.exceptions.size());
    };
    if (na.constant != nb.constant || na.harmonic != nb.harmonic ||
        na.exceptions != nb.exceptions || na.geometric.size() != nb.geometric.size())
        return false;
    auto sorted = [](std::vector<GeometricTerm> g) {
        std::sort(g.begin(), g.end(),
                  [](const GeometricTerm& x, const GeometricTerm& y) { return x.r < y.r; });
        return g;
    };
    auto ga = sorted(na.geometric), gb = sorted(nb.geometric);
    for (size_t i = 0; i < ga.size(); ++i)
        if (ga[i].a != gb[i].a || ga[i].r != gb[i].r)
            return false;
    (void)key;
    return true;
}

void validate_tail(const TailDescriptor& t) {
    for (const auto& g : t.geometric) {
        Rational ar = rational_abs(g.r);
        if (ar == 0 || ar >= 1)
            throw DomainError("geometric ratio must satisfy 0 < |r| < 1, got " +
                              format_rational(g.r));
    }
    for (const auto& [n, v] : t.exceptions) {
        (void)v;
        if (n == 0)
            throw DomainError("tail exception indices start at 1");
    }
    if (t.harmonic != 0 && !t.normalized().geometric.empty())
        throw UnsupportedTailCombination(
            "harmonic and geometric parts cannot be classified together");
}

TailDescriptor tail_add(const TailDescriptor& a, const TailDescriptor& b) {
    TailDescriptor out;
    out.constant = a.constant + b.constant;
    out.harmonic = a.harmonic + b.harmonic;
    out.geometric = a.geometric;
    out.geometric.insert(out.geometric.end(), b.geometric.begin(), b.geometric.end());
    // An exception on either side overrides the formula, so it must be
    // combined with the other side's exact term value at that index.
    for (const auto& [n, v] : a.exceptions)
        out.exceptions.emplace(n, v + b.term(n));
    for (const auto& [n, v] : b.exceptions)
        if (!out.exceptions.count(n))
            out.exceptions.emplace(n, v + a.term(n));
    TailDescriptor norm = out.normalized();
    validate_tail(norm);
    return norm;
}

TailDescriptor tail_scale(const Rational& k, const TailDescriptor& t) {
    TailDescriptor out;
    out.constant = k * t.constant;
    out.harmonic = k * t.harmonic;
    for (const auto& g : t.geometric)
        out.geometric.push_back({k * g.a, g.r});
    for (const auto& [n, v] : t.exceptions)
        out.exceptions.emplace(n, k * v);
    return out.normalized();
}

TailDescriptor tail_negate(const TailDescriptor& t) { return tail_scale(-1, t); }

TailDescriptor tail_shift(const TailDescriptor& t, const Rational& c) {
    TailDescriptor out = t;
    out.constant += c;
    for (auto& [n, v] : out.exceptions) {
        (void)n;
        v += c;
    }
    return out;
}

TailDescriptor tail_sub(const TailDescriptor& a, const TailDescriptor& b) {
    return tail_add(a, tail_negate(b));
}

namespace {

struct SideAccum {
    Rational sum = 0;
    bool sum_infinite = false;
    std::uint64_t finite_count = 0;
    bool count_infinite = false;
    bool bounded_away = false;

    void add_term(const Rational& magnitude) {
        sum += magnitude;
        finite_count += 1;
    }
    void add_infinite(bool away) {
        sum_infinite = true;
        count_infinite = true;
        bounded_away = bounded_away || away;
    }
};

void classify_explicit(const TailDescriptor& t, std::uint64_t first, std::uint64_t last,
                       std::uint64_t stride, SideAccum& pos, SideAccum& neg) {
    for (std::uint64_t n = first; n <= last; n += stride) {
        Rational v = t.term(n);
        int s = sign_of(v);
        if (s > 0)
            pos.add_term(v);
        else if (s < 0)
            neg.add_term(-v);
    }
}

// Per-parity geometric data in the pure-geometric case: term(p + 2m) =
// sum_j b_j q_j^m with 0 < q_j < 1 (q = r^2), sorted by descending q.
struct ParityGeo {
    std::vector<Rational> b, q;
};

ParityGeo parity_geo(const TailDescriptor& t, std::uint64_t p) {
    std::map<Rational, Rational> by_q;
    for (const auto& g : t.geometric)
        by_q[g.r * g.r] += g.a * rational_pow(g.r, p);
    ParityGeo out;
    for (auto it = by_q.rbegin(); it != by_q.rend(); ++it)
        if (it->second != 0) {
            out.q.push_back(it->first);
            out.b.push_back(it->second);
        }
    return out;
}

// Smallest m >= m0 such that the dominant term outweighs the rest for every
// m' >= m, i.e. sum_{j>=2} |b_j| q_j^m < |b_1| q_1^m.
std::uint64_t dominance_cutoff(const ParityGeo& g, std::uint64_t m0) {
    if (g.b.size() <= 1)
        return m0;
    Rational lead = rational_abs(g.b[0]) * rational_pow(g.q[0], m0);
    std::vector<Rational> rest;
    Rational rest_sum = 0;
    for (size_t j = 1; j < g.b.size(); ++j) {
        rest.push_back(rational_abs(g.b[j]) * rational_pow(g.q[j], m0));
        rest_sum += rest.back();
    }
    std::uint64_t m = m0;
    while (rest_sum >= lead) {
        ++m;
        lead *= g.q[0];
        rest_sum = 0;
        for (size_t j = 1; j < g.b.size(); ++j) {
            rest[j - 1] *= g.q[j];
            rest_sum += rest[j - 1];
        }
    }
    return m;
}

} // namespace

TailSummary analyze_tail(const TailDescriptor& raw) {
    TailDescriptor t = raw.normalized();
    validate_tail(t);

    std::uint64_t n0 = 1;
    if (!t.exceptions.empty())
        n0 = t.exceptions.rbegin()->first + 1;

    SideAccum pos, neg;

    if (t.constant != 0) {
        // Terms converge to a nonzero constant: find N with the perturbation
        // below |constant|, so every term from N has the constant's sign and
        // stays bounded away from zero.
        Rational target = rational_abs(t.constant);
        std::vector<Rational> geo_mag;
        Rational perturb = 0;
        for (const auto& g : t.geometric) {
            geo_mag.push_back(rational_abs(g.a) * rational_abs(g.r));
            perturb += geo_mag.back();
        }
        std::uint64_t n = 1;
        Rational habs = rational_abs(t.harmonic);
        auto bound = [&](std::uint64_t at) { return perturb + (habs == 0 ? Rational(0) : habs / Rational(at)); };
        while (n < n0 || bound(n) >= target) {
            ++n;
            for (size_t j = 0; j < geo_mag.size(); ++j) {
                geo_mag[j] *= rational_abs(t.geometric[j].r);
            }
            perturb = 0;
            for (const auto& m : geo_mag)
                perturb += m;
        }
        classify_explicit(t, 1, n - 1, 1, pos, neg);
        (sign_of(t.constant) > 0 ? pos : neg).add_infinite(/*away=*/true);
        TailSummary s;
        s.pos_sum = pos.sum_infinite ? SumClass::plus_infinity() : SumClass::finite(pos.sum);
        s.neg_sum = neg.sum_infinite ? SumClass::plus_infinity() : SumClass::finite(neg.sum);
        s.pos_count = pos.count_infinite ? Cardinal::omega() : Cardinal::finite(pos.finite_count);
        s.neg_count = neg.count_infinite ? Cardinal::omega() : Cardinal::finite(neg.finite_count);
        s.pos_bounded_away = pos.bounded_away;
        s.neg_bounded_away = neg.bounded_away;
        return s;
    }

    if (t.harmonic != 0) {
        // No geometric part here (closure restriction): term(n) = h/n beyond
        // the exceptions. Harmonic mass diverges; terms approach zero.
        classify_explicit(t, 1, n0 - 1, 1, pos, neg);
        (sign_of(t.harmonic) > 0 ? pos : neg).add_infinite(/*away=*/false);
        TailSummary s;
        s.pos_sum = pos.sum_infinite ? SumClass::plus_infinity() : SumClass::finite(pos.sum);
        s.neg_sum = neg.sum_infinite ? SumClass::plus_infinity() : SumClass::finite(neg.sum);
        s.pos_count = pos.count_infinite ? Cardinal::omega() : Cardinal::finite(pos.finite_count);
        s.neg_count = neg.count_infinite ? Cardinal::omega() : Cardinal::finite(neg.finite_count);
        s.pos_bounded_away = pos.bounded_away;
        s.neg_bounded_away = neg.bounded_away;
        return s;
    }

    // Pure geometric mix (plus exceptions). Split by parity so all ratios
    // become positive; on each parity class the dominant ratio fixes the sign
    // from a computable cutoff, and the tail sums exactly.
    for (std::uint64_t p : {std::uint64_t(1), std::uint64_t(2)}) {
        ParityGeo g = parity_geo(t, p);
        if (g.b.empty()) {
            // Identically zero beyond exceptions on this parity class.
            std::uint64_t last = n0 >= 2 ? n0 - 1 : 0;
            if (last >= p)
                classify_explicit(t, p, last, 2, pos, neg);
            continue;
        }
        std::uint64_t m0 = n0 > p ? (n0 - p + 1) / 2 : 0;
        std::uint64_t m_cut = dominance_cutoff(g, m0);
        if (m_cut >= 1 && p + 2 * (m_cut - 1) >= p)
            classify_explicit(t, p, p + 2 * (m_cut - 1), 2, pos, neg);
        // Exact tail sum from m_cut; all its terms share the dominant sign.
        Rational tail_sum = 0;
        for (size_t j = 0; j < g.b.size(); ++j)
            tail_sum += g.b[j] * rational_pow(g.q[j], m_cut) / (1 - g.q[j]);
        int s = sign_of(g.b[0]);
        SideAccum& side = s > 0 ? pos : neg;
        side.sum += s > 0 ? tail_sum : Rational(-tail_sum);
        side.count_infinite = true;
    }
    TailSummary s;
    s.pos_sum = pos.sum_infinite ? SumClass::plus_infinity() : SumClass::finite(pos.sum);
    s.neg_sum = neg.sum_infinite ? SumClass::plus_infinity() : SumClass::finite(neg.sum);
    s.pos_count = pos.count_infinite ? Cardinal::omega() : Cardinal::finite(pos.finite_count);
    s.neg_count = neg.count_infinite ? Cardinal::omega() : Cardinal::finite(neg.finite_count);
    s.pos_bounded_away = false;
    s.neg_bounded_away = false;
    return s;
}

Cardinal tail_count_above(const TailDescriptor& t, const Rational& c) {
    if (c <= 0)
        throw DomainError("tail_count_above requires c > 0");
    return analyze_tail(tail_shift(t, -c)).pos_count;
}

Cardinal tail_count_below(const TailDescriptor& t, const Rational& c) {
    if (c >= 0)
        throw DomainError("tail_count_below requires c < 0");
    return analyze_tail(tail_shift(t, -c)).neg_count;
}

} // namespace swr

#include "swr/refuter.hpp"

#include <algorithm>
#include <stdexcept>

#include "swr/criteria.hpp"
#include "swr/delta.hpp"
#include "swr/errors.hpp"

namespace swr {

std::string rel_name(Rel r) {
    switch (r) {
    case Rel::Weak: return "weak";
    case Rel::Strict: return "strict";
    case Rel::Equiv: return "equiv";
    }
    return "?";
}

std::optional<Rel> rel_from_name(const std::string& s) {
    if (s == "weak") return Rel::Weak;
    if (s == "strict") return Rel::Strict;
    if (s == "equiv") return Rel::Equiv;
    return std::nullopt;
}

std::string step_kind_name(StepKind k) {
    switch (k) {
    case StepKind::AssumeWeak: return "assume-weak";
    case StepKind::ByStrongPareto: return "by-strong-pareto";
    case StepKind::ByRearrangement: return "by-rearrangement";
    case StepKind::ByConvexDominance: return "by-convex-dominance";
    case StepKind::ByTransitivity: return "by-transitivity";
    case StepKind::ConcludeContradiction: return "conclude-contradiction";
    }
    return "?";
}

std::optional<StepKind> step_kind_from_name(const std::string& s) {
    for (StepKind k : {StepKind::AssumeWeak, StepKind::ByStrongPareto,
                       StepKind::ByRearrangement, StepKind::ByConvexDominance,
                       StepKind::ByTransitivity, StepKind::ConcludeContradiction})
        if (s == step_kind_name(k))
            return k;
    return std::nullopt;
}

std::string contradiction_name(ContradictionKind k) {
    switch (k) {
    case ContradictionKind::StrictCycle: return "strict-cycle";
    case ContradictionKind::ReflexivityViolation: return "reflexivity-violation";
    case ContradictionKind::ParetoViolation: return "pareto-violation";
    }
    return "?";
}

std::optional<ContradictionKind> contradiction_from_name(const std::string& s) {
    for (ContradictionKind k :
         {ContradictionKind::StrictCycle, ContradictionKind::ReflexivityViolation,
          ContradictionKind::ParetoViolation})
        if (s == contradiction_name(k))
            return k;
    return std::nullopt;
}

namespace {

Rel combine_rels(const std::vector<Rel>& rels) {
    bool strict = false, all_equiv = true;
    for (Rel r : rels) {
        strict = strict || r == Rel::Strict;
        all_equiv = all_equiv && r == Rel::Equiv;
    }
    return strict ? Rel::Strict : (all_equiv ? Rel::Equiv : Rel::Weak);
}

Cardinal group_total(const Population& p, const std::vector<CellId>& ids) {
    Cardinal t = Cardinal::finite(0);
    for (const CellId& id : ids)
        t = cardinal_add(t, p.size_of(id));
    return t;
}

// Routes the full mass of the src cells onto the dst cells (totals must
// match: equal finite, or both omega).
void add_route(std::map<std::pair<CellId, CellId>, Cardinal>& flow, const Population& p,
               const std::vector<CellId>& src, const std::vector<CellId>& dst) {
    Cardinal ts = group_total(p, src), td = group_total(p, dst);
    if (ts.is_finite()) {
        if (!(td.is_finite() && td.value() == ts.value()))
            throw FlowError("cannot route between groups of different size");
        std::size_t i = 0, j = 0;
        std::uint64_t ri = i < src.size() ? p.size_of(src[i]).value() : 0;
        std::uint64_t rj = j < dst.size() ? p.size_of(dst[j]).value() : 0;
        while (i < src.size() && j < dst.size()) {
            std::uint64_t m = std::min(ri, rj);
            if (m > 0)
                flow[{src[i], dst[j]}] = cardinal_add(flow[{src[i], dst[j]}], Cardinal::finite(m));
            ri -= m;
            rj -= m;
            if (ri == 0 && ++i < src.size())
                ri = p.size_of(src[i]).value();
            if (rj == 0 && ++j < dst.size())
                rj = p.size_of(dst[j]).value();
        }
        return;
    }
    if (!td.is_omega())
        throw FlowError("cannot route between groups of different size");
    std::vector<CellId> sW, sF, dW, dF;
    for (const CellId& id : src)
        (p.size_of(id).is_omega() ? sW : sF).push_back(id);
    for (const CellId& id : dst)
        (p.size_of(id).is_omega() ? dW : dF).push_back(id);
    // finite dst cells are filled exactly from the first omega src cell;
    // finite src cells empty into the first omega dst cell; omega cells
    // exchange omega with the lead omega cell of the other side
    for (const CellId& b : dF)
        flow[{sW.front(), b}] = cardinal_add(flow[{sW.front(), b}], p.size_of(b));
    for (const CellId& a : sF)
        flow[{a, dW.front()}] = cardinal_add(flow[{a, dW.front()}], p.size_of(a));
    for (const CellId& b : dW)
        flow[{sW.front(), b}] = Cardinal::omega();
    for (std::size_t i = 1; i < sW.size(); ++i)
        flow[{sW[i], dW.front()}] = Cardinal::omega();
}

// A permutation exchanging the full contents of groups A and B, fixing
// everything else.
Rearrangement swap_groups(const Population& p, const std::vector<CellId>& a,
                          const std::vector<CellId>& b) {
    Rearrangement r{p, p, {}};
    std::set<CellId> moved(a.begin(), a.end());
    moved.insert(b.begin(), b.end());
    for (const Cell& c : p.cells())
        if (!moved.count(c.id))
            r.flow[{c.id, c.id}] = c.size;
    add_route(r.flow, p, a, b);
    add_route(r.flow, p, b, a);
    validate_rearrangement(r);
    return r;
}

struct Builder {
    RefutationCertificate cert;

    std::size_t assume(const World& w, const World& v) {
        cert.steps.push_back({StepKind::AssumeWeak, Fact{Rel::Weak, w, v}, {}, {}, {}, {}});
        return cert.steps.size() - 1;
    }

    std::size_t pareto(const World& from, const World& to) {
        Verdict ver = pareto_compare(from, to);
        Rel rel;
        if (ver == Verdict::StrictlyBetter)
            rel = Rel::Strict;
        else if (ver == Verdict::Equivalent)
            rel = Rel::Equiv;
        else
            throw std::logic_error("refuter constructed a non-dominating pareto step");
        cert.used_axioms.insert(AxiomId::StrongPareto);
        cert.steps.push_back({StepKind::ByStrongPareto, Fact{rel, from, to}, {}, {}, {}, {}});
        return cert.steps.size() - 1;
    }

    std::size_t rearr(const Rearrangement& r, std::size_t premise) {
        const Fact& f = *cert.steps[premise].fact;
        Fact out{f.rel, apply_rearrangement(r, f.left), apply_rearrangement(r, f.right)};
        cert.used_axioms.insert(AxiomId::PermutationInvariance);
        cert.steps.push_back({StepKind::ByRearrangement, out, {premise}, r, {}, {}});
        return cert.steps.size() - 1;
    }

    std::size_t convex(const std::vector<std::size_t>& premises,
                       const std::vector<Rational>& weights) {
        std::vector<std::pair<Rational, World>> lefts, rights;
        for (std::size_t i = 0; i < premises.size(); ++i) {
            const Fact& f = *cert.steps[premises[i]].fact;
            lefts.emplace_back(weights[i], f.left);
            rights.emplace_back(weights[i], f.right);
        }
        Fact out{Rel::Weak, convex_combine(lefts), convex_combine(rights)};
        cert.used_axioms.insert(AxiomId::QuasiIndependence);
        cert.steps.push_back(
            {StepKind::ByConvexDominance, out, premises, {}, weights, {}});
        return cert.steps.size() - 1;
    }

    std::size_t trans(const std::vector<std::size_t>& premises) {
        std::vector<Rel> rels;
        for (std::size_t p : premises)
            rels.push_back(cert.steps[p].fact->rel);
        Fact out{combine_rels(rels), cert.steps[premises.front()].fact->left,
                 cert.steps[premises.back()].fact->right};
        cert.steps.push_back({StepKind::ByTransitivity, out, premises, {}, {}, {}});
        return cert.steps.size() - 1;
    }

    void conclude(ContradictionKind k, const std::vector<std::size_t>& premises) {
        cert.steps.push_back({StepKind::ConcludeContradiction, {}, premises, {}, {}, k});
    }
};

World override_cells(const World& base, const std::vector<CellId>& ids, const Rational& m) {
    std::map<CellId, CellValue> assign = base.assignment();
    for (const CellId& id : ids)
        assign[id] = m;
    return World(base.population(), std::move(assign));
}

long long smallest_int_above(const Rational& q) {
    // smallest integer n with n > q, for q > 0
    using boost::multiprecision::cpp_int;
    cpp_int fl = numerator(q) / denominator(q);
    return static_cast<long long>(fl) + 1;
}

// Intermediate Value Lemma, raising direction: from premise (wL >= vR) with
// wL = h on the H cells, l on the L cells, vR constant on H ∪ L, derive
// (w_m >= vR) for m in (l, h). L must come pre-partitioned into n-1 infinite
// parts where n is the smallest natural with (h-l)/n + l < m.
std::size_t ivl_up(Builder& b, std::size_t premise, const std::vector<CellId>& H,
                   const std::vector<std::vector<CellId>>& L_parts, const Rational& m) {
    const Fact f = *b.cert.steps[premise].fact; // copy: steps may reallocate below
    std::size_t n = L_parts.size() + 1;
    std::vector<std::size_t> prem{premise};
    for (const auto& li : L_parts)
        prem.push_back(b.rearr(swap_groups(f.left.population(), li, H), premise));
    std::vector<Rational> weights(n, Rational(1, static_cast<long long>(n)));
    std::size_t cd = b.convex(prem, weights);
    std::vector<CellId> aprime = H;
    for (const auto& li : L_parts)
        aprime.insert(aprime.end(), li.begin(), li.end());
    World w_m = override_cells(f.left, aprime, m);
    std::size_t sp = b.pareto(w_m, b.cert.steps[cd].fact->left);
    return b.trans({sp, cd});
}

// Lowering direction: from premise (C >= wR) with wR = h on H, l on L and C
// constant on H ∪ L, derive (C >= w_m) for m in (l, h). H comes
// pre-partitioned into n-1 infinite parts, n smallest with h - (h-l)/n > m.
std::size_t ivl_down(Builder& b, std::size_t premise,
                     const std::vector<std::vector<CellId>>& H_parts,
                     const std::vector<CellId>& L, const Rational& m) {
    const Fact f = *b.cert.steps[premise].fact; // copy: steps may reallocate below
    std::size_t n = H_parts.size() + 1;
    std::vector<std::size_t> prem{premise};
    for (const auto& hi : H_parts)
        prem.push_back(b.rearr(swap_groups(f.left.population(), hi, L), premise));
    std::vector<Rational> weights(n, Rational(1, static_cast<long long>(n)));
    std::size_t cd = b.convex(prem, weights);
    std::vector<CellId> aprime = L;
    for (const auto& hi : H_parts)
        aprime.insert(aprime.end(), hi.begin(), hi.end());
    World w_m = override_cells(f.right, aprime, m);
    std::size_t sp = b.pareto(b.cert.steps[cd].fact->right, w_m);
    return b.trans({cd, sp});
}

Rational plain_or_throw(const World& w, const CellId& id) {
    auto v = w.plain_value(id);
    if (!v)
        throw DomainError("refutation certificates require finite-valued worlds");
    return *v;
}

std::pair<World, World> prepared_pair(const World& w, const World& v) {
    auto [wa, va] = align(w, v);
    for (const Cell& c : wa.population().cells()) {
        plain_or_throw(wa, c.id);
        plain_or_throw(va, c.id);
    }
    return {wa, va};
}

} // namespace

RefutationCertificate refute_two_valued(const World& w_in, const World& v_in) {
    auto [w, v] = prepared_pair(w_in, v_in);
    const Population& p = w.population();
    for (const Cell& c : p.cells()) {
        Rational pw = plain_or_throw(w, c.id), pv = plain_or_throw(v, c.id);
        if ((pw != 0 && pw != 1) || (pv != 0 && pv != 1))
            throw DomainError("refute_two_valued requires {0,1}-valued worlds");
    }
    if (verdict_weak(compare_cp(w, v)))
        throw NotRefutable("w >= v holds under the counting preorder");

    std::vector<CellId> amb, bma; // w=1,v=0 / w=0,v=1
    for (const Cell& c : p.cells()) {
        Rational pw = *w.plain_value(c.id), pv = *v.plain_value(c.id);
        if (pw == 1 && pv == 0)
            amb.push_back(c.id);
        else if (pw == 0 && pv == 1)
            bma.push_back(c.id);
    }
    Cardinal pos = group_total(p, amb), neg = group_total(p, bma);

    Builder b;
    if (pos.is_omega()) {
        // both difference regions infinite: the swap refutation. Split an
        // omega cell of A-B so that w can be strictly demoted to w-.
        CellId split;
        for (const CellId& id : amb)
            if (p.size_of(id).is_omega()) {
                split = id;
                break;
            }
        std::vector<Cell> cells;
        for (const Cell& c : p.cells()) {
            if (c.id == split) {
                cells.push_back({c.id + ".keep", Cardinal::omega()});
                cells.push_back({c.id + ".drop", Cardinal::omega()});
            } else {
                cells.push_back(c);
            }
        }
        Population rp(std::move(cells));
        auto lift = [&](const World& src) {
            std::map<CellId, CellValue> assign;
            for (const Cell& c : rp.cells()) {
                CellId parent = (c.id == split + ".keep" || c.id == split + ".drop")
                                    ? split
                                    : c.id;
                assign.emplace(c.id, src.value(parent));
            }
            return World(rp, std::move(assign));
        };
        World wr = lift(w), vr = lift(v);
        std::vector<CellId> ambr, ambr_keep;
        for (const CellId& id : amb) {
            if (id == split) {
                ambr.push_back(id + ".keep");
                ambr.push_back(id + ".drop");
                ambr_keep.push_back(id + ".keep");
            } else {
                ambr.push_back(id);
                ambr_keep.push_back(id);
            }
        }
        World wminus = override_cells(wr, {split + ".drop"}, Rational(0));
        World vplus = override_cells(vr, {split + ".drop"}, Rational(1));

        b.cert.target_w = wr;
        b.cert.target_v = vr;
        std::size_t s1 = b.assume(wr, vr);
        std::size_t s2 = b.pareto(wr, wminus);
        std::size_t s3 = b.rearr(swap_groups(rp, ambr, bma), s1);        // v >= w
        std::size_t s4 = b.rearr(swap_groups(rp, bma, ambr_keep), s3);   // w- >= v+
        std::size_t s5 = b.pareto(vplus, vr);
        b.conclude(ContradictionKind::StrictCycle, {s2, s4, s5, s3});
        return b.cert;
    }

    b.cert.target_w = w;
    b.cert.target_v = v;
    std::uint64_t k = pos.value();
    if (k == 0) {
        std::size_t s1 = b.assume(w, v);
        std::size_t s2 = b.pareto(v, w);
        b.conclude(ContradictionKind::StrictCycle, {s1, s2});
        return b.cert;
    }

    // |A-B| = k finite and < |B-A|: construct the flow f matching A-B with k
    // individuals of B-A, and derive the strict cycle
    // f(w) >= f(v) > w >= v > f(w).
    std::vector<Cell> cells;
    std::vector<CellId> dpart; // the matched part of B-A, total size k
    std::uint64_t need = k;
    std::set<CellId> consumed;
    for (const Cell& c : p.cells()) {
        bool in_bma = std::find(bma.begin(), bma.end(), c.id) != bma.end();
        if (!in_bma || need == 0) {
            cells.push_back(c);
            continue;
        }
        if (c.size.is_finite() && c.size.value() <= need) {
            cells.push_back(c);
            dpart.push_back(c.id);
            consumed.insert(c.id);
            need -= c.size.value();
        } else {
            cells.push_back({c.id + ".match", Cardinal::finite(need)});
            cells.push_back({c.id + ".rest", c.size.is_omega()
                                                 ? Cardinal::omega()
                                                 : Cardinal::finite(c.size.value() - need)});
            dpart.push_back(c.id + ".match");
            consumed.insert(c.id);
            need = 0;
        }
    }
    Population rp(std::move(cells));
    auto lift = [&](const World& src) {
        std::map<CellId, CellValue> assign;
        for (const Cell& c : rp.cells()) {
            CellId parent = c.id;
            if (auto dot = c.id.rfind(".match"); dot != std::string::npos)
                parent = c.id.substr(0, dot);
            else if (auto dot2 = c.id.rfind(".rest"); dot2 != std::string::npos)
                parent = c.id.substr(0, dot2);
            assign.emplace(c.id, src.value(parent));
        }
        return World(rp, std::move(assign));
    };
    World wr = lift(w), vr = lift(v);
    b.cert.target_w = wr;
    b.cert.target_v = vr;
    Rearrangement f = swap_groups(rp, amb, dpart);
    std::size_t s1 = b.assume(wr, vr);
    std::size_t s2 = b.rearr(f, s1); // f(w) >= f(v)
    std::size_t s3 = b.pareto(b.cert.steps[s2].fact->right, wr); // f(v) > w
    std::size_t s4 = b.pareto(vr, b.cert.steps[s2].fact->left);  // v > f(w)
    b.conclude(ContradictionKind::StrictCycle, {s2, s3, s1, s4});
    return b.cert;
}

namespace {

struct Case2Data {
    Rational a, b, c, d;
    std::vector<CellId> A;
    CellId estar; // an omega cell with (w, v) = (c, d)
};

// Case selection per the proof: "1" when v strictly sum-dominates w,
// otherwise 2a / 2b / 2c from the extracted (a, b, c, d).
std::string classify_case(const World& w, const World& v, Case2Data* out) {
    SumClass cls = delta_profile(w, v).classify();
    if (verdict_weak(compare_sp(w, v)))
        throw NotRefutable("w >= v holds under the sum preorder");
    if (cls.kind() == SumClass::Kind::MinusInfinity || (cls.is_finite() && cls.value() < 0))
        return "1";
    // indeterminate: both difference sets infinite
    Case2Data d2;
    bool have_a = false, have_cd = false;
    for (const Cell& c : w.population().cells()) {
        Rational pw = *w.plain_value(c.id), pv = *v.plain_value(c.id);
        if (pw > pv) {
            d2.A.push_back(c.id);
            if (!have_a || pw > d2.a)
                d2.a = pw;
            if (!have_a || pv < d2.b)
                d2.b = pv;
            have_a = true;
        } else if (pw < pv && c.size.is_omega()) {
            if (!have_cd || pw > d2.c || (pw == d2.c && pv < d2.d)) {
                if (!have_cd || pw > d2.c) {
                    d2.c = pw;
                    d2.d = pv;
                    d2.estar = c.id;
                } else if (pv < d2.d) {
                    d2.d = pv;
                    d2.estar = c.id;
                }
            }
            have_cd = true;
        }
    }
    if (out)
        *out = d2;
    if (d2.a > d2.c)
        return d2.d >= d2.b ? "2a" : "2b";
    return "2c";
}

} // namespace

std::string select_case(const World& w_in, const World& v_in) {
    auto [w, v] = prepared_pair(w_in, v_in);
    return classify_case(w, v, nullptr);
}

RefutationCertificate refute_finite_valued(const World& w_in, const World& v_in) {
    auto [w, v] = prepared_pair(w_in, v_in);
    const Population& p = w.population();
    Case2Data d2;
    std::string cse = classify_case(w, v, &d2);
    Builder b;

    if (cse == "1") {
        // v strictly sum-dominates w. A = {w > v} is finite; pick a finite B
        // from {v > w} with sum over A ∪ B of (v - w) > 0, reduce to a
        // finite-difference pair, and average over cyclic shifts (Lemma-3
        // pattern) to reach a Pareto violation.
        Rational S = 0; // sum of w - v over A
        std::vector<std::pair<CellId, Rational>> negs; // (cell, gain v - w)
        for (const Cell& c : p.cells()) {
            Rational g = *w.plain_value(c.id) - *v.plain_value(c.id);
            if (g > 0)
                S += g * Rational(static_cast<long long>(c.size.value()));
            else if (g < 0)
                negs.emplace_back(c.id, -g);
        }
        std::sort(negs.begin(), negs.end(),
                  [](const auto& x, const auto& y) { return x.second > y.second; });
        std::map<CellId, std::uint64_t> picks;
        Rational acc = 0;
        for (const auto& [id, gain] : negs) {
            if (acc > S)
                break;
            Rational deficit = S - acc;
            std::uint64_t want =
                static_cast<std::uint64_t>(smallest_int_above(deficit / gain));
            Cardinal sz = p.size_of(id);
            std::uint64_t take = sz.is_omega() ? want : std::min(want, sz.value());
            picks[id] = take;
            acc += gain * Rational(static_cast<long long>(take));
        }

        // refined population: A individuals and picked B individuals become
        // singleton cells
        std::vector<Cell> cells;
        std::map<CellId, CellId> parent;
        std::vector<CellId> Z;
        for (const Cell& c : p.cells()) {
            Rational g = *w.plain_value(c.id) - *v.plain_value(c.id);
            std::uint64_t singles = 0;
            if (g > 0)
                singles = c.size.value();
            else if (auto it = picks.find(c.id); it != picks.end())
                singles = it->second;
            for (std::uint64_t i = 0; i < singles; ++i) {
                CellId id = c.id + "#" + std::to_string(i);
                cells.push_back({id, Cardinal::finite(1)});
                parent[id] = c.id;
                Z.push_back(id);
            }
            bool exhausted = c.size.is_finite() && c.size.value() == singles;
            if (!exhausted) {
                Cardinal rest = c.size.is_omega()
                                    ? Cardinal::omega()
                                    : Cardinal::finite(c.size.value() - singles);
                cells.push_back({c.id, rest});
                parent[c.id] = c.id;
            }
        }
        Population rp(std::move(cells));
        auto lift = [&](const World& src) {
            std::map<CellId, CellValue> assign;
            for (const Cell& c : rp.cells())
                assign.emplace(c.id, src.value(parent.at(c.id)));
            return World(rp, std::move(assign));
        };
        World wr = lift(w), vr = lift(v);
        b.cert.target_w = wr;
        b.cert.target_v = vr;

        // v-: v on Z, w elsewhere — differs from w only on the finite Z
        std::map<CellId, CellValue> vm = wr.assignment();
        for (const CellId& z : Z)
            vm[z] = vr.value(z);
        World vminus(rp, std::move(vm));

        std::size_t s1 = b.assume(wr, vr);
        std::size_t s2 = b.pareto(vr, vminus);
        std::size_t s3 = b.trans({s1, s2}); // w >= v-
        std::size_t n = Z.size();
        if (n == 1) {
            b.conclude(ContradictionKind::ParetoViolation, {s3});
            return b.cert;
        }
        std::vector<std::size_t> prem{s3};
        for (std::size_t j = 1; j < n; ++j) {
            Rearrangement sigma{rp, rp, {}};
            std::set<CellId> zset(Z.begin(), Z.end());
            for (const Cell& c : rp.cells())
                if (!zset.count(c.id))
                    sigma.flow[{c.id, c.id}] = c.size;
            for (std::size_t i = 0; i < n; ++i)
                sigma.flow[{Z[i], Z[(i + j) % n]}] = Cardinal::finite(1);
            validate_rearrangement(sigma);
            prem.push_back(b.rearr(sigma, s3));
        }
        std::vector<Rational> weights(n, Rational(1, static_cast<long long>(n)));
        std::size_t cd = b.convex(prem, weights);
        b.conclude(ContradictionKind::ParetoViolation, {cd});
        return b.cert;
    }

    // Case 2: pick m (and m' for 2a) as midpoints of the admissible
    // intervals, derive the part counts, split e* accordingly, and drive the
    // Intermediate Value Lemma into a Split Value contradiction.
    const Rational &a = d2.a, &bb = d2.b, &c = d2.c, &d = d2.d;
    Rational m, mprime;
    std::size_t nup = 0, ndn = 0;
    bool use_down = false; // 2a only: second IVL pass needed when m > b
    if (cse == "2a") {
        m = (c + std::min(a, d)) / 2;
        nup = static_cast<std::size_t>(smallest_int_above((a - c) / (m - c)));
        use_down = m > bb;
        if (use_down) {
            mprime = (m + d) / 2;
            ndn = static_cast<std::size_t>(smallest_int_above((d - bb) / (d - mprime)));
        }
    } else if (cse == "2b") {
        m = (c + d) / 2;
        nup = static_cast<std::size_t>(smallest_int_above((a - c) / (m - c)));
    } else { // 2c
        mprime = (c + d) / 2;
        ndn = static_cast<std::size_t>(smallest_int_above((d - bb) / (d - mprime)));
    }
    std::size_t e1_parts = (cse == "2a" || cse == "2b") ? nup - 1 : 0;
    std::size_t e2_parts = cse == "2a" ? (use_down ? ndn - 1 : 1)
                                       : (cse == "2c" ? ndn - 1 : 0);

    std::vector<Cell> cells;
    std::vector<CellId> E1, E2;
    for (const Cell& cell : p.cells()) {
        if (cell.id != d2.estar) {
            cells.push_back(cell);
            continue;
        }
        for (std::size_t i = 0; i < e1_parts; ++i) {
            CellId id = cell.id + ".e1." + std::to_string(i);
            cells.push_back({id, Cardinal::omega()});
            E1.push_back(id);
        }
        for (std::size_t i = 0; i < e2_parts; ++i) {
            CellId id = cell.id + ".e2." + std::to_string(i);
            cells.push_back({id, Cardinal::omega()});
            E2.push_back(id);
        }
        cells.push_back({cell.id + ".core", Cardinal::omega()});
    }
    Population rp(std::move(cells));
    auto lift = [&](const World& src) {
        std::map<CellId, CellValue> assign;
        for (const Cell& cell : rp.cells()) {
            CellId parent = cell.id;
            if (cell.id.rfind(d2.estar + ".", 0) == 0)
                parent = d2.estar;
            assign.emplace(cell.id, src.value(parent));
        }
        return World(rp, std::move(assign));
    };
    World wr = lift(w), vr = lift(v);
    b.cert.target_w = wr;
    b.cert.target_v = vr;
    const std::vector<CellId>& A = d2.A;
    std::vector<CellId> AE1 = A, AE = A;
    AE1.insert(AE1.end(), E1.begin(), E1.end());
    AE.insert(AE.end(), E1.begin(), E1.end());
    AE.insert(AE.end(), E2.begin(), E2.end());
    auto as_groups = [](const std::vector<CellId>& ids) {
        std::vector<std::vector<CellId>> g;
        for (const CellId& id : ids)
            g.push_back({id});
        return g;
    };

    if (cse == "2a") {
        World wplus = override_cells(wr, A, a);
        World vminus = override_cells(vr, AE1, bb);
        std::size_t s1 = b.assume(wr, vr);
        std::size_t s2 = b.pareto(wplus, wr);
        std::size_t s3 = b.pareto(vr, vminus);
        std::size_t s4 = b.trans({s2, s1, s3}); // w+ >= v-
        std::size_t k1 = ivl_up(b, s4, A, as_groups(E1), m); // w+_m >= v-
        World wpm = b.cert.steps[k1].fact->left;
        World wpmp = override_cells(wpm, E2, m); // (w+_m)+
        std::size_t s5 = b.pareto(wpmp, wpm);
        std::size_t s6 = b.trans({s5, k1}); // (w+_m)+ >= v-
        if (use_down) {
            std::size_t k2 = ivl_down(b, s6, as_groups(E2), AE1, mprime);
            b.conclude(ContradictionKind::ParetoViolation, {k2});
        } else {
            // m <= b: v- already pareto-dominates the constant-m world
            b.conclude(ContradictionKind::ParetoViolation, {s6});
        }
    } else if (cse == "2b") {
        World wplus = override_cells(wr, A, a);
        World vminus = override_cells(vr, A, d);
        std::size_t s1 = b.assume(wr, vr);
        std::size_t s2 = b.pareto(wplus, wr);
        std::size_t s3 = b.pareto(vr, vminus);
        std::size_t s4 = b.trans({s2, s1, s3});
        std::size_t k1 = ivl_up(b, s4, A, as_groups(E1), m); // w+_m >= v-
        b.conclude(ContradictionKind::ParetoViolation, {k1});
    } else { // 2c
        World wplus = override_cells(wr, A, c);
        World vminus = override_cells(vr, A, bb);
        std::size_t s1 = b.assume(wr, vr);
        std::size_t s2 = b.pareto(wplus, wr);
        std::size_t s3 = b.pareto(vr, vminus);
        std::size_t s4 = b.trans({s2, s1, s3});
        std::size_t k1 = ivl_down(b, s4, as_groups(E2), A, mprime);
        b.conclude(ContradictionKind::ParetoViolation, {k1});
    }
    return b.cert;
}

namespace {

CheckResult invalid(std::size_t step, const std::string& reason) {
    return {false, step, reason};
}

} // namespace

CheckResult check_certificate(const RefutationCertificate& c) {
    if (c.steps.empty())
        return invalid(0, "certificate has no steps");
    std::set<AxiomId> derived;
    bool have_assume = false;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const CertStep& s = c.steps[i];
        bool last = i + 1 == c.steps.size();
        if ((s.kind == StepKind::ConcludeContradiction) != last)
            return invalid(i, "ConcludeContradiction must be exactly the final step");
        for (std::size_t p : s.premises) {
            if (p >= i)
                return invalid(i, "premise refers to a later or current step");
            if (!c.steps[p].fact)
                return invalid(i, "premise has no fact");
        }
        if (s.kind != StepKind::ConcludeContradiction && !s.fact)
            return invalid(i, "derivation step lacks a fact");
        try {
            switch (s.kind) {
            case StepKind::AssumeWeak: {
                if (s.fact->rel != Rel::Weak || !(s.fact->left == c.target_w) ||
                    !(s.fact->right == c.target_v))
                    return invalid(i, "assumption does not match the certificate target");
                have_assume = true;
                break;
            }
            case StepKind::ByStrongPareto: {
                Verdict v = pareto_compare(s.fact->left, s.fact->right);
                Rel rel;
                if (v == Verdict::StrictlyBetter)
                    rel = Rel::Strict;
                else if (v == Verdict::Equivalent)
                    rel = Rel::Equiv;
                else
                    return invalid(i, "left world does not pareto-dominate right world");
                if (rel != s.fact->rel)
                    return invalid(i, "claimed strictness disagrees with pareto recomputation");
                derived.insert(AxiomId::StrongPareto);
                break;
            }
            case StepKind::ByRearrangement: {
                if (s.premises.size() != 1 || !s.rearrangement)
                    return invalid(i, "rearrangement step needs one premise and a flow");
                validate_rearrangement(*s.rearrangement);
                const Fact& f = *c.steps[s.premises[0]].fact;
                if (!(apply_rearrangement(*s.rearrangement, f.left) == s.fact->left))
                    return invalid(i, "left world is not the rearrangement image of the premise");
                if (!(apply_rearrangement(*s.rearrangement, f.right) == s.fact->right))
                    return invalid(i, "right world is not the rearrangement image of the premise");
                if (s.fact->rel != f.rel)
                    return invalid(i, "rearrangement must preserve the premise relation");
                derived.insert(AxiomId::PermutationInvariance);
                break;
            }
            case StepKind::ByConvexDominance: {
                if (s.premises.empty() || s.weights.size() != s.premises.size())
                    return invalid(i, "convex step needs matching premises and weights");
                Rational total = 0;
                for (const Rational& wgt : s.weights) {
                    if (wgt < 0)
                        return invalid(i, "negative convex weight");
                    total += wgt;
                }
                if (total != 1)
                    return invalid(i, "convex weights do not sum to 1");
                std::vector<std::pair<Rational, World>> lefts, rights;
                for (std::size_t k = 0; k < s.premises.size(); ++k) {
                    const Fact& f = *c.steps[s.premises[k]].fact;
                    lefts.emplace_back(s.weights[k], f.left);
                    rights.emplace_back(s.weights[k], f.right);
                }
                if (!(convex_combine(lefts) == s.fact->left) ||
                    !(convex_combine(rights) == s.fact->right))
                    return invalid(i, "worlds are not the stated convex combinations");
                if (s.fact->rel != Rel::Weak)
                    return invalid(i, "convex dominance only yields a weak relation");
                derived.insert(AxiomId::QuasiIndependence);
                break;
            }
            case StepKind::ByTransitivity: {
                if (s.premises.empty())
                    return invalid(i, "transitivity needs at least one premise");
                std::vector<Rel> rels;
                for (std::size_t k = 0; k < s.premises.size(); ++k) {
                    const Fact& f = *c.steps[s.premises[k]].fact;
                    rels.push_back(f.rel);
                    if (k > 0 && !(c.steps[s.premises[k - 1]].fact->right == f.left))
                        return invalid(i, "transitivity chain does not connect");
                }
                if (!(s.fact->left == c.steps[s.premises.front()].fact->left) ||
                    !(s.fact->right == c.steps[s.premises.back()].fact->right))
                    return invalid(i, "transitivity endpoints do not match the chain");
                if (s.fact->rel != combine_rels(rels))
                    return invalid(i, "transitivity strictness disagrees with the chain");
                break;
            }
            case StepKind::ConcludeContradiction: {
                if (!s.contradiction)
                    return invalid(i, "missing contradiction kind");
                switch (*s.contradiction) {
                case ContradictionKind::StrictCycle: {
                    if (s.premises.size() < 2)
                        return invalid(i, "a strict cycle needs at least two edges");
                    bool strict = false;
                    for (std::size_t k = 0; k < s.premises.size(); ++k) {
                        const Fact& f = *c.steps[s.premises[k]].fact;
                        const Fact& g =
                            *c.steps[s.premises[(k + 1) % s.premises.size()]].fact;
                        if (!(f.right == g.left))
                            return invalid(i, "cycle edges do not connect");
                        strict = strict || f.rel == Rel::Strict;
                    }
                    if (!strict)
                        return invalid(i, "cycle has no strict edge — no contradiction");
                    break;
                }
                case ContradictionKind::ReflexivityViolation: {
                    if (s.premises.size() != 1)
                        return invalid(i, "reflexivity violation needs one premise");
                    const Fact& f = *c.steps[s.premises[0]].fact;
                    if (f.rel != Rel::Strict || !(f.left == f.right))
                        return invalid(i, "premise is not a strict self-comparison");
                    break;
                }
                case ContradictionKind::ParetoViolation: {
                    if (s.premises.size() != 1)
                        return invalid(i, "pareto violation needs one premise");
                    const Fact& f = *c.steps[s.premises[0]].fact;
                    if (pareto_compare(f.right, f.left) != Verdict::StrictlyBetter)
                        return invalid(
                            i, "right world does not strictly pareto-dominate left world");
                    break;
                }
                }
                break;
            }
            }
        } catch (const Error& e) {
            return invalid(i, std::string("recomputation failed: ") + e.what());
        }
    }
    if (!have_assume)
        return invalid(0, "certificate never assumes the target comparison");
    if (derived != c.used_axioms)
        return invalid(c.steps.size() - 1, "declared axiom set does not match the steps used");
    return {true, 0, ""};
}

} // namespace swr

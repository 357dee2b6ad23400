#include "swr/criteria.hpp"

#include "swr/errors.hpp"

namespace swr {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::StrictlyBetter:
        return "strictly-better";
    case Verdict::StrictlyWorse:
        return "strictly-worse";
    case Verdict::Equivalent:
        return "equivalent";
    case Verdict::Incomparable:
        return "incomparable";
    }
    return "?";
}

Verdict verdict_flip(Verdict v) {
    switch (v) {
    case Verdict::StrictlyBetter:
        return Verdict::StrictlyWorse;
    case Verdict::StrictlyWorse:
        return Verdict::StrictlyBetter;
    default:
        return v;
    }
}

Verdict verdict_from_weak(bool forward, bool backward) {
    if (forward && backward)
        return Verdict::Equivalent;
    if (forward)
        return Verdict::StrictlyBetter;
    if (backward)
        return Verdict::StrictlyWorse;
    return Verdict::Incomparable;
}

bool verdict_weak(Verdict v) {
    return v == Verdict::StrictlyBetter || v == Verdict::Equivalent;
}

std::string criterion_name(Criterion c) {
    switch (c) {
    case Criterion::SumPreorder:
        return "sp";
    case Criterion::FiniteSumPreorder:
        return "fsp";
    case Criterion::CountingPreorder:
        return "cp";
    case Criterion::ParetoPreorder:
        return "pareto";
    case Criterion::SumPlusDifferences:
        return "spd";
    case Criterion::ConvergentDivergences:
        return "cdv";
    case Criterion::CatchingUp:
        return "cu";
    case Criterion::Overtaking:
        return "ot";
    }
    return "?";
}

std::optional<Criterion> criterion_from_name(std::string_view n) {
    if (n == "sp")
        return Criterion::SumPreorder;
    if (n == "fsp")
        return Criterion::FiniteSumPreorder;
    if (n == "cp")
        return Criterion::CountingPreorder;
    if (n == "pareto")
        return Criterion::ParetoPreorder;
    if (n == "spd")
        return Criterion::SumPlusDifferences;
    if (n == "cdv")
        return Criterion::ConvergentDivergences;
    if (n == "cu")
        return Criterion::CatchingUp;
    if (n == "ot")
        return Criterion::Overtaking;
    return std::nullopt;
}

bool sp_weak(const DeltaProfile& d) {
    SumClass s = d.classify();
    switch (s.kind()) {
    case SumClass::Kind::Finite:
        return s.value() >= 0;
    case SumClass::Kind::PlusInfinity:
        return true;
    default:
        return false;
    }
}

bool fsp_weak(const DeltaProfile& d) {
    // Exists a finite set whose every finite superset has nonnegative partial
    // sum. Requires finite loss mass; the reachable gain mass must cover it,
    // strictly when the gain supremum is approached but never attained
    // (infinitely many positive terms).
    if (!d.neg_sum().is_finite())
        return false;
    if (!d.pos_sum().is_finite())
        return true;
    const Rational& gain = d.pos_sum().value();
    const Rational& loss = d.neg_sum().value();
    if (d.pos_count().is_finite())
        return gain >= loss;
    return gain > loss;
}

bool pareto_weak(const DeltaProfile& d) { return d.neg_count().is_zero(); }

bool spd_weak(const DeltaProfile& d) {
    if (!d.all_constant())
        throw DomainError("spd is defined on finite-valued worlds only");
    if (sp_weak(d))
        return true;
    auto gain = d.min_gain();
    auto loss = d.max_loss();
    return gain && loss && *gain >= *loss;
}

bool cdv_weak(const DeltaProfile& d) {
    if (sp_weak(d))
        return true;
    return d.pos_bounded_away() && !d.neg_bounded_away();
}

namespace {

template <typename Weak>
Verdict compare_with(Weak weak, const World& w, const World& v) {
    DeltaProfile fwd = delta_profile(w, v);
    return verdict_from_weak(weak(fwd), weak(fwd.negated()));
}

void require_two_valued(const World& w, const char* who) {
    for (const Cell& c : w.population().cells()) {
        auto p = w.plain_value(c.id);
        if (!p || (*p != 0 && *p != 1))
            throw DomainError(std::string(who) + " requires {0,1}-valued worlds");
    }
}

} // namespace

Verdict compare_sp(const World& w, const World& v) { return compare_with(sp_weak, w, v); }
Verdict compare_fsp(const World& w, const World& v) { return compare_with(fsp_weak, w, v); }
Verdict pareto_compare(const World& w, const World& v) { return compare_with(pareto_weak, w, v); }
Verdict compare_spd(const World& w, const World& v) { return compare_with(spd_weak, w, v); }
Verdict compare_cdv(const World& w, const World& v) { return compare_with(cdv_weak, w, v); }

Verdict compare_cp(const World& w, const World& v) {
    require_two_valued(w, "cp");
    require_two_valued(v, "cp");
    DeltaProfile d = delta_profile(w, v);
    Cardinal gained = d.pos_count(); // |1_w - 1_v|
    Cardinal lost = d.neg_count();   // |1_v - 1_w|
    bool fwd = lost.is_finite() && gained >= lost;
    bool bwd = gained.is_finite() && lost >= gained;
    return verdict_from_weak(fwd, bwd);
}

Verdict compare(Criterion c, const World& w, const World& v) {
    switch (c) {
    case Criterion::SumPreorder:
        return compare_sp(w, v);
    case Criterion::FiniteSumPreorder:
        return compare_fsp(w, v);
    case Criterion::CountingPreorder:
        return compare_cp(w, v);
    case Criterion::ParetoPreorder:
        return pareto_compare(w, v);
    case Criterion::SumPlusDifferences:
        return compare_spd(w, v);
    case Criterion::ConvergentDivergences:
        return compare_cdv(w, v);
    default:
        throw DomainError("criterion '" + criterion_name(c) +
                          "' compares ordered streams, not worlds");
    }
}

} // namespace swr

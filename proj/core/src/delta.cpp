#include "swr/delta.hpp"

#include "swr/errors.hpp"

namespace swr {

namespace {

SumClass add_mass(const SumClass& a, const SumClass& b) {
    if (a.kind() == SumClass::Kind::PlusInfinity || b.kind() == SumClass::Kind::PlusInfinity)
        return SumClass::plus_infinity();
    return SumClass::finite(a.value() + b.value());
}

} // namespace

DeltaProfile delta_profile(const World& w, const World& v) {
    if (!(w.population() == v.population()))
        throw AlignmentError("delta_profile requires aligned worlds");
    DeltaProfile d;
    for (const Cell& c : w.population().cells()) {
        auto pw = w.plain_value(c.id), pv = v.plain_value(c.id);
        if (pw && pv) {
            Rational delta = *pw - *pv;
            if (delta != 0)
                d.constants_.push_back({c.size, std::move(delta)});
            continue;
        }
        auto as_tail = [](const CellValue& cv) {
            return std::holds_alternative<Rational>(cv)
                       ? TailDescriptor::constant_of(std::get<Rational>(cv))
                       : std::get<TailDescriptor>(cv);
        };
        TailDescriptor delta = tail_sub(as_tail(w.value(c.id)), as_tail(v.value(c.id)));
        if (delta.is_constant()) {
            if (delta.constant != 0)
                d.constants_.push_back({c.size, delta.constant});
            continue;
        }
        TailSummary s = analyze_tail(delta);
        d.tails_.push_back({std::move(delta), std::move(s)});
    }
    d.finalize();
    return d;
}

void DeltaProfile::finalize() {
    Rational pos = 0, neg = 0;
    bool pos_inf = false, neg_inf = false;
    std::uint64_t pos_n = 0, neg_n = 0;
    bool pos_n_inf = false, neg_n_inf = false;
    pos_bounded_away_ = neg_bounded_away_ = false;

    for (const ConstantBlock& b : constants_) {
        int s = sign_of(b.delta);
        if (s > 0) {
            if (b.count.is_omega()) {
                pos_inf = pos_n_inf = true;
                pos_bounded_away_ = true;
            } else {
                pos += b.delta * Rational(b.count.value());
                pos_n += b.count.value();
            }
        } else if (s < 0) {
            if (b.count.is_omega()) {
                neg_inf = neg_n_inf = true;
                neg_bounded_away_ = true;
            } else {
                neg += -b.delta * Rational(b.count.value());
                neg_n += b.count.value();
            }
        }
    }
    for (const TailBlock& t : tails_) {
        if (t.summary.pos_sum.is_finite())
            pos += t.summary.pos_sum.value();
        else
            pos_inf = true;
        if (t.summary.neg_sum.is_finite())
            neg += t.summary.neg_sum.value();
        else
            neg_inf = true;
        if (t.summary.pos_count.is_omega())
            pos_n_inf = true;
        else
            pos_n += t.summary.pos_count.value();
        if (t.summary.neg_count.is_omega())
            neg_n_inf = true;
        else
            neg_n += t.summary.neg_count.value();
        pos_bounded_away_ = pos_bounded_away_ || t.summary.pos_bounded_away;
        neg_bounded_away_ = neg_bounded_away_ || t.summary.neg_bounded_away;
    }
    pos_sum_ = pos_inf ? SumClass::plus_infinity() : SumClass::finite(pos);
    neg_sum_ = neg_inf ? SumClass::plus_infinity() : SumClass::finite(neg);
    pos_count_ = pos_n_inf ? Cardinal::omega() : Cardinal::finite(pos_n);
    neg_count_ = neg_n_inf ? Cardinal::omega() : Cardinal::finite(neg_n);
}

Cardinal DeltaProfile::pos_count_above(const Rational& c) const {
    if (c <= 0)
        throw DomainError("pos_count_above requires c > 0");
    Cardinal total = Cardinal::finite(0);
    for (const ConstantBlock& b : constants_)
        if (b.delta > c)
            total = cardinal_add(total, b.count);
    for (const TailBlock& t : tails_)
        total = cardinal_add(total, tail_count_above(t.delta, c));
    return total;
}

Cardinal DeltaProfile::neg_count_below(const Rational& c) const {
    if (c >= 0)
        throw DomainError("neg_count_below requires c < 0");
    Cardinal total = Cardinal::finite(0);
    for (const ConstantBlock& b : constants_)
        if (b.delta < c)
            total = cardinal_add(total, b.count);
    for (const TailBlock& t : tails_)
        total = cardinal_add(total, tail_count_below(t.delta, c));
    return total;
}

std::optional<Rational> DeltaProfile::min_gain() const {
    std::optional<Rational> m;
    for (const ConstantBlock& b : constants_)
        if (b.delta > 0 && (!m || b.delta < *m))
            m = b.delta;
    return m;
}

std::optional<Rational> DeltaProfile::max_loss() const {
    std::optional<Rational> m;
    for (const ConstantBlock& b : constants_)
        if (b.delta < 0 && (!m || -b.delta > *m))
            m = -b.delta;
    return m;
}

SumClass DeltaProfile::classify() const {
    bool pos_inf = !pos_sum_.is_finite();
    bool neg_inf = !neg_sum_.is_finite();
    if (pos_inf && neg_inf)
        return SumClass::indeterminate();
    if (pos_inf)
        return SumClass::plus_infinity();
    if (neg_inf)
        return SumClass::minus_infinity();
    return SumClass::finite(pos_sum_.value() - neg_sum_.value());
}

DeltaProfile DeltaProfile::negated() const {
    DeltaProfile d;
    for (const ConstantBlock& b : constants_)
        d.constants_.push_back({b.count, -b.delta});
    for (const TailBlock& t : tails_) {
        TailDescriptor neg = tail_negate(t.delta);
        TailSummary s = analyze_tail(neg);
        d.tails_.push_back({std::move(neg), std::move(s)});
    }
    d.finalize();
    return d;
}

} // namespace swr

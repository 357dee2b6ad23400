#include "swr/sumclass.hpp"

#include "swr/errors.hpp"

namespace swr {

std::string SumClass::to_string() const {
    switch (kind_) {
    case Kind::Finite:
        return format_rational(value_);
    case Kind::PlusInfinity:
        return "+inf";
    case Kind::MinusInfinity:
        return "-inf";
    case Kind::Indeterminate:
        return "indeterminate";
    }
    return "?";
}

namespace {

// Accumulated mass on one side: an exact finite total, or infinite.
struct Mass {
    Rational total = 0;
    bool infinite = false;

    void add_finite(const Rational& r) { total += r; }
    void add(const SumClass& part, const char* side) {
        switch (part.kind()) {
        case SumClass::Kind::Finite:
            if (part.value() < 0)
                throw DomainError(std::string("tail block ") + side +
                                  " part must be nonnegative");
            total += part.value();
            break;
        case SumClass::Kind::PlusInfinity:
            infinite = true;
            break;
        default:
            throw DomainError(std::string("tail block ") + side +
                              " part must be Finite(>=0) or PlusInfinity");
        }
    }
};

} // namespace

SumClass sum_classify(std::span<const SumTerm> terms) {
    Mass pos, neg;
    for (const auto& t : terms) {
        if (t.tail) {
            pos.add(t.tail->first, "positive");
            neg.add(t.tail->second, "negative");
            continue;
        }
        int s = sign_of(t.delta);
        if (s == 0 || t.count.is_zero())
            continue;
        if (t.count.is_omega()) {
            // Infinitely many equal nonzero terms: infinite mass on that side.
            (s > 0 ? pos : neg).infinite = true;
        } else {
            Rational contribution = t.delta * Rational(t.count.value());
            (s > 0 ? pos : neg).add_finite(s > 0 ? contribution : Rational(-contribution));
        }
    }
    if (pos.infinite && neg.infinite)
        return SumClass::indeterminate();
    if (pos.infinite)
        return SumClass::plus_infinity();
    if (neg.infinite)
        return SumClass::minus_infinity();
    return SumClass::finite(pos.total - neg.total);
}

SumClass sum_classify(const std::vector<SumTerm>& terms) {
    return sum_classify(std::span<const SumTerm>(terms));
}

} // namespace swr

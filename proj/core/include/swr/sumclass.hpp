#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swr/cardinal.hpp"
#include "swr/rational.hpp"

namespace swr {

// Outcome of classifying an infinite series of rational terms under
// unconditional (= absolute, for real series) convergence: a finite value,
// divergence to +inf or -inf, or indeterminate when both the positive part
// and the negative part are infinite (any rearrangement target is reachable).
class SumClass {
  public:
    enum class Kind { Finite, PlusInfinity, MinusInfinity, Indeterminate };

    static SumClass finite(Rational v) { return SumClass(Kind::Finite, std::move(v)); }
    static SumClass plus_infinity() { return SumClass(Kind::PlusInfinity, 0); }
    static SumClass minus_infinity() { return SumClass(Kind::MinusInfinity, 0); }
    static SumClass indeterminate() { return SumClass(Kind::Indeterminate, 0); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }

    // Valid only when finite.
    const Rational& value() const { return value_; }

    friend bool operator==(const SumClass& a, const SumClass& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }

    std::string to_string() const;

  private:
    SumClass(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}

    Kind kind_;
    Rational value_;
};

// One input block of sum_classify: either a constant block (count copies of
// delta) or a tail block carrying precomputed positive-part / negative-part
// sums (each Finite with value >= 0, or PlusInfinity).
struct SumTerm {
    Rational delta;
    Cardinal count = Cardinal::finite(1);
    std::optional<std::pair<SumClass, SumClass>> tail; // (pos part, neg part)

    static SumTerm block(Rational delta, Cardinal count) {
        return SumTerm{std::move(delta), count, std::nullopt};
    }
    static SumTerm tail_block(SumClass pos, SumClass neg) {
        return SumTerm{Rational(0), Cardinal::finite(0),
                       std::make_pair(std::move(pos), std::move(neg))};
    }
};

SumClass sum_classify(std::span<const SumTerm> terms);
SumClass sum_classify(const std::vector<SumTerm>& terms);

} // namespace swr

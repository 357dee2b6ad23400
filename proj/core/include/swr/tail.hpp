#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "swr/cardinal.hpp"
#include "swr/rational.hpp"
#include "swr/sumclass.hpp"

namespace swr {

struct GeometricTerm {
    Rational a;
    Rational r; // 0 < |r| < 1
};

// Value sequence attached to an omega-sized cell, term n = 1, 2, ...:
//
//   term(n) = constant + sum_i a_i * r_i^n + harmonic / n
//
// overridden at finitely many indices by `exceptions`. The serialized forms
// "const", "geometric", "harmonic" and "mixed" are all instances of this.
// Harmonic together with a nonzero geometric part is outside the closure the
// comparators can classify and is rejected where it would arise.
struct TailDescriptor {
    Rational constant = 0;
    std::vector<GeometricTerm> geometric;
    Rational harmonic = 0;
    std::map<std::uint64_t, Rational> exceptions; // index (>= 1) -> value

    static TailDescriptor constant_of(Rational v);
    static TailDescriptor geometric_of(Rational a, Rational r);
    static TailDescriptor harmonic_of(Rational a);

    bool is_constant() const { return geometric.empty() && harmonic == 0 && exceptions.empty(); }
    bool has_harmonic() const { return harmonic != 0; }

    // Exact value of term n (n >= 1), exceptions included.
    Rational term(std::uint64_t n) const;

    // Drops zero geometric coefficients, merges equal ratios, drops
    // exceptions equal to the base formula value.
    TailDescriptor normalized() const;

    friend bool operator==(const TailDescriptor& a, const TailDescriptor& b);
};

// Throws std::invalid_argument / UnsupportedTailCombination on violations.
void validate_tail(const TailDescriptor& t);

TailDescriptor tail_add(const TailDescriptor& a, const TailDescriptor& b);
TailDescriptor tail_scale(const Rational& k, const TailDescriptor& t);
TailDescriptor tail_negate(const TailDescriptor& t);
TailDescriptor tail_shift(const TailDescriptor& t, const Rational& c); // t + c
TailDescriptor tail_sub(const TailDescriptor& a, const TailDescriptor& b);

// Exact classification of the sign structure of a tail sequence.
struct TailSummary {
    SumClass pos_sum = SumClass::finite(0); // sum of positive terms (Finite >= 0 or +inf)
    SumClass neg_sum = SumClass::finite(0); // sum of |negative terms| (Finite >= 0 or +inf)
    Cardinal pos_count;                     // # indices with term > 0
    Cardinal neg_count;                     // # indices with term < 0
    bool pos_bounded_away = false;          // exists c > 0 with infinitely many terms > c
    bool neg_bounded_away = false;          // exists c > 0 with infinitely many terms < -c
};

// Requires the closure restriction (no harmonic + geometric mix).
TailSummary analyze_tail(const TailDescriptor& t);

// Number of indices n with term(n) > c, for c > 0 (Finite or Omega).
Cardinal tail_count_above(const TailDescriptor& t, const Rational& c);
// Number of indices n with term(n) < c, for c < 0.
Cardinal tail_count_below(const TailDescriptor& t, const Rational& c);

} // namespace swr

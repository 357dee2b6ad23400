#pragma once

#include <optional>
#include <vector>

#include "swr/sumclass.hpp"
#include "swr/world.hpp"

namespace swr {

// Per-cell difference structure of two aligned worlds; the input to every
// comparator. Blocks with delta 0 are dropped.
class DeltaProfile {
  public:
    struct ConstantBlock {
        Cardinal count;
        Rational delta;
    };
    struct TailBlock {
        TailDescriptor delta;
        TailSummary summary;
    };

    const std::vector<ConstantBlock>& constant_blocks() const { return constants_; }
    const std::vector<TailBlock>& tail_blocks() const { return tails_; }
    bool all_constant() const { return tails_.empty(); }

    SumClass pos_sum() const { return pos_sum_; }
    SumClass neg_sum() const { return neg_sum_; } // sum of |negative deltas|, >= 0 or +inf
    Cardinal pos_count() const { return pos_count_; }
    Cardinal neg_count() const { return neg_count_; }

    // exists c > 0 with infinitely many deltas above c (below -c).
    bool pos_bounded_away() const { return pos_bounded_away_; }
    bool neg_bounded_away() const { return neg_bounded_away_; }

    Cardinal pos_count_above(const Rational& c) const; // c > 0
    Cardinal neg_count_below(const Rational& c) const; // c < 0

    // Smallest positive delta / largest |negative delta|; constant blocks
    // only (finite-valued comparisons).
    std::optional<Rational> min_gain() const;
    std::optional<Rational> max_loss() const;

    SumClass classify() const; // sum_classify over all blocks

    DeltaProfile negated() const;

    friend DeltaProfile delta_profile(const World& w, const World& v);

  private:
    void finalize();

    std::vector<ConstantBlock> constants_;
    std::vector<TailBlock> tails_;
    SumClass pos_sum_ = SumClass::finite(0);
    SumClass neg_sum_ = SumClass::finite(0);
    Cardinal pos_count_ = Cardinal::finite(0);
    Cardinal neg_count_ = Cardinal::finite(0);
    bool pos_bounded_away_ = false;
    bool neg_bounded_away_ = false;
};

DeltaProfile delta_profile(const World& w, const World& v);

} // namespace swr

#pragma once

// Test-only oracles: independent brute-force routes used to freeze expected
// values. These must stay independent of the library's decision procedures.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swr/criteria.hpp"
#include "swr/delta.hpp"
#include "swr/ordered.hpp"
#include "swr/world.hpp"

namespace swr::testing {

// Convenience world builders (strings parsed as exact rationals).
Population mk_pop(const std::vector<std::pair<std::string, std::string>>& cells);
World mk_world(const Population& p,
               const std::vector<std::pair<std::string, CellValue>>& values);
World mk_plain_world(const Population& p,
                     const std::vector<std::pair<std::string, std::string>>& values);
Rational q(const std::string& s);

// Direct summation over explicitly expanded individuals; all counts must be
// finite.
Rational brute_force_sum(const std::vector<std::pair<Rational, std::uint64_t>>& blocks);

// Explicit individual-level instantiation of a pair of finite-cell worlds
// (the padding omega cell at delta 0 is ignored).
struct ExplicitPair {
    std::vector<Rational> w, v;
};
ExplicitPair expand_pair(const World& w, const World& v, std::uint64_t omega_truncation);

// Brute-force check of the spd universal quantifier: all equal-size
// selections Y from the gains and Z from the losses (both nonempty, size <=
// max_k) must satisfy sum of gains >= sum of losses. Returns nullopt when
// the second disjunct does not apply (no gains or no losses).
std::optional<bool> spd_quantifier_brute(const ExplicitPair& p, std::size_t max_k);

// Truncation brute force for the finite-sum criterion: materializes the
// first `horizon` delta terms per block (finite blocks expanded, tails
// unrolled) plus exact remainders, then searches candidate sets A directly.
bool fsp_weak_brute(const World& w, const World& v, std::uint64_t horizon);

// Eventual-sign decisions for streams by direct S_N computation up to
// 4*lcm(periods) + prefix.
bool cu_weak_brute(const PeriodicStream& w, const PeriodicStream& v);
bool ot_strict_brute(const PeriodicStream& w, const PeriodicStream& v);
bool ot_equiv_brute(const PeriodicStream& w, const PeriodicStream& v);

} // namespace swr::testing

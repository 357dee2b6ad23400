#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "swr/delta.hpp"
#include "swr/world.hpp"

namespace swr {

enum class Verdict { StrictlyBetter, StrictlyWorse, Equivalent, Incomparable };

std::string verdict_name(Verdict v);
Verdict verdict_flip(Verdict v);

// Two independent weak tests; no completeness shortcut.
Verdict verdict_from_weak(bool forward, bool backward);
bool verdict_weak(Verdict v); // forward weak comparison holds

enum class Criterion {
    SumPreorder,        // "sp"
    FiniteSumPreorder,  // "fsp"
    CountingPreorder,   // "cp"
    ParetoPreorder,     // "pareto"
    SumPlusDifferences, // "spd"
    ConvergentDivergences, // "cdv"
    CatchingUp,         // "cu"  (ordered module)
    Overtaking          // "ot"  (ordered module)
};

std::string criterion_name(Criterion c);
std::optional<Criterion> criterion_from_name(std::string_view name);

// Weak comparisons decided from a delta profile (forward direction).
bool sp_weak(const DeltaProfile& d);
bool fsp_weak(const DeltaProfile& d);
bool pareto_weak(const DeltaProfile& d);
bool spd_weak(const DeltaProfile& d);
bool cdv_weak(const DeltaProfile& d);

Verdict compare_sp(const World& w, const World& v);
Verdict compare_fsp(const World& w, const World& v);
Verdict compare_cp(const World& w, const World& v);
Verdict pareto_compare(const World& w, const World& v);
Verdict compare_spd(const World& w, const World& v);
Verdict compare_cdv(const World& w, const World& v);

// Dispatch for the unordered criteria (CatchingUp/Overtaking live in
// ordered.hpp and take streams).
Verdict compare(Criterion c, const World& w, const World& v);

} // namespace swr

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "swr/axioms.hpp"
#include "swr/rearrangement.hpp"
#include "swr/world.hpp"

namespace swr {

// A refutation certificate is a finite derivation: assuming w >= v in an
// arbitrary preorder satisfying the stated axioms, the steps derive facts
// until an explicit contradiction closes the proof. Every fact is carried as
// fully-represented worlds so the checker can re-verify each step without
// trusting the generator.

enum class Rel { Weak, Strict, Equiv };

std::string rel_name(Rel r);
std::optional<Rel> rel_from_name(const std::string& s);

struct Fact {
    Rel rel = Rel::Weak;
    World left;
    World right;
};

enum class StepKind {
    AssumeWeak,
    ByStrongPareto,
    ByRearrangement,
    ByConvexDominance,
    ByTransitivity,
    ConcludeContradiction,
};

enum class ContradictionKind { StrictCycle, ReflexivityViolation, ParetoViolation };

std::string step_kind_name(StepKind k);
std::optional<StepKind> step_kind_from_name(const std::string& s);
std::string contradiction_name(ContradictionKind k);
std::optional<ContradictionKind> contradiction_from_name(const std::string& s);

struct CertStep {
    StepKind kind = StepKind::AssumeWeak;
    std::optional<Fact> fact;           // absent for ConcludeContradiction
    std::vector<std::size_t> premises;  // indices of earlier steps
    std::optional<Rearrangement> rearrangement; // ByRearrangement
    std::vector<Rational> weights;              // ByConvexDominance
    std::optional<ContradictionKind> contradiction; // ConcludeContradiction
};

struct RefutationCertificate {
    // The refuted claim: target_w >= target_v (over the certificate's own,
    // possibly refined, population).
    World target_w;
    World target_v;
    std::string direction = "forward";
    std::vector<CertStep> steps;
    std::set<AxiomId> used_axioms;
};

// Two-valued generator: {0,1}-valued pair where w >= v fails under the
// counting preorder. Certificate uses only StrongPareto and
// PermutationInvariance. Throws NotRefutable if w >= v actually holds;
// DomainError off {0,1}.
RefutationCertificate refute_two_valued(const World& w, const World& v);

// Finite-valued generator: pair where w >= v fails under the sum preorder.
// Selects proof case 1 / 2a / 2b / 2c from the extracted
// (a, b, c, d). Throws NotRefutable if w >= v holds; DomainError on tails.
RefutationCertificate refute_finite_valued(const World& w, const World& v);

// The proof case a certificate generator would select (diagnostic; same
// preconditions as refute_finite_valued).
std::string select_case(const World& w, const World& v);

struct CheckResult {
    bool valid = true;
    std::size_t failed_step = 0;
    std::string reason;
};

// Independent validation kernel: re-verifies every step by recomputation
// (pareto verdicts, rearrangement images, convex combinations, chain
// adjacency) and that the final contradiction is real. Never trusts
// generator-supplied equalities or strictness flags.
CheckResult check_certificate(const RefutationCertificate& c);

} // namespace swr

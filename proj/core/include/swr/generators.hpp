#pragma once

#include <random>

#include "swr/ordered.hpp"
#include "swr/rearrangement.hpp"
#include "swr/world.hpp"

namespace swr {

using Rng = std::mt19937_64;

// Structured random instances for the axiom harness and the density
// experiment. All draws are deterministic functions of the Rng state.
struct GenOptions {
    int min_cells = 2;
    int max_cells = 8;
    int max_denominator = 6;
    int max_magnitude = 8;
    int omega_percent = 50;   // chance that a cell is omega-sized
    int max_finite_size = 6;  // sizes of finite cells
    bool two_valued = false;  // {0,1} worlds (counting-preorder domain)
    bool allow_tails = false; // admit geometric tails on omega cells
};

Rational random_rational(Rng& rng, const GenOptions& o);
Population random_population(Rng& rng, const GenOptions& o);
World random_world(Rng& rng, const Population& p, const GenOptions& o);
std::pair<World, World> random_pair(Rng& rng, const GenOptions& o);

// A convex weight α: drawn from the lattice {0, 1/4, 1/3, 1/2, 2/3, 3/4, 1}
// plus random rationals with denominator <= 12.
Rational random_alpha(Rng& rng);
// n nonnegative weights summing to exactly 1.
std::vector<Rational> random_weights(Rng& rng, std::size_t n);

// A refinement of p (tail-valued cells are never split). Both worlds are
// re-expressed over the refined population; values are inherited from parents.
struct Refined {
    Population population;
    std::map<CellId, CellId> parent;
};
Refined random_refinement(Rng& rng, const Population& p,
                          const std::vector<const World*>& worlds);
World inherit(const Refined& r, const World& w);

// A permutation of the refined parts: parts of equal cardinality may trade
// places. With finite_support, omega parts stay fixed.
Rearrangement random_part_permutation(Rng& rng, const Population& p, bool finite_support);

// Random eventually-periodic streams.
PeriodicStream random_stream(Rng& rng, const GenOptions& o);

// A world w' >= w with at least one strictly improved nonempty cell.
World dominating_world(Rng& rng, const World& w, const GenOptions& o);

// The density experiment's analytic generator: random finite cells plus two
// omega cells. With both_sign_omega the omega deltas get opposite signs
// (indeterminate total by construction); otherwise the omega cells agree and
// the difference has finite support (totally ordered under the sum preorder).
std::pair<World, World> density_pair(Rng& rng, const GenOptions& o, bool both_sign_omega);

} // namespace swr

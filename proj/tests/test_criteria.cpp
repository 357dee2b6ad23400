#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "swr/criteria.hpp"
#include "swr/errors.hpp"

using namespace swr;
using swr::testing::mk_plain_world;
using swr::testing::mk_pop;
using swr::testing::mk_world;
using swr::testing::q;

namespace {

// the two-cell witness pair: w = 2 on A, 0 elsewhere; v = 0 on A, 1 elsewhere
struct Witness {
    Population p = mk_pop({{"A", "omega"}, {"rest", "omega"}});
    World w = mk_plain_world(p, {{"A", "2"}, {"rest", "0"}});
    World v = mk_plain_world(p, {{"A", "0"}, {"rest", "1"}});
};

} // namespace

TEST_CASE("verdict plumbing") {
    CHECK(verdict_name(Verdict::StrictlyBetter) == "strictly-better");
    CHECK(verdict_name(Verdict::Incomparable) == "incomparable");
    CHECK(verdict_flip(Verdict::StrictlyBetter) == Verdict::StrictlyWorse);
    CHECK(verdict_flip(Verdict::Equivalent) == Verdict::Equivalent);
    CHECK(verdict_from_weak(true, true) == Verdict::Equivalent);
    CHECK(verdict_from_weak(true, false) == Verdict::StrictlyBetter);
    CHECK(verdict_from_weak(false, false) == Verdict::Incomparable);
    CHECK(verdict_weak(Verdict::Equivalent));
    CHECK_FALSE(verdict_weak(Verdict::StrictlyWorse));

    for (Criterion c : {Criterion::SumPreorder, Criterion::FiniteSumPreorder,
                        Criterion::CountingPreorder, Criterion::ParetoPreorder,
                        Criterion::SumPlusDifferences, Criterion::ConvergentDivergences,
                        Criterion::CatchingUp, Criterion::Overtaking})
        CHECK(criterion_from_name(criterion_name(c)) == c);
    CHECK_FALSE(criterion_from_name("nope").has_value());
}

TEST_CASE("sum preorder") {
    Witness x;
    CHECK(compare_sp(x.w, x.v) == Verdict::Incomparable); // indeterminate both ways
    CHECK(compare_sp(x.w, x.w) == Verdict::Equivalent);

    // one-high-individual vs its geometric spread: equal total
    Population ps = mk_pop({{"X", "omega"}});
    TailDescriptor one;
    one.exceptions[1] = q("1");
    World w1 = mk_world(ps, {{"X", one}});
    World vg = mk_world(ps, {{"X", TailDescriptor::geometric_of(1, q("1/2"))}});
    CHECK(compare_sp(w1, vg) == Verdict::Equivalent);

    // constant 1 on A vs harmonic on B: both sides diverge
    Population p3 = mk_pop({{"A", "omega"}, {"B", "omega"}, {"rest", "omega"}});
    World wa = mk_plain_world(p3, {{"A", "1"}, {"B", "0"}, {"rest", "0"}});
    World vb = mk_world(p3, {{"A", q("0")},
                             {"B", TailDescriptor::harmonic_of(1)},
                             {"rest", q("0")}});
    CHECK(compare_sp(wa, vb) == Verdict::Incomparable);

    // plain dominance
    World less = mk_plain_world(x.p, {{"A", "2"}, {"rest", "-1"}});
    CHECK(compare_sp(x.w, less) == Verdict::StrictlyBetter);
    CHECK(compare_sp(less, x.w) == Verdict::StrictlyWorse);
}

TEST_CASE("finite sum preorder") {
    // the vallentyne gap: strict under fsp, equivalent under sp
    Population ps = mk_pop({{"X", "omega"}});
    TailDescriptor one;
    one.exceptions[1] = q("1");
    World w1 = mk_world(ps, {{"X", one}});
    World vg = mk_world(ps, {{"X", TailDescriptor::geometric_of(1, q("1/2"))}});
    CHECK(compare_fsp(w1, vg) == Verdict::StrictlyBetter);
    CHECK(compare_sp(w1, vg) == Verdict::Equivalent);
    CHECK(compare_fsp(w1, w1) == Verdict::Equivalent);

    // agrees with the truncation oracle on these
    CHECK(swr::testing::fsp_weak_brute(w1, vg, 64));
    CHECK_FALSE(swr::testing::fsp_weak_brute(vg, w1, 64));
}

TEST_CASE("fsp equals sp on finite-valued worlds") {
    std::mt19937_64 rng(777u);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), ncells(2, 5), size(1, 5),
        omega_coin(0, 2);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = ncells(rng);
        std::vector<std::pair<std::string, std::string>> cells;
        bool have_omega = false;
        for (int i = 0; i < n; ++i) {
            bool om = omega_coin(rng) == 0 || (i == n - 1 && !have_omega);
            have_omega = have_omega || om;
            cells.emplace_back("c" + std::to_string(i), om ? "omega" : std::to_string(size(rng)));
        }
        Population p = mk_pop(cells);
        auto rnd_world = [&]() {
            std::vector<std::pair<std::string, std::string>> vals;
            for (const auto& [id, sz] : cells)
                vals.emplace_back(id, format_rational(Rational(num(rng), den(rng))));
            return mk_plain_world(p, vals);
        };
        World w = rnd_world(), v = rnd_world();
        CHECK(compare_fsp(w, v) == compare_sp(w, v));
    }
}

TEST_CASE("counting preorder") {
    // |1_w - 1_v| = 3, |1_v - 1_w| = 1
    Population p = mk_pop({{"g", "3"}, {"l", "1"}, {"both", "4"}, {"rest", "omega"}});
    World w = mk_plain_world(p, {{"g", "1"}, {"l", "0"}, {"both", "1"}, {"rest", "0"}});
    World v = mk_plain_world(p, {{"g", "0"}, {"l", "1"}, {"both", "1"}, {"rest", "0"}});
    CHECK(compare_cp(w, v) == Verdict::StrictlyBetter);
    CHECK(compare_cp(v, w) == Verdict::StrictlyWorse);
    CHECK(compare_cp(w, w) == Verdict::Equivalent);

    // brute-force count over the 8 explicit individuals
    auto pair = swr::testing::expand_pair(w, v, 0);
    int gained = 0, lost = 0;
    for (size_t i = 0; i < pair.w.size(); ++i) {
        gained += pair.w[i] == 1 && pair.v[i] == 0;
        lost += pair.w[i] == 0 && pair.v[i] == 1;
    }
    CHECK(gained == 3);
    CHECK(lost == 1);

    // both difference sets infinite
    Population pi = mk_pop({{"A", "omega"}, {"B", "omega"}, {"rest", "omega"}});
    World wi = mk_plain_world(pi, {{"A", "1"}, {"B", "0"}, {"rest", "0"}});
    World vi = mk_plain_world(pi, {{"A", "0"}, {"B", "1"}, {"rest", "0"}});
    CHECK(compare_cp(wi, vi) == Verdict::Incomparable);

    // equal finite symmetric difference: equivalent
    Population pe = mk_pop({{"a", "2"}, {"b", "2"}, {"rest", "omega"}});
    World we = mk_plain_world(pe, {{"a", "1"}, {"b", "0"}, {"rest", "1"}});
    World ve = mk_plain_world(pe, {{"a", "0"}, {"b", "1"}, {"rest", "1"}});
    CHECK(compare_cp(we, ve) == Verdict::Equivalent);

    CHECK_THROWS_AS(compare_cp(mk_plain_world(pe, {{"a", "2"}, {"b", "0"}, {"rest", "1"}}), ve),
                    DomainError);
}

TEST_CASE("pareto preorder") {
    Population p = mk_pop({{"Am", "omega"}, {"AmA", "omega"}, {"rest", "omega"}});
    World w = mk_plain_world(p, {{"Am", "1"}, {"AmA", "1"}, {"rest", "0"}});
    World wm = mk_plain_world(p, {{"Am", "1"}, {"AmA", "0"}, {"rest", "0"}});
    CHECK(pareto_compare(w, wm) == Verdict::StrictlyBetter);
    CHECK(pareto_compare(wm, w) == Verdict::StrictlyWorse);
    CHECK(pareto_compare(w, w) == Verdict::Equivalent);

    World u = mk_plain_world(p, {{"Am", "0"}, {"AmA", "0"}, {"rest", "1"}});
    CHECK(pareto_compare(w, u) == Verdict::Incomparable);

    // tails compare termwise
    Population ps = mk_pop({{"X", "omega"}});
    World g = mk_world(ps, {{"X", TailDescriptor::geometric_of(1, q("1/2"))}});
    World g2 = mk_world(ps, {{"X", TailDescriptor::geometric_of(q("1/2"), q("1/2"))}});
    CHECK(pareto_compare(g, g2) == Verdict::StrictlyBetter);
    World alt = mk_world(ps, {{"X", TailDescriptor::geometric_of(1, q("-1/2"))}});
    CHECK(pareto_compare(g, alt) == Verdict::StrictlyBetter); // dominates termwise
}

TEST_CASE("sum-plus-differences") {
    Witness x;
    // min gain 2 >= max loss 1 extends the incomparable sp verdict
    CHECK(compare_sp(x.w, x.v) == Verdict::Incomparable);
    CHECK(compare_spd(x.w, x.v) == Verdict::StrictlyBetter);

    // +1 against -2: the single-pair selection fails in the w-direction
    World w1 = mk_plain_world(x.p, {{"A", "1"}, {"rest", "0"}});
    World v2 = mk_plain_world(x.p, {{"A", "0"}, {"rest", "2"}});
    CHECK_FALSE(verdict_weak(compare_spd(w1, v2)));
    CHECK(compare_spd(w1, v2) == Verdict::StrictlyWorse); // 2 >= 1 the other way

    // pareto dominance goes through the sp clause
    World dom = mk_plain_world(x.p, {{"A", "3"}, {"rest", "1"}});
    CHECK(compare_spd(dom, x.w) == Verdict::StrictlyBetter);
    CHECK(compare_spd(x.w, x.w) == Verdict::Equivalent);

    // out of domain on tails
    Population ps = mk_pop({{"X", "omega"}});
    World g = mk_world(ps, {{"X", TailDescriptor::geometric_of(1, q("1/2"))}});
    World z = mk_plain_world(ps, {{"X", "0"}});
    CHECK_THROWS_AS(compare_spd(g, z), DomainError);
}

TEST_CASE("spd agrees with the quantifier brute force on finite analogues") {
    // finite instantiations of the block structures, padded with a zero cell
    auto run = [](const char* gain_d, const char* gain_n, const char* loss_d,
                  const char* loss_n) {
        // w gains gain_d on g; v is better by loss_d on l
        Population p = mk_pop({{"g", gain_n}, {"l", loss_n}, {"pad", "omega"}});
        World w = mk_plain_world(p, {{"g", gain_d}, {"l", "0"}, {"pad", "0"}});
        World v = mk_plain_world(p, {{"g", "0"}, {"l", loss_d}, {"pad", "0"}});
        auto pair = swr::testing::expand_pair(w, v, 0);
        auto brute = swr::testing::spd_quantifier_brute(pair, 4);
        REQUIRE(brute.has_value());
        // totals differ between the finite analogue and the omega original, so
        // compare the difference clause in isolation
        DeltaProfile d = delta_profile(w, v);
        bool clause = d.min_gain() && d.max_loss() && *d.min_gain() >= *d.max_loss();
        CHECK(clause == *brute);
    };
    run("2", "6", "1", "6"); // witness shape: holds
    run("1", "6", "2", "6"); // reversed: fails
    run("1", "4", "1", "8"); // equal magnitudes: holds
    run("3/2", "5", "2", "3");
}

TEST_CASE("spd randomized against brute force") {
    std::mt19937_64 rng(4242u);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3), ncells(2, 4), size(1, 4);
    for (int trial = 0; trial < 500; ++trial) {
        int n = ncells(rng);
        std::vector<std::pair<std::string, std::string>> cells;
        for (int i = 0; i < n; ++i)
            cells.emplace_back("c" + std::to_string(i), std::to_string(size(rng)));
        cells.emplace_back("pad", "omega");
        Population p = mk_pop(cells);
        auto rnd_world = [&]() {
            std::vector<std::pair<std::string, std::string>> vals;
            for (int i = 0; i < n; ++i)
                vals.emplace_back("c" + std::to_string(i),
                                  format_rational(Rational(num(rng), den(rng))));
            vals.emplace_back("pad", "0");
            return mk_plain_world(p, vals);
        };
        World w = rnd_world(), v = rnd_world();
        auto pair = swr::testing::expand_pair(w, v, 0);
        REQUIRE(pair.w.size() <= 16);

        Rational total = 0;
        for (size_t i = 0; i < pair.w.size(); ++i)
            total += pair.w[i] - pair.v[i];
        auto brute_clause = swr::testing::spd_quantifier_brute(pair, 4);
        bool brute = total >= 0 || (brute_clause.has_value() && *brute_clause);
        CHECK(verdict_weak(compare_spd(w, v)) == brute);
    }
}

TEST_CASE("convergent divergences") {
    // constant 1 on A vs harmonic on B: strict under the divergence clause
    Population p3 = mk_pop({{"A", "omega"}, {"B", "omega"}, {"rest", "omega"}});
    World wa = mk_plain_world(p3, {{"A", "1"}, {"B", "0"}, {"rest", "0"}});
    World vb = mk_world(p3, {{"A", q("0")},
                             {"B", TailDescriptor::harmonic_of(1)},
                             {"rest", q("0")}});
    CHECK(compare_sp(wa, vb) == Verdict::Incomparable);
    CHECK(compare_cdv(wa, vb) == Verdict::StrictlyBetter);
    CHECK(compare_cdv(wa, wa) == Verdict::Equivalent);

    // both sides bounded away: no extension
    Witness x;
    CHECK(compare_cdv(x.w, x.v) == Verdict::Incomparable);
}

TEST_CASE("cdv equals sp on finite-valued worlds") {
    std::mt19937_64 rng(99u);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), ncells(2, 5), size(1, 5),
        omega_coin(0, 1);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = ncells(rng);
        std::vector<std::pair<std::string, std::string>> cells;
        for (int i = 0; i + 1 < n; ++i)
            cells.emplace_back("c" + std::to_string(i),
                               omega_coin(rng) ? "omega" : std::to_string(size(rng)));
        cells.emplace_back("last", "omega");
        Population p = mk_pop(cells);
        auto rnd_world = [&]() {
            std::vector<std::pair<std::string, std::string>> vals;
            for (const auto& [id, sz] : cells)
                vals.emplace_back(id, format_rational(Rational(num(rng), den(rng))));
            return mk_plain_world(p, vals);
        };
        World w = rnd_world(), v = rnd_world();
        CHECK(compare_cdv(w, v) == compare_sp(w, v));
    }
}

TEST_CASE("dispatch") {
    Witness x;
    CHECK(compare(Criterion::SumPreorder, x.w, x.v) == Verdict::Incomparable);
    CHECK(compare(Criterion::SumPlusDifferences, x.w, x.v) == Verdict::StrictlyBetter);
    CHECK_THROWS_AS(compare(Criterion::CatchingUp, x.w, x.v), DomainError);
    CHECK_THROWS_AS(compare(Criterion::Overtaking, x.w, x.v), DomainError);
}

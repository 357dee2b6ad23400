#include "doctest.h"

#include <set>

#include "swr/cert_json.hpp"
#include "swr/criteria.hpp"
#include "swr/errors.hpp"
#include "swr/generators.hpp"
#include "swr/refuter.hpp"

#include "oracles.hpp"

using namespace swr;
using namespace swr::testing;

namespace {

void expect_valid(const RefutationCertificate& c) {
    CheckResult r = check_certificate(c);
    INFO("step " << r.failed_step << ": " << r.reason);
    CHECK(r.valid);
}

GenOptions corpus_options(bool two_valued) {
    GenOptions o;
    o.max_cells = 5;
    o.max_denominator = 3;
    o.max_magnitude = 4;
    o.max_finite_size = 4;
    o.two_valued = two_valued;
    return o;
}

} // namespace

TEST_CASE("directed finite-valued refutations cover every proof case") {
    struct Row {
        std::vector<std::pair<std::string, std::string>> pop;
        std::vector<std::pair<std::string, std::string>> w, v;
        std::string expect;
    };
    // left/right oriented so that w >= v fails under the sum preorder
    const std::vector<Row> rows = {
        {{{"c1", "2"}, {"c2", "1"}, {"rest", "omega"}},
         {{"c1", "0"}, {"c2", "5"}, {"rest", "0"}},
         {{"c1", "3"}, {"c2", "0"}, {"rest", "0"}},
         "1"},
        {{{"A", "omega"}, {"rest", "omega"}},
         {{"A", "2"}, {"rest", "0"}},
         {{"A", "0"}, {"rest", "1"}},
         "2a"},
        {{{"A", "omega"}, {"B", "omega"}},
         {{"A", "3"}, {"B", "0"}},
         {{"A", "1"}, {"B", "1/2"}},
         "2b"},
        {{{"A", "omega"}, {"B", "omega"}},
         {{"A", "1"}, {"B", "2"}},
         {{"A", "0"}, {"B", "5"}},
         "2c"}};
    for (const Row& row : rows) {
        Population p = mk_pop(row.pop);
        World w = mk_plain_world(p, row.w);
        World v = mk_plain_world(p, row.v);
        INFO("expected case " << row.expect);
        CHECK(select_case(w, v) == row.expect);
        RefutationCertificate cert = refute_finite_valued(w, v);
        expect_valid(cert);
        // every certificate survives a serialization round trip
        expect_valid(parse_certificate(serialize_certificate(cert)));
    }
}

TEST_CASE("random finite-valued corpus: refutable pairs validate, weak pairs do not refute") {
    Rng rng(6021);
    GenOptions o = corpus_options(false);
    int refuted = 0, weak = 0;
    std::set<std::string> cases;
    while (refuted < 150) {
        auto [w, v] = random_pair(rng, o);
        if (verdict_weak(compare_sp(w, v))) {
            if (weak < 25) {
                CHECK_THROWS_AS(refute_finite_valued(w, v), NotRefutable);
                ++weak;
            }
            continue;
        }
        RefutationCertificate cert = refute_finite_valued(w, v);
        expect_valid(cert);
        cases.insert(select_case(w, v));
        ++refuted;
    }
    CHECK(weak > 0);
    CHECK(cases.size() >= 2); // the random corpus is not degenerate
}

TEST_CASE("random two-valued corpus validates and uses only the prop-2 axioms") {
    Rng rng(6022);
    GenOptions o = corpus_options(true);
    const std::set<AxiomId> allowed = {AxiomId::StrongPareto,
                                       AxiomId::PermutationInvariance};
    int refuted = 0;
    while (refuted < 50) {
        auto [w, v] = random_pair(rng, o);
        if (verdict_weak(compare_cp(w, v)))
            continue;
        RefutationCertificate cert = refute_two_valued(w, v);
        // strict-dominance pairs close with Strong Pareto alone; every other
        // branch also rearranges
        CHECK(cert.used_axioms.count(AxiomId::StrongPareto) == 1);
        for (AxiomId a : cert.used_axioms)
            CHECK(allowed.count(a) == 1);
        expect_valid(cert);
        ++refuted;
    }
}

TEST_CASE("domain preconditions") {
    Population p = mk_pop({{"A", "omega"}, {"rest", "omega"}});
    World geo = mk_world(p, {{"A", TailDescriptor::geometric_of(q("1"), q("1/2"))},
                             {"rest", q("0")}});
    World one = mk_plain_world(p, {{"A", "1"}, {"rest", "0"}});
    CHECK_THROWS_AS(refute_finite_valued(geo, one), DomainError);
    World two = mk_plain_world(p, {{"A", "2"}, {"rest", "0"}});
    CHECK_THROWS_AS(refute_two_valued(two, one), DomainError);
}

TEST_CASE("the checker rejects targeted corruptions") {
    Population p = mk_pop({{"A", "omega"}, {"rest", "omega"}});
    World w = mk_plain_world(p, {{"A", "2"}, {"rest", "0"}});
    World v = mk_plain_world(p, {{"A", "0"}, {"rest", "1"}});
    const RefutationCertificate base = refute_finite_valued(w, v);
    REQUIRE(check_certificate(base).valid);

    auto corrupted = [&](auto mutate) {
        RefutationCertificate c = base;
        mutate(c);
        return check_certificate(c).valid;
    };

    SUBCASE("flipping a derived relation to strict") {
        for (std::size_t i = 0; i < base.steps.size(); ++i) {
            if (!base.steps[i].fact || base.steps[i].fact->rel != Rel::Weak)
                continue;
            CHECK(!corrupted([&](RefutationCertificate& c) {
                c.steps[i].fact->rel = Rel::Strict;
            }));
            break;
        }
    }
    SUBCASE("convex weights that do not sum to one") {
        for (std::size_t i = 0; i < base.steps.size(); ++i) {
            if (base.steps[i].kind != StepKind::ByConvexDominance)
                continue;
            CHECK(!corrupted([&](RefutationCertificate& c) {
                c.steps[i].weights.front() += Rational(1, 7);
            }));
            break;
        }
    }
    SUBCASE("tampering with a fact's world") {
        CHECK(!corrupted([&](RefutationCertificate& c) {
            // claim the assumption compares different worlds than the target
            c.target_v = c.target_w;
        }));
    }
    SUBCASE("dropping the final contradiction") {
        CHECK(!corrupted([&](RefutationCertificate& c) { c.steps.pop_back(); }));
    }
    SUBCASE("underdeclaring the axioms actually used") {
        CHECK(!corrupted([&](RefutationCertificate& c) {
            c.used_axioms.erase(AxiomId::QuasiIndependence);
        }));
    }
    SUBCASE("breaking a transitivity chain") {
        for (std::size_t i = 0; i < base.steps.size(); ++i) {
            if (base.steps[i].kind != StepKind::ByTransitivity ||
                base.steps[i].premises.size() < 2)
                continue;
            CHECK(!corrupted([&](RefutationCertificate& c) {
                std::swap(c.steps[i].premises.front(), c.steps[i].premises.back());
            }));
            break;
        }
    }
}

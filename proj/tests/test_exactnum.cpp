#include "doctest.h"

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "swr/cardinal.hpp"
#include "swr/errors.hpp"
#include "swr/rational.hpp"
#include "swr/sumclass.hpp"

using namespace swr;
using swr::testing::q;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-0") == Rational(0));
    CHECK(parse_rational("6/4") == Rational(3, 2)); // lowest terms
    CHECK(format_rational(Rational(3, 4)) == "3/4");
    CHECK(format_rational(Rational(-5)) == "-5");
    CHECK(format_rational(Rational(0)) == "0");
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);

    CHECK(sign_of(q("-2/7")) == -1);
    CHECK(sign_of(q("0")) == 0);
    CHECK(rational_abs(q("-2/7")) == q("2/7"));
}

TEST_CASE("cardinal arithmetic and order") {
    CHECK(cardinal_add(Cardinal::finite(2), Cardinal::finite(3)) == Cardinal::finite(5));
    CHECK(cardinal_add(Cardinal::omega(), Cardinal::finite(5)) == Cardinal::omega());
    CHECK(cardinal_add(Cardinal::omega(), Cardinal::omega()) == Cardinal::omega());

    CHECK(Cardinal::finite(100) < Cardinal::omega());
    CHECK(Cardinal::omega() <= Cardinal::omega());
    CHECK(Cardinal::finite(3) < Cardinal::finite(4));

    CHECK(parse_cardinal("omega") == Cardinal::omega());
    CHECK(parse_cardinal("17") == Cardinal::finite(17));
    CHECK_THROWS_AS(parse_cardinal("-1"), ParseError);
    CHECK_THROWS_AS(parse_cardinal("aleph"), ParseError);

    // commutative / associative / identity, exhaustive on small finite + omega
    std::vector<Cardinal> cs;
    for (std::uint64_t n = 0; n <= 100; n += 7)
        cs.push_back(Cardinal::finite(n));
    cs.push_back(Cardinal::omega());
    for (auto a : cs) {
        CHECK(cardinal_add(a, Cardinal::finite(0)) == a);
        for (auto b : cs) {
            CHECK(cardinal_add(a, b) == cardinal_add(b, a));
            for (auto c : cs)
                CHECK(cardinal_add(cardinal_add(a, b), c) == cardinal_add(a, cardinal_add(b, c)));
        }
    }
}

TEST_CASE("sum_classify frozen examples") {
    CHECK(sum_classify({SumTerm::block(1, Cardinal::omega())}) == SumClass::plus_infinity());
    CHECK(sum_classify({SumTerm::block(2, Cardinal::omega()),
                        SumTerm::block(-1, Cardinal::omega())}) == SumClass::indeterminate());
    CHECK(sum_classify({SumTerm::block(3, Cardinal::finite(2)),
                        SumTerm::block(-5, Cardinal::finite(1))}) ==
          SumClass::finite(swr::testing::brute_force_sum({{3, 2}, {-5, 1}})));
    CHECK(sum_classify({SumTerm::block(-1, Cardinal::omega())}) == SumClass::minus_infinity());
    CHECK(sum_classify(std::vector<SumTerm>{}) == SumClass::finite(0));
    // zero deltas on omega blocks contribute nothing
    CHECK(sum_classify({SumTerm::block(0, Cardinal::omega())}) == SumClass::finite(0));
}

TEST_CASE("sum_classify with tail blocks") {
    auto fin = [](const char* s) { return SumClass::finite(parse_rational(s)); };
    CHECK(sum_classify({SumTerm::tail_block(fin("1/2"), fin("1/2"))}) == SumClass::finite(0));
    CHECK(sum_classify({SumTerm::tail_block(SumClass::plus_infinity(), fin("0"))}) ==
          SumClass::plus_infinity());
    CHECK(sum_classify({SumTerm::tail_block(SumClass::plus_infinity(), SumClass::plus_infinity())}) ==
          SumClass::indeterminate());
    CHECK(sum_classify({SumTerm::tail_block(fin("0"), SumClass::plus_infinity()),
                        SumTerm::block(7, Cardinal::finite(3))}) == SumClass::minus_infinity());
    // tail parts must be nonnegative-finite or +inf
    CHECK_THROWS_AS(sum_classify({SumTerm::tail_block(fin("-1"), fin("0"))}), DomainError);
    CHECK_THROWS_AS(sum_classify({SumTerm::tail_block(SumClass::minus_infinity(), fin("0"))}),
                    DomainError);
}

TEST_CASE("sum_classify invariances") {
    std::mt19937_64 rng(20260823u);
    std::uniform_int_distribution<int> num(-8, 8), den(1, 6), cnt(0, 9), coin(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<SumTerm> terms;
        int blocks = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < blocks; ++i) {
            Rational d(num(rng), den(rng));
            Cardinal c = coin(rng) == 0 ? Cardinal::omega()
                                        : Cardinal::finite(static_cast<std::uint64_t>(cnt(rng)));
            if (c.is_zero())
                c = Cardinal::finite(1);
            terms.push_back(SumTerm::block(d, c));
        }
        SumClass base = sum_classify(terms);

        // permutation invariance
        std::vector<SumTerm> shuffled = terms;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(sum_classify(shuffled) == base);

        // block splitting invariance
        std::vector<SumTerm> split;
        for (const auto& t : terms) {
            if (t.count.is_omega()) {
                split.push_back(SumTerm::block(t.delta, Cardinal::omega()));
                split.push_back(SumTerm::block(t.delta, Cardinal::omega()));
            } else if (t.count.value() >= 2) {
                std::uint64_t m = t.count.value() / 2;
                split.push_back(SumTerm::block(t.delta, Cardinal::finite(m)));
                split.push_back(SumTerm::block(t.delta, Cardinal::finite(t.count.value() - m)));
            } else {
                split.push_back(t);
            }
        }
        CHECK(sum_classify(split) == base);

        // all-finite inputs agree with brute-force expansion
        bool all_finite = std::all_of(terms.begin(), terms.end(),
                                      [](const SumTerm& t) { return t.count.is_finite(); });
        if (all_finite) {
            std::vector<std::pair<Rational, std::uint64_t>> blocks_v;
            for (const auto& t : terms)
                blocks_v.emplace_back(t.delta, t.count.value());
            CHECK(base == SumClass::finite(swr::testing::brute_force_sum(blocks_v)));
        }
    }
}

TEST_CASE("sum class accessors") {
    CHECK(SumClass::finite(q("2/3")).is_finite());
    CHECK(SumClass::finite(q("2/3")).value() == q("2/3"));
    CHECK_FALSE(SumClass::plus_infinity().is_finite());
    CHECK(SumClass::plus_infinity().to_string() == "+inf");
    CHECK(SumClass::minus_infinity().to_string() == "-inf");
    CHECK(SumClass::indeterminate().to_string() == "indeterminate");
    CHECK(SumClass::finite(q("1/2")).to_string() == "1/2");
}

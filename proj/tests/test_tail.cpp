#include "doctest.h"

#include "oracles.hpp"
#include "swr/errors.hpp"
#include "swr/tail.hpp"

using namespace swr;
using swr::testing::q;

TEST_CASE("term evaluation") {
    auto g = TailDescriptor::geometric_of(1, q("1/2"));
    CHECK(g.term(1) == q("1/2"));
    CHECK(g.term(3) == q("1/8"));

    auto h = TailDescriptor::harmonic_of(q("-2"));
    CHECK(h.term(4) == q("-1/2"));

    TailDescriptor m;
    m.constant = 1;
    m.geometric = {{q("-4"), q("1/2")}};
    m.exceptions[2] = q("100");
    CHECK(m.term(1) == q("-1"));  // 1 - 4/2
    CHECK(m.term(2) == q("100")); // exception wins
    CHECK(m.term(3) == q("1/2")); // 1 - 4/8

    CHECK(TailDescriptor::constant_of(q("5")).term(7) == q("5"));
    CHECK(TailDescriptor::constant_of(q("5")).is_constant());
}

TEST_CASE("validation") {
    CHECK_NOTHROW(validate_tail(TailDescriptor::geometric_of(1, q("-1/3"))));
    CHECK_THROWS(validate_tail(TailDescriptor::geometric_of(1, q("1"))));
    CHECK_THROWS(validate_tail(TailDescriptor::geometric_of(1, q("0"))));
    CHECK_THROWS(validate_tail(TailDescriptor::geometric_of(1, q("-3/2"))));

    TailDescriptor bad_exc;
    bad_exc.exceptions[0] = q("1"); // indices are 1-based
    CHECK_THROWS(validate_tail(bad_exc));

    TailDescriptor mix; // harmonic + geometric leaves the closure
    mix.harmonic = 1;
    mix.geometric = {{1, q("1/2")}};
    CHECK_THROWS_AS(validate_tail(mix), UnsupportedTailCombination);

    TailDescriptor hc; // harmonic + constant stays inside
    hc.harmonic = 1;
    hc.constant = q("-3");
    CHECK_NOTHROW(validate_tail(hc));
}

TEST_CASE("normalization and arithmetic") {
    TailDescriptor t;
    t.geometric = {{1, q("1/2")}, {q("-1"), q("1/2")}};
    CHECK(t.normalized().geometric.empty());

    TailDescriptor u;
    u.geometric = {{q("1/3"), q("1/2")}, {q("1/6"), q("1/2")}, {q("2"), q("1/4")}};
    auto un = u.normalized();
    CHECK(un.geometric.size() == 2);
    for (std::uint64_t n = 1; n <= 6; ++n)
        CHECK(un.term(n) == u.term(n));

    // redundant exception dropped
    TailDescriptor e = TailDescriptor::geometric_of(1, q("1/2"));
    e.exceptions[2] = q("1/4");
    CHECK(e.normalized().exceptions.empty());

    auto a = TailDescriptor::geometric_of(1, q("1/2"));
    auto b = TailDescriptor::constant_of(q("3"));
    auto s = tail_add(a, b);
    for (std::uint64_t n = 1; n <= 5; ++n)
        CHECK(s.term(n) == a.term(n) + b.term(n));

    auto d = tail_sub(a, TailDescriptor::geometric_of(q("1/2"), q("1/2")));
    for (std::uint64_t n = 1; n <= 5; ++n)
        CHECK(d.term(n) == a.term(n) / 2);

    auto sc = tail_scale(q("-2/3"), a);
    CHECK(sc.term(2) == q("-1/6"));

    auto sh = tail_shift(a, q("5"));
    a.exceptions[3] = q("7");
    auto sh2 = tail_shift(a, q("5"));
    CHECK(sh.term(1) == q("11/2"));
    CHECK(sh2.term(3) == q("12")); // exception shifted too

    CHECK_THROWS_AS(tail_add(TailDescriptor::harmonic_of(1), TailDescriptor::geometric_of(1, q("1/2"))),
                    UnsupportedTailCombination);

    // exceptions on one side are rewritten against the other side's values
    TailDescriptor exc = TailDescriptor::constant_of(0);
    exc.exceptions[1] = q("1");
    auto diff = tail_sub(exc, TailDescriptor::geometric_of(1, q("1/2")));
    CHECK(diff.term(1) == q("1/2"));
    CHECK(diff.term(2) == q("-1/4"));
}

TEST_CASE("analyze_tail: constant-dominated") {
    auto s = analyze_tail(TailDescriptor::constant_of(q("5")));
    CHECK(s.pos_sum == SumClass::plus_infinity());
    CHECK(s.pos_count == Cardinal::omega());
    CHECK(s.pos_bounded_away);
    CHECK(s.neg_count == Cardinal::finite(0));
    CHECK(s.neg_sum == SumClass::finite(0));

    // 1 - 4*(1/2)^n: negative only at n=1, zero at n=2, positive beyond
    TailDescriptor m;
    m.constant = 1;
    m.geometric = {{q("-4"), q("1/2")}};
    auto sm = analyze_tail(m);
    CHECK(sm.pos_sum == SumClass::plus_infinity());
    CHECK(sm.pos_bounded_away);
    CHECK(sm.pos_count == Cardinal::omega());
    CHECK(sm.neg_count == Cardinal::finite(1));
    CHECK(sm.neg_sum == SumClass::finite(1));
    CHECK_FALSE(sm.neg_bounded_away);

    // harmonic plus constant: 1 - 2/n, negative only at n=1
    TailDescriptor hc;
    hc.constant = 1;
    hc.harmonic = q("-2");
    auto sh = analyze_tail(hc);
    CHECK(sh.pos_sum == SumClass::plus_infinity());
    CHECK(sh.pos_bounded_away);
    CHECK(sh.neg_count == Cardinal::finite(1));
    CHECK(sh.neg_sum == SumClass::finite(1));
}

TEST_CASE("analyze_tail: harmonic") {
    auto s = analyze_tail(TailDescriptor::harmonic_of(1));
    CHECK(s.pos_sum == SumClass::plus_infinity()); // harmonic series diverges
    CHECK(s.pos_count == Cardinal::omega());
    CHECK_FALSE(s.pos_bounded_away);
    CHECK(s.neg_count == Cardinal::finite(0));

    auto sn = analyze_tail(TailDescriptor::harmonic_of(q("-1/3")));
    CHECK(sn.neg_sum == SumClass::plus_infinity());
    CHECK(sn.neg_count == Cardinal::omega());
    CHECK_FALSE(sn.neg_bounded_away);

    TailDescriptor he = TailDescriptor::harmonic_of(1);
    he.exceptions[2] = q("-7");
    auto se = analyze_tail(he);
    CHECK(se.neg_count == Cardinal::finite(1));
    CHECK(se.neg_sum == SumClass::finite(7));
    CHECK(se.pos_sum == SumClass::plus_infinity());
}

TEST_CASE("analyze_tail: pure geometric") {
    auto s = analyze_tail(TailDescriptor::geometric_of(1, q("1/2")));
    CHECK(s.pos_sum == SumClass::finite(1));
    CHECK(s.pos_count == Cardinal::omega());
    CHECK_FALSE(s.pos_bounded_away);
    CHECK(s.neg_count == Cardinal::finite(0));

    // alternating: (-1/2)^n — evens positive (sum 1/3), odds negative (sum 2/3)
    auto sa = analyze_tail(TailDescriptor::geometric_of(1, q("-1/2")));
    CHECK(sa.pos_sum == SumClass::finite(q("1/3")));
    CHECK(sa.neg_sum == SumClass::finite(q("2/3")));
    CHECK(sa.pos_count == Cardinal::omega());
    CHECK(sa.neg_count == Cardinal::omega());

    // (3/4)^n - 2*(1/2)^n: negative exactly at n=1 (value -1/4), total sum 1
    TailDescriptor two;
    two.geometric = {{1, q("3/4")}, {q("-2"), q("1/2")}};
    auto st = analyze_tail(two);
    CHECK(st.neg_count == Cardinal::finite(1));
    CHECK(st.neg_sum == SumClass::finite(q("1/4")));
    CHECK(st.pos_sum == SumClass::finite(q("5/4")));
    CHECK(st.pos_count == Cardinal::omega());
    CHECK_FALSE(st.pos_bounded_away);

    // identically zero tail
    TailDescriptor z;
    z.geometric = {{1, q("1/2")}, {q("-1"), q("1/2")}};
    auto sz = analyze_tail(z);
    CHECK(sz.pos_count == Cardinal::finite(0));
    CHECK(sz.neg_count == Cardinal::finite(0));
    CHECK(sz.pos_sum == SumClass::finite(0));
}

TEST_CASE("analyze_tail agrees with explicit partial sums") {
    // several hand-picked tails: explicit sums over 1..200 must stay below the
    // classified totals and converge toward them
    std::vector<TailDescriptor> tails;
    tails.push_back(TailDescriptor::geometric_of(q("5/3"), q("2/3")));
    tails.push_back(TailDescriptor::geometric_of(q("-7/2"), q("-3/5")));
    {
        TailDescriptor t;
        t.geometric = {{q("2"), q("5/6")}, {q("-3"), q("1/3")}, {q("1/2"), q("-1/2")}};
        t.exceptions[4] = q("-9");
        tails.push_back(t);
    }
    for (const auto& t : tails) {
        auto s = analyze_tail(t);
        REQUIRE(s.pos_sum.is_finite());
        REQUIRE(s.neg_sum.is_finite());
        Rational pos = 0, neg = 0;
        std::uint64_t pc = 0, nc = 0;
        for (std::uint64_t n = 1; n <= 200; ++n) {
            Rational v = t.term(n);
            if (v > 0) {
                pos += v;
                ++pc;
            } else if (v < 0) {
                neg += -v;
                ++nc;
            }
        }
        CHECK(pos <= s.pos_sum.value());
        CHECK(neg <= s.neg_sum.value());
        // partial sums within the remaining geometric mass of the totals
        Rational slack = 0;
        for (const auto& g : t.geometric) {
            Rational ar = rational_abs(g.r);
            Rational p = rational_abs(g.a);
            for (int i = 0; i < 200; ++i)
                p *= ar;
            slack += p * ar / (1 - ar);
        }
        CHECK(s.pos_sum.value() - pos <= slack);
        CHECK(s.neg_sum.value() - neg <= slack);
        CHECK((s.pos_count.is_omega() ? pc > 50 : pc == s.pos_count.value()));
        CHECK((s.neg_count.is_omega() ? nc > 50 : nc == s.neg_count.value()));
    }
}

TEST_CASE("tail_count_above / below") {
    auto g = TailDescriptor::geometric_of(1, q("1/2"));
    CHECK(tail_count_above(g, q("1/8")) == Cardinal::finite(2)); // 1/2, 1/4
    CHECK(tail_count_above(g, q("1/16")) == Cardinal::finite(3));
    CHECK(tail_count_below(g, q("-1/8")) == Cardinal::finite(0));

    auto c = TailDescriptor::constant_of(q("2"));
    CHECK(tail_count_above(c, q("1")) == Cardinal::omega());
    CHECK(tail_count_above(c, q("3")) == Cardinal::finite(0));

    auto h = TailDescriptor::harmonic_of(q("-1"));
    CHECK(tail_count_below(h, q("-1/4")) == Cardinal::finite(3)); // -1, -1/2, -1/3
}

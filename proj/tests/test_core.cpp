#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhl/core.hpp"
#include "mhl/domains.hpp"

using namespace mhl;

TEST_CASE("apply_operator counts every attempt, including failures") {
    DomainSpec d = npuzzle_domain(3);
    State goal = npuzzle_canonical_goal(3); // blank bottom-right
    SearchStats stats;
    CHECK(!apply_operator(d, 1 /*d*/, goal, stats));   // blank in last row
    CHECK(apply_operator(d, 0 /*u*/, goal, stats));
    CHECK(stats.operator_applications == 2);
}

TEST_CASE("apply_macro composes left to right and stops at undefined steps") {
    DomainSpec d = npuzzle_domain(3);
    State goal = npuzzle_canonical_goal(3);
    SearchStats stats;
    Macro m = macro_from_names(d, "uld");
    auto t = apply_macro(d, m, goal, stats);
    REQUIRE(t);
    CHECK(stats.operator_applications == 3);

    Macro bad = macro_from_names(d, "dd"); // first step already undefined
    stats = {};
    CHECK(!apply_macro(d, bad, goal, stats));
    CHECK(stats.operator_applications == 1); // the failing step is counted
}

TEST_CASE("macro_from_names parses separated and unseparated forms") {
    DomainSpec d = npuzzle_domain(4);
    Macro a = macro_from_names(d, "dllur");
    Macro b = macro_from_names(d, "d l l u r");
    CHECK(a.ops == b.ops);
    CHECK(a.ops.size() == 5);
    CHECK(macro_to_names(d, a) == "dllur");
    CHECK_THROWS_AS(macro_from_names(d, "dlx"), UnknownOperatorName);
    CHECK_THROWS_AS(macro_from_names(d, "d l x"), UnknownOperatorName);

    DomainSpec c = cannibals_domain(3); // multi-char names need separators
    Macro mc = macro_from_names(c, "2c> 1c<");
    CHECK(mc.ops.size() == 2);
    CHECK(macro_to_names(c, mc) == "2c> 1c<");
}

TEST_CASE("reverse_macro undoes the forward macro") {
    DomainSpec d = npuzzle_domain(3);
    State s = npuzzle_canonical_goal(3);
    SearchStats stats;
    Macro m = macro_from_names(d, "ulldr");
    auto mid = apply_macro(d, m, s, stats);
    REQUIRE(mid);
    auto r = reverse_macro(d, m);
    REQUIRE(r);
    auto back = apply_macro(d, *r, *mid, stats);
    REQUIRE(back);
    CHECK(*back == s);
}

TEST_CASE("MacroSet is duplicate-free and keeps acquisition order") {
    DomainSpec d = npuzzle_domain(3);
    MacroSet ms;
    CHECK(ms.add(macro_from_names(d, "uld")));
    CHECK(ms.add(macro_from_names(d, "lur")));
    CHECK(!ms.add(macro_from_names(d, "uld")));
    CHECK(ms.size() == 2);
    CHECK(ms.total_length() == 6);
    CHECK(macro_to_names(d, ms.macros()[0]) == "uld");
    CHECK(macro_to_names(d, ms.macros()[1]) == "lur");
    CHECK(ms.contains(macro_from_names(d, "lur").ops));
}

TEST_CASE("StateHash distinguishes permutations in practice") {
    StateHash h;
    CHECK(h(State{1, 2, 3}) != h(State{3, 2, 1}));
    CHECK(h(State{1, 2, 3}) == h(State{1, 2, 3}));
}

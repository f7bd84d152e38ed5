#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "finpart/circles.hpp"
#include "finpart/counting.hpp"
#include "finpart/verification.hpp"

using finpart::BudgetExceeded;
using finpart::Count;
using finpart::CountingEngine;
using finpart::Multiset;
namespace vf = finpart::verification;

TEST_CASE("oracles reproduce the worked values") {
    const Multiset a = Multiset::parse("1,2,2,3");
    CHECK(vf::d_bruteforce(17, a) == 18);
    CHECK(vf::d0_bruteforce(17, a) == 72);
    CHECK(vf::delta_bruteforce(18, a) == 3);
    CHECK(vf::delta0_bruteforce(10, a) == 3);  // 10 + sigma = 18
    CHECK(vf::d_bruteforce(8, a) == 1);
    CHECK(vf::delta_bruteforce(16, a) == 0);
    CHECK(vf::d_bruteforce(0, Multiset{}) == 1);
    CHECK(vf::d_bruteforce(3, Multiset{}) == 0);
}

TEST_CASE("oracles refuse work past their budget") {
    CHECK_THROWS_AS(vf::d_bruteforce(41, Multiset::parse("1")), BudgetExceeded);
    CHECK_THROWS_AS(vf::d_bruteforce(5, Multiset::parse("9")), BudgetExceeded);
    CHECK_THROWS_AS(vf::delta0_bruteforce(5, Multiset::parse("4,5")), BudgetExceeded);
    vf::OracleBudget wide{20, 100, 10};
    CHECK_NOTHROW(vf::d_bruteforce(60, Multiset::parse("9,9"), wide));
}

TEST_CASE("oracles agree with the recursions on a small grid") {
    CountingEngine e;
    for (const auto& a : vf::enumerate_multisets_sigma_le(5)) {
        for (std::int64_t n = 0; n <= 15; ++n) {
            CHECK(vf::d_bruteforce(n, a) == e.d(n, a));
            CHECK(vf::delta_bruteforce(n, a) == e.delta(n, a));
            CHECK(vf::d0_bruteforce(n, a) == e.d0(n, a));
            CHECK(vf::delta0_bruteforce(n, a) == e.delta0(n, a));
        }
    }
}

TEST_CASE("rooted-tree recurrence reproduces the known counts") {
    auto t = vf::rooted_trees_euler(10);
    const std::int64_t expect[] = {1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842};
    REQUIRE(t.size() == 11);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i] == expect[i]);
    CHECK(vf::rooted_trees_euler(0) == std::vector<Count>{1});
    CHECK(vf::rooted_trees_euler(30).back() == Count("997171512998"));
    CHECK_THROWS_AS(vf::rooted_trees_euler(-1), std::invalid_argument);
}

TEST_CASE("canonical forest enumeration for small n is exact") {
    CHECK(vf::enumerate_canonical_forests(0) == std::vector<std::string>{""});
    CHECK(vf::enumerate_canonical_forests(1) == std::vector<std::string>{"()"});
    CHECK(vf::enumerate_canonical_forests(2) == std::vector<std::string>{"(())", "()()"});
    CHECK(vf::enumerate_canonical_forests(3) ==
          std::vector<std::string>{"((()))", "(()())", "(())()", "()()()"});
    CHECK(vf::enumerate_canonical_forests(4) ==
          std::vector<std::string>{"(((())))", "((()()))", "((())())", "((()))()", "(()()())",
                                   "(()())()", "(())(())", "(())()()", "()()()()"});
}

TEST_CASE("canonical forest enumeration matches the circle counts") {
    finpart::circles::CircleCounter cc;
    for (std::int64_t n = 0; n <= 10; ++n) {
        auto forests = vf::enumerate_canonical_forests(n);
        CHECK(Count(std::ssize(forests)) == cc.count(n));
        CHECK(std::is_sorted(forests.begin(), forests.end()));
        CHECK(std::adjacent_find(forests.begin(), forests.end()) == forests.end());
        // each string is a fixed point of the parser's canonicalization
        for (const auto& s : forests) {
            CHECK(finpart::circles::canonical_form(finpart::circles::parse_forest(s)) == s);
        }
    }
}

TEST_CASE("canonical enumeration equals the canonicalized ordered shapes") {
    for (std::int64_t n = 0; n <= 8; ++n) {
        std::set<std::string> canon;
        for (const auto& s : vf::enumerate_ordered_forests(n)) {
            canon.insert(finpart::circles::canonical_form(finpart::circles::parse_forest(s)));
        }
        auto direct = vf::enumerate_canonical_forests(n);
        CHECK(std::set<std::string>(direct.begin(), direct.end()) == canon);
    }
}

TEST_CASE("ordered forest enumeration is Catalan") {
    const std::int64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (std::int64_t n = 0; n <= 7; ++n) {
        auto shapes = vf::enumerate_ordered_forests(n);
        CHECK(std::ssize(shapes) == catalan[n]);
        std::set<std::string> unique(shapes.begin(), shapes.end());
        CHECK(std::ssize(unique) == catalan[n]);
    }
}

TEST_CASE("forest enumerations refuse work past their budget") {
    CHECK_THROWS_AS(vf::enumerate_canonical_forests(11), BudgetExceeded);
    CHECK_THROWS_AS(vf::enumerate_canonical_forests(-1), BudgetExceeded);
    CHECK_THROWS_AS(vf::enumerate_ordered_forests(11), BudgetExceeded);
    vf::OracleBudget wide{8, 40, 12};
    CHECK(std::ssize(vf::enumerate_canonical_forests(12, wide)) == 12486);
}

TEST_CASE("isomorphism oracle spot checks") {
    using finpart::circles::parse_forest;
    CHECK(vf::forests_isomorphic(parse_forest("(())()"), parse_forest("()(())")));
    CHECK(vf::forests_isomorphic(parse_forest(""), parse_forest("~")));
    CHECK(vf::forests_isomorphic(parse_forest("((())())"), parse_forest("(()(()))")));
    CHECK_FALSE(vf::forests_isomorphic(parse_forest("(())"), parse_forest("()()")));
    CHECK_FALSE(vf::forests_isomorphic(parse_forest("((()))"), parse_forest("(()())")));
    CHECK_FALSE(vf::forests_isomorphic(parse_forest("()"), parse_forest("()()")));
}

TEST_CASE("multiset enumeration covers sigma <= bound exactly once") {
    auto small = vf::enumerate_multisets_sigma_le(4);
    std::vector<std::string> names;
    for (const auto& a : small) names.push_back(a.to_string());
    CHECK(names == std::vector<std::string>{"", "1", "1,1", "1,1,1", "1,1,1,1", "1,1,2", "1,2",
                                            "1,3", "2", "2,2", "3", "4"});

    // sum of p(0..8) = 67, sum of p(0..6) = 30
    CHECK(vf::enumerate_multisets_sigma_le(8).size() == 67);
    CHECK(vf::enumerate_multisets_sigma_le(6).size() == 30);

    auto all = vf::enumerate_multisets_sigma_le(8);
    std::set<std::string> seen;
    for (const auto& a : all) {
        CHECK(a.sigma() <= 8);
        CHECK(seen.insert(a.to_string()).second);
    }
}

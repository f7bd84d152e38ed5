#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "finpart/counting.hpp"
#include "finpart/multiset.hpp"

using finpart::Multiset;

namespace {

// All multisets with sigma <= s, by recursive ascending-value generation.
void collect_multisets(std::int64_t lo, std::int64_t rem, std::vector<std::int64_t>& cur,
                       std::vector<Multiset>& out) {
    out.push_back(Multiset::canonicalize(cur));
    for (std::int64_t v = lo; v <= rem; ++v) {
        cur.push_back(v);
        collect_multisets(v, rem - v, cur, out);
        cur.pop_back();
    }
}

std::vector<Multiset> multisets_sigma_le(std::int64_t s) {
    std::vector<Multiset> out;
    std::vector<std::int64_t> cur;
    collect_multisets(1, s, cur, out);
    return out;
}

}  // namespace

TEST_CASE("canonicalize sorts and groups") {
    Multiset a = Multiset::canonicalize({2, 1, 3, 2});
    std::vector<Multiset::Entry> want{{1, 1}, {2, 2}, {3, 1}};
    CHECK(a.entries() == want);
    CHECK(a == Multiset::canonicalize({1, 2, 2, 3}));
    CHECK(a.size_k() == 4);
    CHECK(a.sigma() == 8);

    CHECK(Multiset::canonicalize({}).empty());
    CHECK(Multiset::canonicalize({}).sigma() == 0);
    CHECK_THROWS_AS(Multiset::canonicalize({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Multiset::canonicalize({-2}), std::invalid_argument);
}

TEST_CASE("textual round trip") {
    CHECK(Multiset::parse("1,2,2,3").to_string() == "1,2,2,3");
    CHECK(Multiset::parse("3,1,2,2").to_string() == "1,2,2,3");
    CHECK(Multiset::parse("").to_string() == "");
    CHECK(Multiset::parse("7").expand() == std::vector<std::int64_t>{7});
    CHECK_THROWS_AS(Multiset::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Multiset::parse("1,2,"), std::invalid_argument);
    CHECK_THROWS_AS(Multiset::parse("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(Multiset::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(Multiset::parse("-3"), std::invalid_argument);
}

TEST_CASE("remove_copies") {
    Multiset a = Multiset::parse("1,2,2,3");
    CHECK(a.remove_copies(2, 1) == Multiset::parse("1,2,3"));
    CHECK(a.remove_copies(2, 2) == Multiset::parse("1,3"));
    CHECK(a.remove_copies(2, 0) == a);
    CHECK(Multiset::parse("5").remove_copies(5, 0) == Multiset::parse("5"));
    CHECK(Multiset::parse("5").remove_copies(5, 1).empty());

    CHECK_THROWS_AS(a.remove_copies(2, 3), std::out_of_range);
    CHECK_THROWS_AS(a.remove_copies(4, 1), std::out_of_range);
    CHECK_FALSE(a.remove_copies(2, 2).contains(2));
}

TEST_CASE("min_distinct_sum") {
    // 4*1 + 3*2 + 2*2 + 1*3 = 17
    CHECK(Multiset::parse("1,2,2,3").min_distinct_sum() == 17);
    // 2*1 + 1*1 = 3
    CHECK(Multiset::parse("1,1").min_distinct_sum() == 3);
    CHECK(Multiset{}.min_distinct_sum() == 0);
    CHECK(Multiset::parse("7").min_distinct_sum() == 7);
}

TEST_CASE("canonicalize(expand(A)) is the identity") {
    for (const auto& a : multisets_sigma_le(12)) {
        CHECK(Multiset::canonicalize(a.expand()) == a);
    }
}

TEST_CASE("min_distinct_sum >= sigma, equality iff k <= 1") {
    for (const auto& a : multisets_sigma_le(12)) {
        CHECK(a.min_distinct_sum() >= a.sigma());
        CHECK((a.min_distinct_sum() == a.sigma()) == (a.size_k() <= 1));
    }
}

TEST_CASE("min_distinct_sum is the exact distinct-solvability threshold") {
    // delta vanishes strictly below the bound and is positive at it
    // (witness x_i = k+1-i), for every multiset with sigma <= 12.
    finpart::CountingEngine engine;
    for (const auto& a : multisets_sigma_le(12)) {
        if (a.empty()) continue;
        std::int64_t mds = a.min_distinct_sum();
        for (std::int64_t n = 0; n < mds; ++n) CHECK(engine.delta(n, a) == 0);
        CHECK(engine.delta(mds, a) >= 1);
    }
}

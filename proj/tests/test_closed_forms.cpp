#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finpart/closed_forms.hpp"
#include "finpart/counting.hpp"

using finpart::Count;
using finpart::CountingEngine;
using finpart::Multiset;
namespace cf = finpart::closed_forms;
using cf::FormulaId;

TEST_CASE("formula ids round-trip through their names") {
    for (FormulaId f : {FormulaId::D_12, FormulaId::D_122, FormulaId::D_112, FormulaId::D_123,
                        FormulaId::D_pair_equal, FormulaId::D_pair_distinct, FormulaId::DELTA_11,
                        FormulaId::DELTA_12}) {
        auto back = cf::formula_from_string(cf::to_string(f));
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    CHECK_FALSE(cf::formula_from_string("D_999").has_value());
    CHECK_FALSE(cf::formula_from_string("").has_value());
}

TEST_CASE("closed-form spot values") {
    CHECK(cf::d_closed(17, FormulaId::D_12) == 8);
    CHECK(cf::d_closed(1, FormulaId::D_12) == 0);
    CHECK(cf::d_closed(14, FormulaId::D_122) == 9);
    CHECK(cf::d_closed(4, FormulaId::D_112) == 1);
    CHECK(cf::d_closed(8, FormulaId::D_112) == 6);
    CHECK(cf::d_closed(10, FormulaId::D_123) == 4);
    CHECK(cf::d_closed(1, FormulaId::D_123) == 0);
    CHECK(cf::d_pair_closed(10, 2, 2) == 2);
    CHECK(cf::d_pair_closed(7, 1, 2) == 3);
    CHECK(cf::delta_closed(9, FormulaId::DELTA_12) == 3);
    CHECK(cf::delta_closed(2, FormulaId::DELTA_11) == 0);
}

TEST_CASE("evaluators reject foreign formula tags") {
    CHECK_THROWS_AS(cf::d_closed(5, FormulaId::DELTA_11), std::invalid_argument);
    CHECK_THROWS_AS(cf::d_closed(5, FormulaId::D_pair_equal), std::invalid_argument);
    CHECK_THROWS_AS(cf::delta_closed(5, FormulaId::D_12), std::invalid_argument);
    CHECK_THROWS_AS(cf::d_pair_closed(5, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(cf::d_pair_closed(5, 2, -1), std::invalid_argument);
}

TEST_CASE("pair evaluation ignores argument order") {
    for (std::int64_t n = 1; n <= 40; ++n) {
        CHECK(cf::d_pair_closed(n, 1, 2) == cf::d_pair_closed(n, 2, 1));
        CHECK(cf::d_pair_closed(n, 3, 5) == cf::d_pair_closed(n, 5, 3));
    }
}

TEST_CASE("single-multiset D formulas hold on 1..500") {
    CountingEngine e;
    for (FormulaId f :
         {FormulaId::D_12, FormulaId::D_122, FormulaId::D_112, FormulaId::D_123}) {
        auto report = cf::validate_formula(f, 500, e);
        CHECK(report.lo == 1);
        CHECK(report.hi == 500);
        CHECK(report.mismatches.empty());
    }
}

TEST_CASE("DELTA_11 holds on 1..500") {
    CountingEngine e;
    CHECK(cf::validate_formula(FormulaId::DELTA_11, 500, e).mismatches.empty());
}

TEST_CASE("DELTA_12 fails exactly on n = 5 mod 6, short by one") {
    CountingEngine e;
    auto report = cf::validate_formula(FormulaId::DELTA_12, 500, e);
    CHECK(report.mismatches.size() == 83);
    REQUIRE(!report.mismatches.empty());
    const auto& first = report.mismatches.front();
    CHECK(first.n == 5);
    CHECK(first.multiset == Multiset::parse("1,2"));
    CHECK(first.closed == 1);
    CHECK(first.recursion == 2);
    for (const auto& m : report.mismatches) {
        CHECK(m.n % 6 == 5);
        CHECK(m.closed == m.recursion - 1);
    }
    // the complement of the failure set is exactly where it holds
    for (std::int64_t n = 1; n <= 500; ++n) {
        bool listed = false;
        for (const auto& m : report.mismatches) listed = listed || m.n == n;
        CHECK(listed == (n % 6 == 5));
    }
}

TEST_CASE("equal-pair formula holds only when the coefficient divides n") {
    CountingEngine e;
    auto report = cf::validate_formula(FormulaId::D_pair_equal, 500, e);
    CHECK(report.mismatches.size() == 1746);
    REQUIRE(!report.mismatches.empty());
    const auto& first = report.mismatches.front();
    CHECK(first.n == 5);
    CHECK(first.multiset == Multiset::parse("2,2"));
    CHECK(first.closed == 1);
    CHECK(first.recursion == 0);
    for (const auto& m : report.mismatches) {
        std::int64_t a = m.multiset.expand().front();
        CHECK(m.n % a != 0);       // divisible cases never mismatch
        CHECK(m.recursion == 0);   // truth is 0 whenever a does not divide n
        CHECK(m.closed >= 1);
    }
}

TEST_CASE("distinct-pair formula is exact exactly on the a1 = 1 family") {
    CountingEngine e;
    auto report = cf::validate_formula(FormulaId::D_pair_distinct, 500, e);
    CHECK(report.mismatches.size() == 2706);
    cf::Mismatch witness{5, Multiset::parse("2,3"), 0, 1};
    bool found = false;
    for (const auto& m : report.mismatches) {
        CHECK(m.multiset.expand().front() > 1);
        found = found || m == witness;
    }
    CHECK(found);
    CHECK(report.mismatches.front() == witness);
}

TEST_CASE("the expanded {1,2,3} display disagrees on a third of its range") {
    CountingEngine e;
    CHECK(cf::d_123_printed(1) == -1);
    CHECK(cf::d_123_printed(3) == -1);
    CHECK(cf::d_123_printed(6) == 0);
    auto mism = cf::d123_printed_mismatches(500, e);
    CHECK(mism.size() == 250);
    for (const auto& m : mism) {
        CHECK(m.closed == m.recursion - 1);  // always short by exactly one
        CHECK((m.n % 3 == 0 || m.n % 6 == 1));
    }
    // and agreement everywhere else
    Multiset a = Multiset::parse("1,2,3");
    for (std::int64_t n = 1; n <= 500; ++n) {
        if (n % 3 == 0 || n % 6 == 1) continue;
        CHECK(Count(cf::d_123_printed(n)) == e.d(n, a));
    }
}

TEST_CASE("the tidy {1,2,3} form matches the printed one off the failure set") {
    for (std::int64_t n = 1; n <= 500; ++n) {
        if (n % 3 == 0 || n % 6 == 1) continue;
        CHECK(cf::d_closed(n, FormulaId::D_123) == Count(cf::d_123_printed(n)));
    }
}

TEST_CASE("triangular identity holds through n = 12") {
    CountingEngine e;
    const std::int64_t expect[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (std::int64_t n = 1; n <= 12; ++n) {
        auto c = cf::check_triangular_identity(n, e);
        CHECK(c.equal);
        CHECK(c.lhs == expect[n - 1]);
        CHECK(c.rhs == expect[n - 1]);
    }
}

TEST_CASE("validate_formula rejects empty ranges") {
    CountingEngine e;
    CHECK_THROWS_AS(cf::validate_formula(FormulaId::D_12, 0, e), std::invalid_argument);
    CHECK_THROWS_AS(cf::validate_formula(FormulaId::D_12, -3, e), std::invalid_argument);
}

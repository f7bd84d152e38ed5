#include "finpart/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>

#include "finpart/circles.hpp"
#include "finpart/closed_forms.hpp"
#include "finpart/counting.hpp"

namespace finpart::selfcheck {

namespace {

using closed_forms::FormulaId;
using closed_forms::ValidityReport;

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::string mismatch_str(const closed_forms::Mismatch& m) {
    return "n=" + std::to_string(m.n) + " A={" + m.multiset.to_string() +
           "} closed=" + m.closed.str() + " recursion=" + m.recursion.str();
}

// 1. The worked example values, exact.
Outcome check_worked_examples() {
    Outcome r;
    std::ostringstream bad;
    CountingEngine e;
    const Multiset a = Multiset::parse("1,2,2,3");

    if (e.pi(7, 3) != 4) bad << "pi(7,3) != 4; ";
    if (e.d(17, a) != 18) bad << "d(17,{1,2,2,3}) != 18; ";
    if (e.d0(17, a) != 72) bad << "d0(17,{1,2,2,3}) != 72; ";
    if (e.delta(18, a) != 3) bad << "delta(18,{1,2,2,3}) != 3; ";

    auto sols = e.enumerate_solutions(18, a, SolutionMode::distinct);
    std::set<std::vector<std::int64_t>> got;
    for (const auto& s : sols) got.insert(s.values);
    std::set<std::vector<std::int64_t>> want{{3, 2, 4, 1}, {5, 2, 3, 1}, {4, 1, 3, 2}};
    if (got != want) bad << "delta(18) solution tuples differ; ";

    circles::CircleCounter cc;
    std::vector<Count> expect{1, 1, 2, 4, 9, 20, 48};
    if (cc.table(6) != expect) bad << "C_0..C_6 != 1,1,2,4,9,20,48; ";

    auto terms = cc.terms(6);
    Count sum = 0;
    std::multiset<std::string> values;
    for (const auto& t : terms) {
        sum += t.value;
        values.insert(t.value.str());
    }
    std::multiset<std::string> want_values{"20", "3", "1", "1", "9", "4", "4", "2", "1", "1", "2"};
    if (sum != 48) bad << "terms(6) do not sum to 48; ";
    if (values != want_values) bad << "terms(6) value multiset differs; ";

    r.ok = bad.str().empty();
    r.detail = r.ok ? "pi(7,3), d/d0(17), delta(18) with its 3 tuples, C_0..C_6, 11 terms of C_6"
                    : bad.str();
    return r;
}

// 2. The three coefficient-multiset families for n=6, exact.
Outcome check_coefficient_multisets() {
    Outcome r;
    CountingEngine e;
    auto names = [&](std::int64_t k) {
        std::vector<std::string> out;
        for (const auto& m : e.enumerate_coefficient_multisets(6, k)) out.push_back(m.to_string());
        return out;
    };
    bool ok1 = names(1) == std::vector<std::string>{"1", "2", "3", "6"};
    bool ok2 = names(2) == std::vector<std::string>{"1,1", "1,2", "1,3", "1,4", "2,2"};
    bool ok3 = names(3) == std::vector<std::string>{"1,1,1"};
    r.ok = ok1 && ok2 && ok3;
    r.detail = r.ok ? "size 1: {1},{2},{3},{6}; size 2: {1,1},{1,2},{1,3},{1,4},{2,2}; size 3: {1,1,1}"
                    : std::string("family mismatch for k=") + (!ok1 ? "1" : !ok2 ? "2" : "3");
    return r;
}

// 3. Recursions vs exhaustive oracles across the budgeted grid.
Outcome check_oracle_sweep(const verification::OracleBudget& budget) {
    Outcome r;
    CountingEngine e;
    auto multisets = verification::enumerate_multisets_sigma_le(budget.max_sigma);
    std::int64_t cells = 0;
    for (const auto& a : multisets) {
        for (std::int64_t n = 0; n <= budget.max_n; ++n) {
            if (e.d(n, a) != verification::d_bruteforce(n, a, budget)) {
                r.ok = false;
                r.detail = "d mismatch at n=" + std::to_string(n) + " A={" + a.to_string() + "}";
                return r;
            }
            if (e.delta(n, a) != verification::delta_bruteforce(n, a, budget)) {
                r.ok = false;
                r.detail =
                    "delta mismatch at n=" + std::to_string(n) + " A={" + a.to_string() + "}";
                return r;
            }
            ++cells;
        }
    }
    r.detail = "d and delta agree with the exhaustive oracles on " +
               std::to_string(multisets.size()) + " multisets (sigma <= " +
               std::to_string(budget.max_sigma) + "), n <= " + std::to_string(budget.max_n) +
               ", " + std::to_string(cells) + " cells each";
    return r;
}

std::string describe_sweep(const ValidityReport& report) {
    if (report.mismatches.empty()) return "OK";
    return std::to_string(report.mismatches.size()) + " mismatches, first " +
           mismatch_str(report.mismatches.front());
}

// 4. Closed-form validity sweeps on 1..500.
Outcome check_closed_forms() {
    Outcome r;
    CountingEngine e;
    std::ostringstream detail;
    bool ok = true;

    for (FormulaId f : {FormulaId::D_12, FormulaId::D_122, FormulaId::D_112, FormulaId::D_123,
                        FormulaId::DELTA_11, FormulaId::DELTA_12}) {
        auto report = closed_forms::validate_formula(f, 500, e);
        ok = ok && report.mismatches.empty();
        detail << closed_forms::to_string(f) << ": " << describe_sweep(report) << "; ";
    }

    auto equal_report = closed_forms::validate_formula(FormulaId::D_pair_equal, 500, e);
    ok = ok && equal_report.mismatches.empty();
    detail << "equal-pair family: " << describe_sweep(equal_report) << "; ";

    auto distinct_report = closed_forms::validate_formula(FormulaId::D_pair_distinct, 500, e);
    bool a1_one_clean = true;
    for (const auto& m : distinct_report.mismatches) {
        if (m.multiset.expand().front() == 1) a1_one_clean = false;
    }
    ok = ok && a1_one_clean;
    detail << "a1=1 pair family: " << (a1_one_clean ? "OK" : "mismatch found") << "; ";

    closed_forms::Mismatch witness{5, Multiset::parse("2,3"), 0, 1};
    bool witness_present =
        std::find(distinct_report.mismatches.begin(), distinct_report.mismatches.end(),
                  witness) != distinct_report.mismatches.end();
    ok = ok && witness_present;
    detail << "distinct-pair witness (n=5 A={2,3} closed=0 recursion=1): "
           << (witness_present ? "present" : "MISSING");

    r.ok = ok;
    r.detail = detail.str();
    return r;
}

// 5. Triangular identity for n=1..12.
Outcome check_triangular() {
    Outcome r;
    CountingEngine e;
    std::string values;
    for (std::int64_t n = 1; n <= 12; ++n) {
        auto c = closed_forms::check_triangular_identity(n, e);
        if (!c.equal) {
            r.ok = false;
            r.detail = "fails at n=" + std::to_string(n) + ": lhs=" + c.lhs.str() +
                       " rhs=" + c.rhs.str();
            return r;
        }
        values += (n > 1 ? "," : "") + c.lhs.str();
    }
    r.detail = "d(n(n+3)/2,{1..n}) = pi(2n,n) for n=1..12: " + values;
    return r;
}

// 6. Shift identities vs the non-negative-mode oracles, sigma <= 6, n <= 25.
Outcome check_shift_identities() {
    Outcome r;
    CountingEngine e;
    verification::OracleBudget budget{6, 25, 10};
    std::int64_t cells = 0;
    for (const auto& a : verification::enumerate_multisets_sigma_le(6)) {
        for (std::int64_t n = 0; n <= 25; ++n) {
            if (e.d0(n, a) != verification::d0_bruteforce(n, a, budget)) {
                r.ok = false;
                r.detail = "d0 mismatch at n=" + std::to_string(n) + " A={" + a.to_string() + "}";
                return r;
            }
            if (e.delta0(n, a) != verification::delta0_bruteforce(n, a, budget)) {
                r.ok = false;
                r.detail =
                    "delta0 mismatch at n=" + std::to_string(n) + " A={" + a.to_string() + "}";
                return r;
            }
            ++cells;
        }
    }
    r.detail = "d0 and delta0 match the non-negative exhaustive oracles on " +
               std::to_string(cells) + " cells";
    return r;
}

// 7. Circle counts vs the recurrence oracle and vs canonical-forest counts.
Outcome check_circles(const CheckOptions& options) {
    Outcome r;
    circles::CircleCounter cc;
    auto euler = verification::rooted_trees_euler(options.max_circles);
    auto table = cc.table(options.max_circles);
    if (table != euler) {
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (table[i] != euler[i]) {
                r.ok = false;
                r.detail = "C_" + std::to_string(i) + " = " + table[i].str() +
                           " but the recurrence gives " + euler[i].str();
                return r;
            }
        }
    }
    if (options.max_circles >= 24 && table[24] <= 1000000000) {
        r.ok = false;
        r.detail = "C_24 unexpectedly small, arbitrary precision not exercised";
        return r;
    }
    verification::OracleBudget budget = options.sweep;
    for (std::int64_t n = 0; n <= budget.max_forest_nodes; ++n) {
        auto forests = verification::enumerate_canonical_forests(n, budget);
        if (Count(std::ssize(forests)) != cc.count(n)) {
            r.ok = false;
            r.detail = "C_" + std::to_string(n) + " != number of canonical forests (" +
                       std::to_string(forests.size()) + ")";
            return r;
        }
    }
    r.detail = "matches the recurrence on 0.." + std::to_string(options.max_circles) +
               " (C_" + std::to_string(options.max_circles) + " = " +
               table[static_cast<std::size_t>(options.max_circles)].str() +
               ") and the forest enumeration on 0.." + std::to_string(budget.max_forest_nodes);
    return r;
}

// 8. Partition cross-check for n=1..25.
Outcome check_partition_crosscheck() {
    Outcome r;
    CountingEngine e;
    for (std::int64_t n = 1; n <= 25; ++n) {
        Count via_multisets = 0;
        for (std::int64_t k = 1; k * (k + 1) / 2 <= n; ++k) {
            for (const auto& a : e.enumerate_coefficient_multisets(n, k)) {
                via_multisets += e.delta(n, a);
            }
        }
        Count via_pi = 0;
        for (std::int64_t k = 0; k <= n; ++k) via_pi += e.pi(n, k);
        if (via_multisets != via_pi) {
            r.ok = false;
            r.detail = "n=" + std::to_string(n) + ": sum of delta over multisets = " +
                       via_multisets.str() + " but sum of pi = " + via_pi.str();
            return r;
        }
    }
    r.detail = "sum over (A,x) decompositions equals the partition numbers for n=1..25";
    return r;
}

// 9. Multichoose identity for 1 <= r,s <= 20.
Outcome check_multichoose_identity() {
    Outcome r;
    auto binom = [](std::int64_t top, std::int64_t k) {
        if (k < 0 || k > top) return Count(0);
        Count result = 1;
        for (std::int64_t i = 1; i <= k; ++i) {
            result *= top - k + i;
            result /= i;
        }
        return result;
    };
    for (std::int64_t rr = 1; rr <= 20; ++rr) {
        for (std::int64_t s = 1; s <= 20; ++s) {
            Count lhs = 0;
            for (std::int64_t i = 1; i <= rr; ++i) lhs += binom(rr - 1, i - 1) * binom(s, i);
            if (lhs != circles::multichoose(s, rr)) {
                r.ok = false;
                r.detail = "fails at r=" + std::to_string(rr) + " s=" + std::to_string(s);
                return r;
            }
        }
    }
    r.detail = "sum_i C(r-1,i-1) C(s,i) = C(r+s-1,r) for all r,s <= 20";
    return r;
}

// 10. Parser round-trip and isomorphism completeness on <= 7 nodes.
Outcome check_parser_completeness() {
    Outcome r;
    verification::OracleBudget budget{8, 40, 7};
    std::int64_t forests_seen = 0;
    std::int64_t pairs = 0;
    for (std::int64_t n = 0; n <= 7; ++n) {
        auto shapes = verification::enumerate_ordered_forests(n, budget);
        std::vector<circles::Forest> parsed;
        std::vector<std::string> canon;
        for (const auto& s : shapes) {
            auto f = circles::parse_forest(s);
            auto c = circles::canonical_form(f);
            if (circles::canonical_form(circles::parse_forest(c)) != c) {
                r.ok = false;
                r.detail = "canonicalization not idempotent for '" + s + "'";
                return r;
            }
            if (node_count(f) != n) {
                r.ok = false;
                r.detail = "node count drift for '" + s + "'";
                return r;
            }
            parsed.push_back(std::move(f));
            canon.push_back(std::move(c));
        }
        forests_seen += std::ssize(shapes);
        for (std::size_t i = 0; i < parsed.size(); ++i) {
            for (std::size_t j = i + 1; j < parsed.size(); ++j) {
                bool same_string = canon[i] == canon[j];
                bool isomorphic = verification::forests_isomorphic(parsed[i], parsed[j]);
                ++pairs;
                if (same_string != isomorphic) {
                    r.ok = false;
                    r.detail = "completeness breaks for '" + shapes[i] + "' vs '" + shapes[j] +
                               "': canonical " + (same_string ? "equal" : "differs") +
                               ", isomorphism " + (isomorphic ? "holds" : "fails");
                    return r;
                }
            }
        }
    }
    r.detail = "round-trip and string-equality iff isomorphism over " +
               std::to_string(forests_seen) + " ordered forests, " + std::to_string(pairs) +
               " pairs";
    return r;
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(const CheckOptions& options) {
    struct Spec {
        int id;
        const char* name;
        double budget_seconds;
        Outcome (*run)(const CheckOptions&);
    };
    static const Spec specs[] = {
        {1, "worked example values", 1.0,
         [](const CheckOptions&) { return check_worked_examples(); }},
        {2, "coefficient multisets for n=6", 1.0,
         [](const CheckOptions&) { return check_coefficient_multisets(); }},
        {3, "recursion vs exhaustive oracles", 60.0,
         [](const CheckOptions& o) { return check_oracle_sweep(o.sweep); }},
        {4, "closed-form validity sweeps", 10.0,
         [](const CheckOptions&) { return check_closed_forms(); }},
        {5, "triangular identity", 30.0, [](const CheckOptions&) { return check_triangular(); }},
        {6, "shift identities vs non-negative oracles", 30.0,
         [](const CheckOptions&) { return check_shift_identities(); }},
        {7, "circle counts vs independent oracles", 30.0,
         [](const CheckOptions& o) { return check_circles(o); }},
        {8, "partition cross-check", 60.0,
         [](const CheckOptions&) { return check_partition_crosscheck(); }},
        {9, "multichoose identity", 1.0,
         [](const CheckOptions&) { return check_multichoose_identity(); }},
        {10, "parser round-trip and isomorphism completeness", 30.0,
         [](const CheckOptions&) { return check_parser_completeness(); }},
    };

    std::vector<CheckResult> results;
    for (const auto& spec : specs) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome = spec.run(options);
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        CheckResult res;
        res.id = spec.id;
        res.name = spec.name;
        res.ok = outcome.ok;
        res.seconds = elapsed.count();
        res.budget_seconds = spec.budget_seconds;
        res.detail = outcome.detail;
        if (res.ok && res.seconds > res.budget_seconds) {
            res.detail += " [exceeded the " + std::to_string(spec.budget_seconds) +
                          "s runtime budget]";
        }
        results.push_back(std::move(res));
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed(); });
}

std::string one_line(const CheckResult& r) {
    std::ostringstream os;
    os << "criterion " << r.id << ' ' << (r.passed() ? "PASS" : "FAIL") << ' ' << std::fixed
       << std::setprecision(2) << r.seconds << "s (budget ";
    os.unsetf(std::ios::floatfield);
    os << r.budget_seconds << "s) " << r.name << ": " << r.detail;
    return os.str();
}

}  // namespace finpart::selfcheck

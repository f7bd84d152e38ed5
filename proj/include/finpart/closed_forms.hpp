#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finpart/count.hpp"
#include "finpart/counting.hpp"
#include "finpart/multiset.hpp"

namespace finpart::closed_forms {

// Each tag names one fixed-multiset floor formula; the multiset is part of
// the name (D_122 is D(n,{1,2,2}), DELTA_12 is Delta(n,{1,2}), ...).
enum class FormulaId {
    D_12,
    D_122,
    D_112,
    D_123,
    D_pair_equal,
    D_pair_distinct,
    DELTA_11,
    DELTA_12,
};

std::string to_string(FormulaId f);
std::optional<FormulaId> formula_from_string(std::string_view name);

// Evaluates the named floor expression exactly in integer arithmetic.
// Accepts D_12, D_122, D_112, D_123; throws std::invalid_argument otherwise.
// D_123 uses the reduction D(n,{1,2,3}) = D(n-3,{1,1,1}) = Pi(n-3,3)
// evaluated as floor(((n-3)^2+6)/12), independent of the recursion engine.
Count d_closed(std::int64_t n, FormulaId f);

// The fully expanded nested-floor expression for D(n,{1,2,3}) transcribed
// verbatim. Signed: it reaches -1 for small n. Disagrees with the recursion
// on part of its domain; validity is adjudicated, never assumed.
std::int64_t d_123_printed(std::int64_t n);

// Pair formula, evaluated verbatim: floor(n/(2*a1)) when a1 == a2,
// floor((n-1)/(a1*a2)) otherwise. Argument order is normalized. The formula
// is known not to hold everywhere; validate_formula maps its domain.
Count d_pair_closed(std::int64_t n, std::int64_t a1, std::int64_t a2);

// Accepts DELTA_11, DELTA_12; throws std::invalid_argument otherwise.
Count delta_closed(std::int64_t n, FormulaId f);

struct TriangularCheck {
    Count lhs;   // d(n(n+3)/2, {1,2,...,n})
    Count rhs;   // d(2n, {1,...,1}) = pi(2n, n)
    bool equal;
};
TriangularCheck check_triangular_identity(std::int64_t n, CountingEngine& engine);

struct Mismatch {
    std::int64_t n;
    Multiset multiset;
    Count closed;
    Count recursion;

    bool operator==(const Mismatch&) const = default;
};

struct ValidityReport {
    FormulaId formula;
    std::int64_t lo = 1;
    std::int64_t hi = 1;
    std::vector<Mismatch> mismatches;  // empty iff the formula held everywhere
};

// Sweeps the formula against the recursion on n = 1..n_max and records every
// disagreement. Pair families sweep all 1 <= a1 <= a2 <= 6 (equal/distinct
// split by tag), n ascending outermost.
ValidityReport validate_formula(FormulaId f, std::int64_t n_max, CountingEngine& engine);

// Same sweep for the verbatim {1,2,3} expression of d_123_printed.
std::vector<Mismatch> d123_printed_mismatches(std::int64_t n_max, CountingEngine& engine);

}  // namespace finpart::closed_forms

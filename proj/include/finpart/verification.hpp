#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finpart/circles.hpp"
#include "finpart/count.hpp"
#include "finpart/multiset.hpp"

namespace finpart::verification {

// Caps on the exhaustive oracles. The defaults keep every sweep below a
// minute on ordinary hardware.
struct OracleBudget {
    std::int64_t max_sigma = 8;
    std::int64_t max_n = 40;
    std::int64_t max_forest_nodes = 10;
};

// Exhaustive counterparts of the counting recursions: plain nested iteration
// over the x values with the mode's ordering constraints, no memoization,
// no code shared with CountingEngine. Throw BudgetExceeded past the budget.
Count d_bruteforce(std::int64_t n, const Multiset& A, const OracleBudget& budget = {});
Count delta_bruteforce(std::int64_t n, const Multiset& A, const OracleBudget& budget = {});

// Non-negative-mode oracles (x_i >= 0), the independent side of the shift
// identities d0/delta0.
Count d0_bruteforce(std::int64_t n, const Multiset& A, const OracleBudget& budget = {});
Count delta0_bruteforce(std::int64_t n, const Multiset& A, const OracleBudget& budget = {});

// Rooted-tree counts by the classical recurrence
//   t(1) = 1,  t(m+1) = (1/m) * sum_{j=1..m} (sum_{d|j} d t(d)) t(m-j+1),
// returned as [C_0..C_n_max] with C_i = t(i+1). Every division is exact;
// an inexact one means the implementation is broken (std::logic_error).
std::vector<Count> rooted_trees_euler(std::int64_t n_max);

// All canonical forest strings with exactly n nodes, lexicographically
// sorted. Built by direct string-level generation in canonical sibling
// order, independent of circles::canonical_form.
std::vector<std::string> enumerate_canonical_forests(std::int64_t n,
                                                     const OracleBudget& budget = {});

// Every ordered forest shape with n nodes (Catalan many), as parenthesis
// strings. Raw material for isomorphism-completeness sweeps.
std::vector<std::string> enumerate_ordered_forests(std::int64_t n,
                                                   const OracleBudget& budget = {});

// Unordered-forest isomorphism by backtracking child matching. The oracle
// against which canonical_form's completeness is judged.
bool forests_isomorphic(const circles::Forest& a, const circles::Forest& b);

// All multisets with sigma(A) <= max_sigma, the empty one included,
// ascending by expanded sequence. Drives the oracle sweeps.
std::vector<Multiset> enumerate_multisets_sigma_le(std::int64_t max_sigma);

}  // namespace finpart::verification

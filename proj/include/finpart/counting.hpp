#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "finpart/count.hpp"
#include "finpart/multiset.hpp"

namespace finpart {

enum class SolutionMode { natural, distinct };

// The D-recursion works for any pivot element; the engine fixes one policy
// and a property test checks both policies agree.
enum class PivotPolicy { largest_value, smallest_value };

// One solution of n = a_1 x_1 + ... + a_k x_k, with `values` aligned to the
// ascending expansion of the multiset. natural mode: x_i >= 1, weakly
// increasing inside runs of equal coefficients. distinct mode: pairwise
// distinct, strictly increasing inside runs.
struct SolutionTuple {
    Multiset multiset;
    std::vector<std::int64_t> values;

    auto operator<=>(const SolutionTuple&) const = default;
};

// Memoized counting for Pi, D, D0, Delta, Delta0 plus the two enumerators.
// One engine owns its memo tables; engines are cheap, results deterministic.
class CountingEngine {
public:
    explicit CountingEngine(PivotPolicy pivot = PivotPolicy::largest_value)
        : pivot_(pivot) {}

    // Partitions of n into exactly k positive parts.
    // Pi(n,k) = sum_{s=0..k} Pi(n-k,s); Pi(0,0)=1; Pi(n,k)=0 for n<k.
    Count pi(std::int64_t n, std::int64_t k);

    // Natural partition number: solutions with x_i >= 1.
    Count d(std::int64_t n, const Multiset& A);
    // Arithmetic partition number: x_i >= 0; equals d(n + sigma(A), A).
    Count d0(std::int64_t n, const Multiset& A);
    // Distinct partition number: pairwise distinct x_i >= 1.
    Count delta(std::int64_t n, const Multiset& A);
    // Distinct with x_i >= 0; equals delta(n + sigma(A), A).
    Count delta0(std::int64_t n, const Multiset& A);

    // Every admissible tuple, lexicographic by values. Implemented by direct
    // backtracking over x, sharing no code with the counting recursions, so
    // list length vs count is a genuine cross-check.
    std::vector<SolutionTuple> enumerate_solutions(std::int64_t n, const Multiset& A,
                                                   SolutionMode mode);

    // All size-k multisets A with delta(n,A) >= 1, sorted by expanded value
    // sequence. Empty whenever k(k+1)/2 > n.
    std::vector<Multiset> enumerate_coefficient_multisets(std::int64_t n, std::int64_t k);

private:
    Count d_rec(std::int64_t n, const Multiset& A);
    Count delta_rec(std::int64_t n, const Multiset& A);

    PivotPolicy pivot_;
    std::map<std::pair<std::int64_t, std::int64_t>, Count> pi_memo_;
    using Key = std::tuple<std::int64_t, std::vector<Multiset::Entry>, int>;
    std::map<Key, Count> memo_;
};

}  // namespace finpart

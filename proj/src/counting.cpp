#include "finpart/counting.hpp"

#include <algorithm>

namespace finpart {

Count CountingEngine::pi(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) return 0;
    if (k == 0) return n == 0 ? 1 : 0;
    if (n < k) return 0;
    auto key = std::make_pair(n, k);
    if (auto it = pi_memo_.find(key); it != pi_memo_.end()) return it->second;
    Count total = 0;
    for (std::int64_t s = 0; s <= k; ++s) total += pi(n - k, s);
    pi_memo_.emplace(key, total);
    return total;
}

Count CountingEngine::d(std::int64_t n, const Multiset& A) { return d_rec(n, A); }

Count CountingEngine::d0(std::int64_t n, const Multiset& A) {
    if (n < 0) return 0;
    return d_rec(n + A.sigma(), A);
}

Count CountingEngine::delta(std::int64_t n, const Multiset& A) { return delta_rec(n, A); }

Count CountingEngine::delta0(std::int64_t n, const Multiset& A) {
    if (n < 0) return 0;
    return delta_rec(n + A.sigma(), A);
}

// D(n,A) = sum_{l=0..m(a)} D(n - a*m(a), A minus l copies of a) for any
// a in A: subtract 1 from every x attached to a; the l values that hit 0
// drop their coefficient copy. n >= sigma(A) guarantees n - a*m(a) >= 0.
Count CountingEngine::d_rec(std::int64_t n, const Multiset& A) {
    if (n < 0) return 0;
    if (A.empty()) return n == 0 ? 1 : 0;
    if (n < A.sigma()) return 0;

    Key key{n, A.entries(), 0};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto& entries = A.entries();
    const auto [a, m] = pivot_ == PivotPolicy::largest_value ? entries.back() : entries.front();
    Count total = 0;
    for (std::int64_t l = 0; l <= m; ++l) total += d_rec(n - a * m, A.remove_copies(a, l));
    memo_.emplace(std::move(key), total);
    return total;
}

// Delta(n,A) = Delta(n - sigma, A) + sum over distinct b in A of
// Delta(n - sigma, A minus one copy of b): subtract 1 from every x; all
// values are distinct so at most one hits 0 and drops its coefficient.
Count CountingEngine::delta_rec(std::int64_t n, const Multiset& A) {
    if (n < 0) return 0;
    if (A.empty()) return n == 0 ? 1 : 0;
    if (n < A.min_distinct_sum()) return 0;

    Key key{n, A.entries(), 1};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::int64_t sigma = A.sigma();
    Count total = delta_rec(n - sigma, A);
    for (const auto& [b, m] : A.entries()) total += delta_rec(n - sigma, A.remove_copies(b, 1));
    memo_.emplace(std::move(key), total);
    return total;
}

namespace {

void backtrack_solutions(const std::vector<std::int64_t>& a, std::size_t i, std::int64_t rem,
                         SolutionMode mode, std::vector<std::int64_t>& x,
                         std::vector<SolutionTuple>& out, const Multiset& A) {
    if (i == a.size()) {
        if (rem == 0) out.push_back({A, x});
        return;
    }
    std::int64_t lo = 1;
    if (i > 0 && a[i] == a[i - 1]) lo = mode == SolutionMode::natural ? x[i - 1] : x[i - 1] + 1;
    for (std::int64_t v = lo; a[i] * v <= rem; ++v) {
        if (mode == SolutionMode::distinct &&
            std::find(x.begin(), x.end(), v) != x.end()) {
            continue;
        }
        x.push_back(v);
        backtrack_solutions(a, i + 1, rem - a[i] * v, mode, x, out, A);
        x.pop_back();
    }
}

}  // namespace

std::vector<SolutionTuple> CountingEngine::enumerate_solutions(std::int64_t n, const Multiset& A,
                                                               SolutionMode mode) {
    std::vector<SolutionTuple> out;
    if (n < 0) return out;
    auto a = A.expand();
    if (a.empty()) {
        if (n == 0) out.push_back({A, {}});
        return out;
    }
    std::vector<std::int64_t> x;
    backtrack_solutions(a, 0, n, mode, x, out, A);
    return out;  // ascending x at each level gives lexicographic order
}

std::vector<Multiset> CountingEngine::enumerate_coefficient_multisets(std::int64_t n,
                                                                      std::int64_t k) {
    std::vector<Multiset> out;
    if (n < 1 || k < 1) return out;

    // Cheapest distinct completion pads the remaining slots with the value
    // about to be placed, so its min_distinct_sum is a valid pruning bound.
    std::vector<std::int64_t> prefix;
    auto padded_mds = [&](std::int64_t pad) {
        auto padded = prefix;
        padded.insert(padded.end(), static_cast<std::size_t>(k - prefix.size()), pad);
        return Multiset::canonicalize(std::move(padded)).min_distinct_sum();
    };
    auto gen = [&](auto&& self, std::int64_t lo) -> void {
        if (std::ssize(prefix) == k) {
            Multiset A = Multiset::canonicalize(prefix);
            if (delta(n, A) >= 1) out.push_back(std::move(A));
            return;
        }
        for (std::int64_t a = lo; padded_mds(a) <= n; ++a) {
            prefix.push_back(a);
            self(self, a);
            prefix.pop_back();
        }
    };
    gen(gen, 1);
    return out;  // generation order is ascending expanded sequence
}

}  // namespace finpart

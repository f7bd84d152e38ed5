#include "finpart/verification.hpp"

#include <algorithm>
#include <stdexcept>

namespace finpart::verification {

namespace {

void check_budget(const char* who, std::int64_t n, const Multiset& A,
                  const OracleBudget& budget) {
    if (n > budget.max_n) {
        throw BudgetExceeded(std::string(who) + ": n = " + std::to_string(n) +
                             " exceeds max_n = " + std::to_string(budget.max_n));
    }
    if (A.sigma() > budget.max_sigma) {
        throw BudgetExceeded(std::string(who) + ": sigma(A) = " + std::to_string(A.sigma()) +
                             " exceeds max_sigma = " + std::to_string(budget.max_sigma));
    }
}

// Nested iteration over x_i >= min_value. Branches whose partial sum already
// exceeds n contribute nothing and are skipped, which leaves the counted set
// untouched. `used` is non-null in the globally-distinct modes.
Count exhaustive(const std::vector<std::int64_t>& a, std::size_t i, std::int64_t rem,
                 std::int64_t min_value, bool strict_runs, std::vector<std::int64_t>& x,
                 std::vector<char>* used) {
    if (i == a.size()) return rem == 0 ? 1 : 0;
    std::int64_t lo = min_value;
    if (i > 0 && a[i] == a[i - 1]) lo = strict_runs ? x[i - 1] + 1 : x[i - 1];
    Count total = 0;
    for (std::int64_t v = lo; a[i] * v <= rem; ++v) {
        if (used) {
            if ((*used)[static_cast<std::size_t>(v)]) continue;
            (*used)[static_cast<std::size_t>(v)] = 1;
        }
        x.push_back(v);
        total += exhaustive(a, i + 1, rem - a[i] * v, min_value, strict_runs, x, used);
        x.pop_back();
        if (used) (*used)[static_cast<std::size_t>(v)] = 0;
    }
    return total;
}

Count run_exhaustive(std::int64_t n, const Multiset& A, std::int64_t min_value,
                     bool strict_runs, bool distinct) {
    if (n < 0) return 0;
    auto a = A.expand();
    if (a.empty()) return n == 0 ? 1 : 0;
    std::vector<std::int64_t> x;
    std::vector<char> used;
    if (distinct) used.assign(static_cast<std::size_t>(n) + 1, 0);
    return exhaustive(a, 0, n, min_value, strict_runs, x, distinct ? &used : nullptr);
}

}  // namespace

Count d_bruteforce(std::int64_t n, const Multiset& A, const OracleBudget& budget) {
    check_budget("d_bruteforce", n, A, budget);
    return run_exhaustive(n, A, 1, false, false);
}

Count delta_bruteforce(std::int64_t n, const Multiset& A, const OracleBudget& budget) {
    check_budget("delta_bruteforce", n, A, budget);
    return run_exhaustive(n, A, 1, true, true);
}

Count d0_bruteforce(std::int64_t n, const Multiset& A, const OracleBudget& budget) {
    check_budget("d0_bruteforce", n, A, budget);
    return run_exhaustive(n, A, 0, false, false);
}

Count delta0_bruteforce(std::int64_t n, const Multiset& A, const OracleBudget& budget) {
    check_budget("delta0_bruteforce", n, A, budget);
    return run_exhaustive(n, A, 0, true, true);
}

std::vector<Count> rooted_trees_euler(std::int64_t n_max) {
    if (n_max < 0) throw std::invalid_argument("rooted_trees_euler: n_max must be >= 0");
    // t[i] = number of rooted trees on i vertices, 1-based
    std::vector<Count> t(static_cast<std::size_t>(n_max) + 2, 0);
    t[1] = 1;
    for (std::int64_t m = 1; m <= n_max; ++m) {
        Count total = 0;
        for (std::int64_t j = 1; j <= m; ++j) {
            Count s = 0;
            for (std::int64_t divisor = 1; divisor <= j; ++divisor) {
                if (j % divisor == 0) s += divisor * t[static_cast<std::size_t>(divisor)];
            }
            total += s * t[static_cast<std::size_t>(m - j + 1)];
        }
        if (total % m != 0) {
            throw std::logic_error("rooted_trees_euler: inexact division at m = " +
                                   std::to_string(m));
        }
        t[static_cast<std::size_t>(m) + 1] = total / m;
    }
    std::vector<Count> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t i = 0; i <= n_max; ++i) out.push_back(t[static_cast<std::size_t>(i) + 1]);
    return out;
}

std::vector<std::string> enumerate_canonical_forests(std::int64_t n,
                                                     const OracleBudget& budget) {
    if (n < 0 || n > budget.max_forest_nodes) {
        throw BudgetExceeded("enumerate_canonical_forests: n = " + std::to_string(n) +
                             " exceeds max_forest_nodes = " +
                             std::to_string(budget.max_forest_nodes));
    }
    // trees[s]: canonical tree strings with s nodes; forests[s]: canonical
    // forest strings with s nodes. A forest is canonical iff its trees never
    // go up in (size descending, string ascending) order.
    std::vector<std::vector<std::string>> trees(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<std::string>> forests(static_cast<std::size_t>(n) + 1);
    forests[0] = {""};
    for (std::int64_t s = 1; s <= n; ++s) {
        for (const auto& f : forests[static_cast<std::size_t>(s) - 1]) {
            trees[static_cast<std::size_t>(s)].push_back("(" + f + ")");
        }
        std::sort(trees[static_cast<std::size_t>(s)].begin(),
                  trees[static_cast<std::size_t>(s)].end());

        auto& out = forests[static_cast<std::size_t>(s)];
        // first tree of size `first`, remaining trees must not precede it
        for (std::int64_t first = s; first >= 1; --first) {
            for (const auto& t : trees[static_cast<std::size_t>(first)]) {
                if (first == s) {
                    out.push_back(t);
                    continue;
                }
                for (const auto& rest : forests[static_cast<std::size_t>(s - first)]) {
                    // rest's leading tree must not precede t: strictly
                    // smaller (shorter), or equal sized with string >= t
                    std::size_t lead_size = 0;  // leading tree length in chars
                    int depth = 0;
                    for (std::size_t i = 0; i < rest.size(); ++i) {
                        depth += rest[i] == '(' ? 1 : -1;
                        if (depth == 0) {
                            lead_size = i + 1;
                            break;
                        }
                    }
                    if (lead_size > t.size()) continue;
                    if (lead_size == t.size() && rest.compare(0, lead_size, t) < 0) continue;
                    out.push_back(t + rest);
                }
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return forests[static_cast<std::size_t>(n)];
}

std::vector<std::string> enumerate_ordered_forests(std::int64_t n, const OracleBudget& budget) {
    if (n < 0 || n > budget.max_forest_nodes) {
        throw BudgetExceeded("enumerate_ordered_forests: n = " + std::to_string(n) +
                             " exceeds max_forest_nodes = " +
                             std::to_string(budget.max_forest_nodes));
    }
    std::vector<std::vector<std::string>> shapes(static_cast<std::size_t>(n) + 1);
    shapes[0] = {""};
    for (std::int64_t s = 1; s <= n; ++s) {
        for (std::int64_t first = 1; first <= s; ++first) {
            for (const auto& inner : shapes[static_cast<std::size_t>(first) - 1]) {
                for (const auto& rest : shapes[static_cast<std::size_t>(s - first)]) {
                    shapes[static_cast<std::size_t>(s)].push_back("(" + inner + ")" + rest);
                }
            }
        }
    }
    return shapes[static_cast<std::size_t>(n)];
}

namespace {

bool trees_isomorphic(const circles::TreeNode& a, const circles::TreeNode& b);

// Backtracking perfect matching between two child lists under isomorphism.
bool children_match(const std::vector<circles::TreeNode>& xs,
                    const std::vector<circles::TreeNode>& ys, std::vector<char>& taken,
                    std::size_t i) {
    if (i == xs.size()) return true;
    for (std::size_t j = 0; j < ys.size(); ++j) {
        if (taken[j] || !trees_isomorphic(xs[i], ys[j])) continue;
        taken[j] = 1;
        if (children_match(xs, ys, taken, i + 1)) return true;
        taken[j] = 0;
    }
    return false;
}

bool trees_isomorphic(const circles::TreeNode& a, const circles::TreeNode& b) {
    if (a.children.size() != b.children.size()) return false;
    if (node_count(a) != node_count(b)) return false;
    std::vector<char> taken(b.children.size(), 0);
    return children_match(a.children, b.children, taken, 0);
}

}  // namespace

bool forests_isomorphic(const circles::Forest& a, const circles::Forest& b) {
    if (a.trees.size() != b.trees.size()) return false;
    if (node_count(a) != node_count(b)) return false;
    std::vector<char> taken(b.trees.size(), 0);
    return children_match(a.trees, b.trees, taken, 0);
}

namespace {

void collect_multisets(std::int64_t lo, std::int64_t rem, std::vector<std::int64_t>& cur,
                       std::vector<Multiset>& out) {
    out.push_back(Multiset::canonicalize(cur));
    for (std::int64_t v = lo; v <= rem; ++v) {
        cur.push_back(v);
        collect_multisets(v, rem - v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Multiset> enumerate_multisets_sigma_le(std::int64_t max_sigma) {
    std::vector<Multiset> out;
    std::vector<std::int64_t> cur;
    collect_multisets(1, std::max<std::int64_t>(max_sigma, 0), cur, out);
    return out;
}

}  // namespace finpart::verification

#include "finpart/circles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>

namespace finpart::circles {

std::int64_t node_count(const TreeNode& t) {
    std::int64_t total = 1;
    for (const auto& c : t.children) total += node_count(c);
    return total;
}

std::int64_t node_count(const Forest& f) {
    std::int64_t total = 0;
    for (const auto& t : f.trees) total += node_count(t);
    return total;
}

Count multichoose(const Count& s, std::int64_t r) {
    if (r < 0) return 0;
    if (r == 0) return 1;
    // binomial(s+r-1, r) by multiply-then-divide; each step divides a
    // product of i consecutive integers by i, so division is exact.
    Count top = s + r - 1;
    if (top < r) return 0;
    Count result = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        result *= top - r + i;
        result /= i;
    }
    return result;
}

namespace {

// Partitions of `rem` into parts <= max_size, grouped as (size, mult) with
// sizes strictly decreasing. Invokes fn once per partition.
template <typename Fn>
void for_each_grouped_partition(std::int64_t max_size, std::int64_t rem,
                                std::vector<std::pair<std::int64_t, std::int64_t>>& groups,
                                Fn&& fn) {
    if (rem == 0) {
        fn(groups);
        return;
    }
    for (std::int64_t size = std::min(max_size, rem); size >= 1; --size) {
        for (std::int64_t mult = 1; size * mult <= rem; ++mult) {
            groups.emplace_back(size, mult);
            for_each_grouped_partition(size - 1, rem - size * mult, groups, fn);
            groups.pop_back();
        }
    }
}

}  // namespace

void CircleCounter::ensure(std::int64_t n) {
    while (std::ssize(cache_) <= n) {
        std::int64_t m = std::ssize(cache_);
        Count total = 0;
        std::vector<std::pair<std::int64_t, std::int64_t>> groups;
        for_each_grouped_partition(m, m, groups, [&](const auto& gs) {
            Count term = 1;
            for (const auto& [size, mult] : gs) {
                term *= multichoose(cache_[static_cast<std::size_t>(size - 1)], mult);
            }
            total += term;
        });
        cache_.push_back(std::move(total));  // m = 0 gets the empty product, C_0 = 1
    }
}

const Count& CircleCounter::count(std::int64_t n) {
    ensure(n);
    return cache_[static_cast<std::size_t>(n)];
}

std::vector<Count> CircleCounter::table(std::int64_t n_max) {
    ensure(n_max);
    return {cache_.begin(), cache_.begin() + n_max + 1};
}

std::vector<Term> CircleCounter::terms(std::int64_t n) {
    ensure(n - 1);
    std::vector<Term> out;
    std::vector<std::pair<std::int64_t, std::int64_t>> groups;
    for_each_grouped_partition(n, n, groups, [&](const auto& gs) {
        // coefficient a = multiplicity of each part size x; align x with the
        // ascending expansion of A (ties broken by x, which are distinct)
        std::vector<std::pair<std::int64_t, std::int64_t>> ax;  // (a, x)
        for (const auto& [size, mult] : gs) ax.emplace_back(mult, size);
        std::sort(ax.begin(), ax.end());
        std::vector<std::int64_t> coeffs, x;
        Count value = 1;
        for (const auto& [a, size] : ax) {
            coeffs.push_back(a);
            x.push_back(size);
            value *= multichoose(cache_[static_cast<std::size_t>(size - 1)], a);
        }
        out.push_back({Multiset::canonicalize(std::move(coeffs)), std::move(x),
                       std::move(value)});
    });
    std::sort(out.begin(), out.end(), [](const Term& p, const Term& q) {
        return std::tuple(p.A.size_k(), p.A.expand(), p.x) <
               std::tuple(q.A.size_k(), q.A.expand(), q.x);
    });
    return out;
}

Forest parse_forest(std::string_view text) {
    Forest forest;
    // Open nodes, outermost first. A node's children vector only mutates
    // while that node is top of the stack, so these pointers stay valid.
    std::vector<TreeNode*> open;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') {
            auto& siblings = open.empty() ? forest.trees : open.back()->children;
            siblings.emplace_back();
            open.push_back(&siblings.back());
        } else if (c == ')') {
            if (open.empty()) throw ParseError("unmatched ')'", i);
            open.pop_back();
        } else if (c == '~' || std::isspace(static_cast<unsigned char>(c))) {
            // the circle glyph and layout whitespace carry no structure
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    if (!open.empty()) throw ParseError("unclosed '('", text.size());
    return forest;
}

namespace {

// Canonical string length is 2 * node count, so ordering by (length desc,
// string asc) is exactly (subtree size desc, string asc).
bool canonical_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

std::string canonical_node(const TreeNode& t) {
    std::vector<std::string> kids;
    kids.reserve(t.children.size());
    for (const auto& c : t.children) kids.push_back(canonical_node(c));
    std::sort(kids.begin(), kids.end(), canonical_less);
    std::string out = "(";
    for (const auto& k : kids) out += k;
    out += ')';
    return out;
}

}  // namespace

std::string canonical_form(const Forest& f) {
    std::vector<std::string> trees;
    trees.reserve(f.trees.size());
    for (const auto& t : f.trees) trees.push_back(canonical_node(t));
    std::sort(trees.begin(), trees.end(), canonical_less);
    std::string out;
    for (const auto& t : trees) out += t;
    return out;
}

namespace {

// All ordered forest shapes with n nodes, as parenthesis strings. Grows as
// the Catalan numbers; only used under the enumeration budget.
const std::vector<std::string>& ordered_shapes(std::int64_t n) {
    static std::map<std::int64_t, std::vector<std::string>> memo;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::vector<std::string> out;
    if (n == 0) {
        out.emplace_back();
    } else {
        for (std::int64_t first = 1; first <= n; ++first) {
            for (const auto& inner : ordered_shapes(first - 1)) {
                for (const auto& rest : ordered_shapes(n - first)) {
                    out.push_back("(" + inner + ")" + rest);
                }
            }
        }
    }
    return memo.emplace(n, std::move(out)).first->second;
}

std::int64_t distinct_canonical(const std::vector<std::string>& shapes) {
    std::set<std::string> seen;
    for (const auto& s : shapes) seen.insert(canonical_form(parse_forest(s)));
    return std::ssize(seen);
}

}  // namespace

ForestTreeCheck forest_to_tree_count_check(std::int64_t n, std::int64_t budget) {
    if (n < 0 || n > budget) {
        throw BudgetExceeded("forest_to_tree_count_check: n = " + std::to_string(n) +
                             " exceeds budget " + std::to_string(budget));
    }
    Count forests = distinct_canonical(ordered_shapes(n));
    // single trees with n+1 nodes: one root wrapped around an n-node forest
    std::vector<std::string> trees;
    for (const auto& inner : ordered_shapes(n)) trees.push_back("(" + inner + ")");
    Count tree_count = distinct_canonical(trees);
    return {forests, tree_count, forests == tree_count};
}

}  // namespace finpart::circles

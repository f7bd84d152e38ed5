#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "finpart/count.hpp"
#include "finpart/multiset.hpp"

namespace finpart::circles {

// Rooted forest of unlabelled trees; one node per circle, children are the
// circles drawn immediately inside their parent.
struct TreeNode {
    std::vector<TreeNode> children;
};
struct Forest {
    std::vector<TreeNode> trees;
};

std::int64_t node_count(const TreeNode& t);
std::int64_t node_count(const Forest& f);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Number of weakly increasing r-tuples over {1..s}: binomial(r+s-1, r).
Count multichoose(const Count& s, std::int64_t r);

// One term of the circle-count expansion: coefficient multiset A, solution
// tuple x aligned with A's ascending expansion, and the product value
// prod_i multichoose(C_{x_i - 1}, a_i).
struct Term {
    Multiset A;
    std::vector<std::int64_t> x;
    Count value;
};

// C_n, the number of arrangements of n non-intersecting circles (equally:
// unlabelled rooted trees on n+1 vertices). Grows a cached table bottom-up.
//
// C_n = sum over partitions of n: each partition, grouped as a_i parts of
// size x_i with the x_i distinct, contributes prod_i multichoose(C_{x_i-1},
// a_i). This grouping enumerates exactly the (A, x) pairs of the triple-sum
// formulation, one term per partition.
class CircleCounter {
public:
    const Count& count(std::int64_t n);
    std::vector<Count> table(std::int64_t n_max);  // C_0..C_{n_max}

    // Term-by-term expansion for n >= 1, ordered by (k, A, x) ascending.
    std::vector<Term> terms(std::int64_t n);

private:
    void ensure(std::int64_t n);
    std::vector<Count> cache_;
};

// Grammar: forest := tree*; tree := '(' forest ')'. '~' and whitespace are
// accepted and ignored. Anything else, or unbalanced input, is a ParseError
// carrying the byte offset.
Forest parse_forest(std::string_view text);

// Canonical parenthesis rendering: siblings sorted by subtree size
// descending, ties by string ascending, at every level. Equal strings iff
// the forests are isomorphic as unordered forests.
std::string canonical_form(const Forest& f);

struct ForestTreeCheck {
    Count forests;             // distinct canonical forests with n nodes
    Count trees_with_n_plus_1; // distinct canonical trees with n+1 nodes
    bool equal;
};

// Brute enumeration on both sides of the forests-to-trees bijection (attach
// a virtual root). Throws BudgetExceeded for n above the budget.
ForestTreeCheck forest_to_tree_count_check(std::int64_t n, std::int64_t budget = 10);

}  // namespace finpart::circles

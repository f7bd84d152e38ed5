#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace finpart {

// Coefficient multiset A = {a_1,...,a_k}, a_1 <= ... <= a_k, all a_i >= 1.
// Stored run-length as (value, multiplicity) pairs with strictly increasing
// values, so equal multisets compare equal and memo keys stay small.
// Immutable after construction. The empty multiset is a valid value.
class Multiset {
public:
    using Entry = std::pair<std::int64_t, std::int64_t>;  // (value, multiplicity)

    Multiset() = default;

    // Normal form of an arbitrary value list; input order is irrelevant.
    // Throws std::invalid_argument on any value < 1.
    static Multiset canonicalize(std::vector<std::int64_t> values);

    // Parses the textual form "1,2,2,3"; the empty string is the empty
    // multiset. Throws std::invalid_argument on garbage or values < 1.
    static Multiset parse(std::string_view text);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    // k: number of elements counted with multiplicity.
    std::int64_t size_k() const;
    // sigma(A): sum of elements counted with multiplicity.
    std::int64_t sigma() const;

    // Least n with a distinct solution: sum of (k+1-i)*a_i over the ascending
    // expansion. The witness assignment is x_i = k+1-i.
    std::int64_t min_distinct_sum() const;

    std::int64_t multiplicity_of(std::int64_t value) const;  // 0 when absent
    bool contains(std::int64_t value) const { return multiplicity_of(value) > 0; }

    // A with `count` copies of `value` removed. Throws std::out_of_range if
    // fewer than `count` copies are present. count == 0 returns A unchanged.
    Multiset remove_copies(std::int64_t value, std::int64_t count) const;

    // Ascending value list with multiplicity, e.g. {(1,1),(2,2)} -> [1,2,2].
    std::vector<std::int64_t> expand() const;

    // Textual form: comma-separated expansion, "" for the empty multiset.
    std::string to_string() const;

    auto operator<=>(const Multiset&) const = default;

private:
    std::vector<Entry> entries_;
};

}  // namespace finpart

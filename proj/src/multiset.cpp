#include "finpart/multiset.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace finpart {

Multiset Multiset::canonicalize(std::vector<std::int64_t> values) {
    for (auto v : values) {
        if (v < 1) {
            throw std::invalid_argument("multiset values must be >= 1, got " +
                                        std::to_string(v));
        }
    }
    std::sort(values.begin(), values.end());
    Multiset out;
    for (auto v : values) {
        if (!out.entries_.empty() && out.entries_.back().first == v) {
            ++out.entries_.back().second;
        } else {
            out.entries_.emplace_back(v, 1);
        }
    }
    return out;
}

Multiset Multiset::parse(std::string_view text) {
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
            throw std::invalid_argument("bad multiset token '" + std::string(token) + "'");
        }
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == text.size()) {
            throw std::invalid_argument("trailing comma in multiset");
        }
    }
    return canonicalize(std::move(values));
}

std::int64_t Multiset::size_k() const {
    std::int64_t k = 0;
    for (const auto& [v, m] : entries_) k += m;
    return k;
}

std::int64_t Multiset::sigma() const {
    std::int64_t s = 0;
    for (const auto& [v, m] : entries_) s += v * m;
    return s;
}

std::int64_t Multiset::min_distinct_sum() const {
    // With a_1 <= ... <= a_k, the cheapest distinct assignment pairs the
    // largest x with the smallest a: weight k+1-i on a_i.
    std::int64_t k = size_k();
    std::int64_t total = 0;
    std::int64_t i = 1;
    for (const auto& [v, m] : entries_) {
        for (std::int64_t c = 0; c < m; ++c, ++i) total += (k + 1 - i) * v;
    }
    return total;
}

std::int64_t Multiset::multiplicity_of(std::int64_t value) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                               [](const Entry& e, std::int64_t v) { return e.first < v; });
    if (it != entries_.end() && it->first == value) return it->second;
    return 0;
}

Multiset Multiset::remove_copies(std::int64_t value, std::int64_t count) const {
    if (count < 0) throw std::out_of_range("negative removal count");
    if (count == 0) return *this;
    Multiset out = *this;
    for (auto it = out.entries_.begin(); it != out.entries_.end(); ++it) {
        if (it->first != value) continue;
        if (it->second < count) break;  // fall through to the error below
        it->second -= count;
        if (it->second == 0) out.entries_.erase(it);
        return out;
    }
    throw std::out_of_range("cannot remove " + std::to_string(count) + " copies of " +
                            std::to_string(value));
}

std::vector<std::int64_t> Multiset::expand() const {
    std::vector<std::int64_t> out;
    for (const auto& [v, m] : entries_) out.insert(out.end(), m, v);
    return out;
}

std::string Multiset::to_string() const {
    std::string out;
    for (const auto& [v, m] : entries_) {
        for (std::int64_t c = 0; c < m; ++c) {
            if (!out.empty()) out += ',';
            out += std::to_string(v);
        }
    }
    return out;
}

}  // namespace finpart

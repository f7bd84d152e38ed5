#include "finpart/closed_forms.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace finpart::closed_forms {

namespace {

// True floor division; operator/ truncates toward zero and the printed
// {1,2,3} expression goes negative for n <= 3.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

std::string to_string(FormulaId f) {
    switch (f) {
        case FormulaId::D_12: return "D_12";
        case FormulaId::D_122: return "D_122";
        case FormulaId::D_112: return "D_112";
        case FormulaId::D_123: return "D_123";
        case FormulaId::D_pair_equal: return "D_pair_equal";
        case FormulaId::D_pair_distinct: return "D_pair_distinct";
        case FormulaId::DELTA_11: return "DELTA_11";
        case FormulaId::DELTA_12: return "DELTA_12";
    }
    return "?";
}

std::optional<FormulaId> formula_from_string(std::string_view name) {
    for (FormulaId f : {FormulaId::D_12, FormulaId::D_122, FormulaId::D_112, FormulaId::D_123,
                        FormulaId::D_pair_equal, FormulaId::D_pair_distinct, FormulaId::DELTA_11,
                        FormulaId::DELTA_12}) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

Count d_closed(std::int64_t n, FormulaId f) {
    switch (f) {
        case FormulaId::D_12:
            // D(n,{1,2}) = floor((n-1)/2)
            return (n - 1) / 2;
        case FormulaId::D_122:
            // D(n,{1,2,2}) = floor((n-1)/4) * (floor((n+1)/2) - floor((n+3)/4))
            return Count((n - 1) / 4) * ((n + 1) / 2 - (n + 3) / 4);
        case FormulaId::D_112: {
            // D(n,{1,1,2}) = floor((3k+1)/2) * (floor((n-1)/2)
            //                - (1/2) floor(3*floor((n+2)/3)/2) + [n even]),
            // k = floor((n-1)/3). The half term is handled by doubling the
            // second factor; M * (doubled factor) is provably even.
            std::int64_t k = (n - 1) / 3;
            std::int64_t m = (3 * k + 1) / 2;
            std::int64_t inner = 3 * ((n + 2) / 3) / 2;
            std::int64_t doubled = 2 * ((n - 1) / 2) - inner + (n % 2 == 0 ? 2 : 0);
            std::int64_t twice = m * doubled;
            assert(twice % 2 == 0);
            return Count(twice / 2);
        }
        case FormulaId::D_123: {
            // D(n,{1,2,3}) = D(n-3,{1,1,1}) = Pi(n-3,3) = floor((m^2+6)/12)
            std::int64_t m = n - 3;
            if (m < 0) return 0;
            return Count((m * m + 6) / 12);
        }
        default:
            throw std::invalid_argument("d_closed: formula " + to_string(f) +
                                        " is not a single-argument D form");
    }
}

std::int64_t d_123_printed(std::int64_t n) {
    // Verbatim transcription of the expanded three-term display:
    //   floor((n-4)/6) * (2 floor((n-3)/2) - floor((n+2)/6)) / 2
    //   - floor(w/3) * floor((w-3)/3) / 2
    //   + floor((w+3)/6) * (2 floor((n-2)/2) - floor((w+9)/6)) / 2
    // with w = 2 floor((n-4)/2). The sum of the three doubled terms is even
    // for every n >= 1, so the final halving is exact.
    std::int64_t w = 2 * floor_div(n - 4, 2);
    std::int64_t t1 = floor_div(n - 4, 6) * (2 * floor_div(n - 3, 2) - floor_div(n + 2, 6));
    std::int64_t t2 = floor_div(w, 3) * floor_div(w - 3, 3);
    std::int64_t t3 = floor_div(w + 3, 6) * (2 * floor_div(n - 2, 2) - floor_div(w + 9, 6));
    std::int64_t doubled = t1 - t2 + t3;
    assert(doubled % 2 == 0);
    return doubled / 2;
}

Count d_pair_closed(std::int64_t n, std::int64_t a1, std::int64_t a2) {
    if (a1 < 1 || a2 < 1) throw std::invalid_argument("pair coefficients must be >= 1");
    if (a1 > a2) std::swap(a1, a2);
    if (a1 == a2) return Count(n / (2 * a1));
    return Count((n - 1) / (a1 * a2));
}

Count delta_closed(std::int64_t n, FormulaId f) {
    switch (f) {
        case FormulaId::DELTA_11:
            // Delta(n,{1,1}) = floor((n-1)/2)
            return (n - 1) / 2;
        case FormulaId::DELTA_12:
            // Delta(n,{1,2}) = floor((n-1)/3) + floor((n-1)/6)
            return Count((n - 1) / 3 + (n - 1) / 6);
        default:
            throw std::invalid_argument("delta_closed: formula " + to_string(f) +
                                        " is not a Delta form");
    }
}

TriangularCheck check_triangular_identity(std::int64_t n, CountingEngine& engine) {
    std::vector<std::int64_t> values(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i + 1;
    Count lhs = engine.d(n * (n + 3) / 2, Multiset::canonicalize(std::move(values)));
    Count rhs = engine.pi(2 * n, n);
    return {lhs, rhs, lhs == rhs};
}

ValidityReport validate_formula(FormulaId f, std::int64_t n_max, CountingEngine& engine) {
    if (n_max < 1) throw std::invalid_argument("validate_formula: n_max must be >= 1");
    ValidityReport report{f, 1, n_max, {}};
    auto sweep_pairs = [&](bool equal) {
        for (std::int64_t n = 1; n <= n_max; ++n) {
            for (std::int64_t a1 = 1; a1 <= 6; ++a1) {
                for (std::int64_t a2 = a1 + (equal ? 0 : 1); a2 <= 6; ++a2) {
                    if (equal && a2 != a1) continue;
                    Multiset a = Multiset::canonicalize({a1, a2});
                    Count closed = d_pair_closed(n, a1, a2);
                    Count rec = engine.d(n, a);
                    if (closed != rec) report.mismatches.push_back({n, a, closed, rec});
                }
            }
        }
    };
    switch (f) {
        case FormulaId::D_12:
        case FormulaId::D_122:
        case FormulaId::D_112:
        case FormulaId::D_123: {
            Multiset a = Multiset::parse(f == FormulaId::D_12    ? "1,2"
                                         : f == FormulaId::D_122 ? "1,2,2"
                                         : f == FormulaId::D_112 ? "1,1,2"
                                                                 : "1,2,3");
            for (std::int64_t n = 1; n <= n_max; ++n) {
                Count closed = d_closed(n, f);
                Count rec = engine.d(n, a);
                if (closed != rec) report.mismatches.push_back({n, a, closed, rec});
            }
            break;
        }
        case FormulaId::D_pair_equal:
            sweep_pairs(true);
            break;
        case FormulaId::D_pair_distinct:
            sweep_pairs(false);
            break;
        case FormulaId::DELTA_11:
        case FormulaId::DELTA_12: {
            Multiset a = Multiset::parse(f == FormulaId::DELTA_11 ? "1,1" : "1,2");
            for (std::int64_t n = 1; n <= n_max; ++n) {
                Count closed = delta_closed(n, f);
                Count rec = engine.delta(n, a);
                if (closed != rec) report.mismatches.push_back({n, a, closed, rec});
            }
            break;
        }
    }
    return report;
}

std::vector<Mismatch> d123_printed_mismatches(std::int64_t n_max, CountingEngine& engine) {
    std::vector<Mismatch> out;
    Multiset a = Multiset::parse("1,2,3");
    for (std::int64_t n = 1; n <= n_max; ++n) {
        Count closed = d_123_printed(n);
        Count rec = engine.d(n, a);
        if (closed != rec) out.push_back({n, a, closed, rec});
    }
    return out;
}

}  // namespace finpart::closed_forms

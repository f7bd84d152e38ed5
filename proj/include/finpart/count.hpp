#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace finpart {

// Exact arbitrary-precision count. Circle counts pass 2^64 before n=50,
// so every counting path uses this type; no floating point anywhere.
using Count = boost::multiprecision::cpp_int;

// Thrown by the exhaustive oracles and enumeration checks when asked to
// exceed their configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace finpart

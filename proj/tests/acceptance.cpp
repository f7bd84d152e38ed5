#include <iostream>

#include "finpart/selfcheck.hpp"

// Runs the ten acceptance checks at their default bounds and prints one
// verdict line per criterion. Exits nonzero if any criterion fails its
// statement or its runtime budget.
int main() {
    auto results = finpart::selfcheck::run_acceptance_checks();
    for (const auto& r : results) std::cout << finpart::selfcheck::one_line(r) << '\n';
    bool ok = finpart::selfcheck::all_passed(results);
    std::cout << (ok ? "all criteria passed" : "some criteria failed") << '\n';
    return ok ? 0 : 1;
}

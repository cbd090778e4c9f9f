#pragma once

#include <vector>

#include "ivp/rat.hpp"

namespace ivp {

/// Budget knobs for integer factoring. On exhaustion the cofactor is left in
/// `unfactored` instead of guessing.
struct FactorBudget {
    unsigned long trial_bound = 1000000;
    unsigned long rho_iterations = 3000000;
    int rho_restarts = 6;
};

struct FactoredInteger {
    std::vector<std::pair<Int, int>> primes;  // sorted by prime
    Int unfactored = 1;                       // 1 when fully factored; composite otherwise

    bool complete() const { return unfactored == 1; }
};

/// Factors |n| (n != 0) by trial division then Pollard-Brent rho under the
/// given budget. BPSW-certified prime cofactors count as factored.
FactoredInteger factor_integer(const Int& n, const FactorBudget& budget = {});

}  // namespace ivp

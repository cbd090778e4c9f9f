#pragma once

#include <optional>
#include <vector>

#include "ivp/fppoly.hpp"
#include "ivp/intfactor.hpp"
#include "ivp/ratpoly.hpp"

namespace ivp {

enum class TriState { Yes, No, Unknown };

struct DedekindResult {
    bool divides;
    std::optional<FpPoly> witness;  // a repeated factor pi with pi | F mod p
};

/**
 * Index divisibility test for a monic integer polynomial f, squarefree over
 * Q. Factor f mod p as prod pi_i^{e_i}, lift each pi_i to Z[X] with
 * coefficients in [0, p), set F = (f - prod pi_i^{e_i}) / p; then p divides
 * the index of a root of f exactly when some pi_j with e_j >= 2 divides F
 * mod p. The canonical [0, p) lift is fixed so F is reproducible; the
 * divisibility verdict does not depend on the lift.
 */
DedekindResult dedekind_divides_index(const RatPoly& f, int64_t p);

struct TestedPrime {
    Int p;
    bool divides;
    std::optional<FpPoly> witness;
};

struct IndexReport {
    RatPoly min_poly;
    std::vector<TestedPrime> tested;   // primes p with p^2 | factored part of disc
    TriState index_is_one = TriState::Unknown;
    Int disc = 0;
    Int unfactored_part = 1;           // 1 when disc fully factored
    std::string note;
};

/**
 * Certifies whether the index of a root of f is 1. Only primes whose square
 * divides disc(f) can divide the index; each such prime found within the
 * factoring budget is run through dedekind_divides_index. Verdict:
 *   Yes      - every candidate prime tested, none divides;
 *   No       - some tested prime divides;
 *   Unknown  - an unfactored composite cofactor could still hide a square,
 *              or a candidate prime is out of testable range.
 */
IndexReport index_one_certificate(const RatPoly& f, const FactorBudget& budget = {});

const char* tri_state_name(TriState t);

}  // namespace ivp

#pragma once

#include <optional>
#include <vector>

#include "ivp/algebraic.hpp"
#include "ivp/integrality.hpp"

namespace ivp {

/// alpha lies in S(f, d) exactly when f(alpha)/d is an algebraic integer;
/// d = 1 generators are inert (S(f, 1) is everything).
bool in_Sfd(const AlgebraicElement& e, const IvpGenerator& gen);

/// Membership in the closure described by a generator list: the conjunction
/// of in_Sfd over generators with d >= 2. An empty effective list means the
/// closure is the whole ring of algebraic integers, so the answer is true.
bool closure_member(const std::vector<IvpGenerator>& gens, const AlgebraicElement& e);

struct ZClosureWitness {
    int k;              // smallest k with binomial(X, k) non-integral at e
    RatPoly char_poly;  // characteristic polynomial of the non-integral value
};

/**
 * Searches k = 1..k_max for a binomial polynomial X(X-1)...(X-k+1)/k! taking
 * a non-integral value at e. A witness proves e is outside the polynomial
 * closure of the rational integers; nullopt is only "inconclusive within
 * budget", never membership. Budget: k_max * field degree <= 64.
 */
std::optional<ZClosureWitness> z_closure_witness(const AlgebraicElement& e, int k_max);

}  // namespace ivp

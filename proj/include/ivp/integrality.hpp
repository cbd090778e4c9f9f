#pragma once

#include <string>
#include <vector>

#include "ivp/algebraic.hpp"
#include "ivp/dedekind.hpp"
#include "ivp/ratpoly.hpp"

namespace ivp {

/// A basis element f/d of a ring of integral-valued polynomials: f monic,
/// nonconstant, integer coefficients; d >= 1. d = 1 generators are inert.
struct IvpGenerator {
    RatPoly f;
    Int d;
};

/// Psi(p, n) = (X^{p^n} - X)(X^{p^{n-1}} - X) ... (X^p - X), exact over Z.
RatPoly psi(int64_t p, int n);

/**
 * Brute-force check that psi(p, n) mod p equals the monic lcm of every
 * monic polynomial of degree <= n over F_p (enumeration bound p^n <= 81).
 */
bool psi_lcm_oracle(int64_t p, int n);

/**
 * Whether h(alpha)/d is an algebraic integer: the characteristic polynomial
 * of the value, rescaled by 1/d, must have integer coefficients (it is monic,
 * so integrality of the value is exactly integrality of that polynomial).
 */
bool is_integral_value(const AlgebraicElement& e, const Int& d);

/// is_integral_value applied to Psi_{p,n}(element)/p, with the composite
/// expression reduced mod the minimal polynomial first.
bool psi_membership_check(int64_t p, int n, const AlgebraicElement& e);

/**
 * Ramification/residue-degree pairs (e_i, f_i) over p read from the
 * factorization of the minimal polynomial mod p. Only valid when p does not
 * divide the index, so the Dedekind test gates the computation; otherwise
 * pairs stay empty with reason "index obstruction".
 */
struct SplittingReport {
    RatPoly min_poly;
    int64_t prime = 0;
    bool index_ok = false;
    std::vector<std::pair<int, int>> pairs;  // (e, f), in deterministic factor order
    std::string reason;
};

SplittingReport kummer_splitting(const RatPoly& f, int64_t p);

/**
 * The double-boundedness generator ((X^q - X)^{e0}, p) with q = p^{f0!}.
 * f0 <= 4 and q <= 729 enforced so downstream membership tests stay at desk
 * scale.
 */
IvpGenerator ef_bound_generator(int64_t p, int e0, int f0);

/**
 * The set of primes q at which a polynomial f of degree below the field
 * degree of e is forced to be q-integral once f is integral-valued at e:
 * every q not dividing the index. Encoded co-finitely from an IndexReport;
 * primes dividing an unfactored cofactor stay unclassified.
 */
struct PrimeConstraint {
    std::vector<Int> excluded;  // primes proven to divide the index
    Int uncertain_modulus = 1;  // primes dividing this are unclassified
    bool f_integral = false;    // vacuous case: f already in Z[X]

    /// q is certainly in the forced-integral set.
    bool certainly_contains(const Int& q) const;
    std::string describe() const;
};

PrimeConstraint lemma43_constraint(const RatPoly& f, const AlgebraicElement& e,
                                   const IndexReport& report);

}  // namespace ivp

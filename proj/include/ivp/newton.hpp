#pragma once

#include <vector>

#include "ivp/algebraic.hpp"
#include "ivp/ratpoly.hpp"
#include "ivp/valuation.hpp"

namespace ivp {

/**
 * One edge of a Newton polygon, stated in root terms: `slope` is the common
 * p-adic valuation of the roots the edge accounts for (the negated geometric
 * slope of the lower hull) and `length` their count.
 */
struct NewtonSegment {
    Rat slope;
    int length;
};

/**
 * Newton polygon of f at p. Roots equal to zero are stripped before hull
 * construction and counted in `zero_roots`; segments are listed in strictly
 * increasing slope order and their lengths sum to deg(f) - zero_roots.
 */
struct NewtonPolygon {
    Int prime;
    int zero_roots = 0;
    std::vector<NewtonSegment> segments;
};

/// Multiset of valuations as (value, multiplicity), sorted ascending with
/// infinity last.
using ValMultiset = std::vector<std::pair<Val, int>>;

/// Lower convex hull of (i, v_p(a_i)). Rejects coefficients with p in the
/// denominator; callers normalize first. Throws when p is not prime.
NewtonPolygon newton_polygon(const RatPoly& f, const Int& p);

/// Valuations of all roots of f, zero roots reported as infinity.
ValMultiset root_valuations(const RatPoly& f, const Int& p);

/// v_p of h(alpha) over the whole conjugate multiset of alpha, i.e. the root
/// valuations of the characteristic polynomial of the element.
ValMultiset element_valuations(const AlgebraicElement& e, const Int& p);

/**
 * v_p(beta - alpha) over all deg(f)*deg(g) root pairs (alpha of f, beta of
 * g); coincident pairs appear as infinity. f and g must be monic integral.
 * The full multiset is returned, no deduplication.
 */
ValMultiset difference_valuations(const RatPoly& f, const RatPoly& g, const Int& p);

/// Monic polynomial whose roots are the pairwise differences beta_j - alpha_i
/// (the resultant Res_Y(f(Y), g(X+Y)) for monic inputs), via power sums.
RatPoly difference_poly(const RatPoly& f, const RatPoly& g);

/// Total count including multiplicities.
int multiset_size(const ValMultiset& m);

}  // namespace ivp

#pragma once

#include "ivp/ratpoly.hpp"

namespace ivp {

/// m-th cyclotomic polynomial by iterated exact division of X^m - 1 by the
/// lower-index cyclotomics (memoized; budget m <= 256).
RatPoly cyclotomic(unsigned m);

unsigned euler_phi(unsigned m);

}  // namespace ivp

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ivp/rat.hpp"
#include "ivp/ratpoly.hpp"

namespace ivp {

inline constexpr uint64_t kDefaultFactorSeed = 0x5eed1df00d5ULL;

/// Process-wide seed for the randomized equal-degree splitting. Fixed by
/// default so factor order is reproducible; the CLI --seed flag overrides it
/// once at startup.
void set_default_factor_seed(uint64_t seed);
uint64_t default_factor_seed();

/**
 * Dense polynomial over the prime field F_p, coefficients reduced into
 * [0, p), ascending order. The modulus is capped at 2^31 so products fit in
 * __int128; every prime this artifact meets is tiny.
 */
class FpPoly {
public:
    explicit FpPoly(int64_t p);
    FpPoly(int64_t p, std::vector<int64_t> coeffs);

    /// Reduction of a rational polynomial mod p. Throws when a coefficient
    /// denominator is divisible by p.
    static FpPoly from_ratpoly(const RatPoly& f, int64_t p);
    static FpPoly x(int64_t p);

    int64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    int64_t lc() const;
    const std::vector<int64_t>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const FpPoly& o) const { return !(*this == o); }
    /// Total order used for deterministic factor lists: by degree, then by
    /// the coefficient tuple read from the constant term up.
    bool operator<(const FpPoly& o) const;

    FpPoly monic() const;
    FpPoly derivative() const;
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& div) const;
    FpPoly mod(const FpPoly& m) const { return divmod(m).second; }
    FpPoly exact_div(const FpPoly& div) const;
    bool divides(const FpPoly& multiple) const;
    int64_t eval(int64_t x) const;

    /// (this^e) mod m, e arbitrary-precision.
    FpPoly pow_mod(const Int& e, const FpPoly& m) const;

    /// Monic integer lift with coefficients in [0, p).
    RatPoly lift() const;

    std::string str() const;

private:
    void normalize();
    int64_t p_ = 0;
    std::vector<int64_t> c_;
};

FpPoly fp_gcd(FpPoly a, FpPoly b);
FpPoly fp_lcm(const FpPoly& a, const FpPoly& b);

/**
 * Complete factorization of f mod p into monic irreducibles with
 * multiplicities (squarefree split, then distinct-degree, then equal-degree
 * Cantor-Zassenhaus). The randomized splitting is driven by a fixed seed so
 * factor order is reproducible; the result is sorted. Throws when p is not
 * prime or f vanishes mod p.
 */
std::vector<std::pair<FpPoly, int>> factor_mod_p(const RatPoly& f, int64_t p, uint64_t seed);
std::vector<std::pair<FpPoly, int>> factor_mod_p(const RatPoly& f, int64_t p);

/// Irreducibility over F_p (Rabin's criterion via distinct-degree steps).
bool fp_is_irreducible(const FpPoly& f);

}  // namespace ivp

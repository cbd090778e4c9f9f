#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ivp/rat.hpp"

namespace ivp {

/**
 * Dense univariate polynomial over Q with exact coefficients, stored in
 * ascending order. The zero polynomial has an empty coefficient vector and
 * degree -1; otherwise the leading coefficient is nonzero. Immutable in
 * spirit: every operation returns a fresh value.
 */
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);

    static RatPoly constant(const Rat& c);
    static RatPoly x();
    static RatPoly monomial(const Rat& c, size_t k);
    static RatPoly from_ints(const std::vector<long>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Coefficient of X^i (zero beyond the degree).
    const Rat& coeff(size_t i) const;
    const Rat& lc() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_monic() const;
    /// True when every coefficient is an integer.
    bool is_integral() const;

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

    RatPoly derivative() const;
    Rat eval(const Rat& x) const;
    /// f(X + a).
    RatPoly shifted(const Rat& a) const;
    RatPoly pow(unsigned e) const;

    /// Euclidean division over Q: *this = q*div + r with deg r < deg div.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& div) const;
    RatPoly mod(const RatPoly& div) const { return divmod(div).second; }
    /// Exact quotient; throws if the remainder is nonzero.
    RatPoly exact_div(const RatPoly& div) const;
    bool divides(const RatPoly& multiple) const;

    /// this(g) mod m, via Horner in Q[X]/(m).
    RatPoly compose_mod(const RatPoly& g, const RatPoly& m) const;

    /// Monic rescale (nonzero input).
    RatPoly monic() const;

    /// lcm of coefficient denominators.
    Int denominator_lcm() const;
    /// For a nonzero integral polynomial: content (gcd of coefficients, sign
    /// of the leading coefficient) and primitive part.
    std::pair<Int, RatPoly> primitive() const;

    std::string str() const;  // debug-friendly "x^2 - 2" form

private:
    void normalize();
    std::vector<Rat> c_;
};

/// Monic gcd over Q, computed with a primitive pseudo-remainder sequence.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

/**
 * Resultant with the convention Res(f,g) = lc(f)^{deg g} * prod g(alpha_i)
 * over the roots alpha_i of f, evaluated exactly by fraction-free Gaussian
 * elimination (Bareiss) on the Sylvester matrix. Throws on zero input.
 */
Rat resultant(const RatPoly& f, const RatPoly& g);

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f), deg f >= 1.
Rat discriminant(const RatPoly& f);

/**
 * Power sums p_1..p_K of the roots of a monic polynomial, by Newton's
 * identities (exact, works for K beyond the degree).
 */
std::vector<Rat> power_sums(const RatPoly& monic_f, size_t K);

/// Monic degree-n polynomial whose root power sums are p[0..n-1] = p_1..p_n.
RatPoly poly_from_power_sums(const std::vector<Rat>& p, size_t n);

}  // namespace ivp

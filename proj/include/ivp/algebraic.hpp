#pragma once

#include <optional>
#include <string>

#include "ivp/ratpoly.hpp"

namespace ivp {

/**
 * How (or whether) irreducibility over Q of a minimal polynomial was
 * certified. "Unchecked" elements are legal; the flag propagates into
 * reports so no downstream verdict silently leans on an unproven minimal
 * polynomial.
 */
struct IrredCertificate {
    enum class Kind {
        Unchecked,
        Linear,             // degree 1
        RationalRootFree,   // degree 2-3, no rational root
        Perron,             // dominant second coefficient
        Eisenstein,         // Eisenstein at a recorded prime
        NewtonSlope,        // single Newton segment, slope denominator = degree
        ModularSubsets,     // degree 4: no factor lifts from a good prime
        Cyclotomic,         // classical irreducibility of cyclotomic polynomials
    };
    Kind kind = Kind::Unchecked;
    std::string note;

    bool certified() const { return kind != Kind::Unchecked; }
    static const char* kind_name(Kind k);
};

enum class IrredOutcome { Irreducible, Reducible, Unknown };

struct IrredCheck {
    IrredOutcome outcome;
    IrredCertificate cert;  // meaningful when outcome == Irreducible
};

/// Perron's sufficient criterion: |a_{n-1}| > 1 + |a_{n-2}| + ... + |a_0| for
/// a monic integer polynomial with nonzero constant term, degree >= 2.
/// False only means "inconclusive".
bool perron_irreducible(const RatPoly& f);

/**
 * Tries to settle irreducibility over Q of a monic integer polynomial:
 * rational-root scan, Perron, Eisenstein, Newton-slope certificate, and (for
 * degree 4) exhaustive subset recombination of the factorization modulo one
 * good prime. Degrees >= 5 without a positive certificate come back Unknown.
 */
IrredCheck certify_irreducible(const RatPoly& f);

/**
 * An algebraic number h(alpha) where alpha is a root of a monic integer
 * polynomial irreducible over Q (or flagged unchecked). All operations treat
 * the full conjugate multiset {h(alpha_i)}; no single embedding is pinned.
 */
class AlgebraicElement {
public:
    /// expr defaults to X (the element alpha itself). When no certificate is
    /// supplied one is computed; construction fails on a certified-reducible
    /// minimal polynomial.
    explicit AlgebraicElement(RatPoly min_poly, RatPoly expr = RatPoly::x(),
                              std::optional<IrredCertificate> cert = std::nullopt);

    static AlgebraicElement from_integer(const Int& n);

    const RatPoly& min_poly() const { return min_; }
    const RatPoly& expr() const { return expr_; }
    const IrredCertificate& certificate() const { return cert_; }
    int field_degree() const { return min_.degree(); }

    /// Same field, new expression (reduced mod the minimal polynomial).
    AlgebraicElement with_expr(const RatPoly& e) const;

    std::string describe() const;

private:
    RatPoly min_;
    RatPoly expr_;
    IrredCertificate cert_;
};

/**
 * Monic polynomial of degree n = deg(min) whose roots are h(alpha_i) over
 * all conjugates alpha_i, i.e. Res_Y(min(Y), X - h(Y)) normalized monic.
 * Computed exactly through traces of h(alpha)^k and Newton's identities.
 */
RatPoly char_poly_of_element(const AlgebraicElement& e);

}  // namespace ivp

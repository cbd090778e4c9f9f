#include "ivp/closure.hpp"

namespace ivp {

bool in_Sfd(const AlgebraicElement& e, const IvpGenerator& gen) {
    if (gen.d < 1) throw std::domain_error("in_Sfd: generator denominator must be >= 1");
    if (!gen.f.is_monic() || !gen.f.is_integral() || gen.f.degree() < 1)
        throw std::domain_error("in_Sfd: generator polynomial must be monic integral nonconstant");
    if (gen.d == 1) return true;
    RatPoly value = gen.f.compose_mod(e.expr(), e.min_poly());
    return is_integral_value(e.with_expr(value), gen.d);
}

bool closure_member(const std::vector<IvpGenerator>& gens, const AlgebraicElement& e) {
    for (const auto& g : gens) {
        if (g.d < 2) continue;
        if (!in_Sfd(e, g)) return false;
    }
    return true;
}

std::optional<ZClosureWitness> z_closure_witness(const AlgebraicElement& e, int k_max) {
    if (k_max < 1) throw std::domain_error("z_closure_witness: k_max must be >= 1");
    const int n = e.field_degree();
    if (static_cast<long>(k_max) * n > 64)
        throw std::domain_error("z_closure_witness: k_max * degree budget (64) exceeded");

    // falling factorial evaluated at the element, extended one step per k
    RatPoly w = e.expr();  // k = 1: X
    Int kfact = 1;
    for (int k = 1; k <= k_max; ++k) {
        if (k > 1) {
            RatPoly step = e.expr() - RatPoly::constant(Rat(static_cast<long>(k - 1)));
            w = (w * step).mod(e.min_poly());
            kfact *= k;
        }
        AlgebraicElement value = e.with_expr(w);
        if (!is_integral_value(value, kfact)) {
            // evidence: characteristic polynomial of (falling factorial)/k!
            RatPoly c = char_poly_of_element(value);
            std::vector<Rat> scaled(static_cast<size_t>(c.degree()) + 1);
            Int dk = 1;
            for (int i = c.degree(); i >= 0; --i) {
                scaled[static_cast<size_t>(i)] = c.coeff(static_cast<size_t>(i)) / Rat(dk);
                dk *= kfact;
            }
            return ZClosureWitness{k, RatPoly(std::move(scaled))};
        }
    }
    return std::nullopt;
}

}  // namespace ivp

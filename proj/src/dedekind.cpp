#include "ivp/dedekind.hpp"

namespace ivp {

const char* tri_state_name(TriState t) {
    switch (t) {
        case TriState::Yes: return "yes";
        case TriState::No: return "no";
        case TriState::Unknown: return "unknown";
    }
    return "?";
}

DedekindResult dedekind_divides_index(const RatPoly& f, int64_t p) {
    if (!f.is_monic() || !f.is_integral())
        throw std::domain_error("dedekind_divides_index: f must be monic integral");
    if (poly_gcd(f, f.derivative()).degree() != 0)
        throw std::domain_error("dedekind_divides_index: f must be squarefree over Q");

    auto factors = factor_mod_p(f, p);

    // product of canonical monic lifts over Z
    RatPoly lifted = RatPoly::constant(1);
    for (const auto& [pi, e] : factors) lifted = lifted * pi.lift().pow(static_cast<unsigned>(e));

    RatPoly num = f - lifted;  // divisible by p coefficientwise
    RatPoly F = num * Rat(1, static_cast<unsigned long>(p));
    if (!F.is_integral())
        throw std::logic_error("dedekind_divides_index: lift mismatch");  // cannot happen
    FpPoly Fbar = F.is_zero() ? FpPoly(p) : FpPoly::from_ratpoly(F, p);

    for (const auto& [pi, e] : factors) {
        if (e < 2) continue;
        bool hit = Fbar.is_zero() || pi.divides(Fbar);
        if (hit) return {true, pi};
    }
    return {false, std::nullopt};
}

IndexReport index_one_certificate(const RatPoly& f, const FactorBudget& budget) {
    IndexReport rep;
    rep.min_poly = f;
    if (!f.is_monic() || !f.is_integral())
        throw std::domain_error("index_one_certificate: f must be monic integral");
    Rat d = discriminant(f);
    if (d == 0) throw std::domain_error("index_one_certificate: discriminant is zero (repeated roots)");
    rep.disc = Int(d.get_num());

    FactoredInteger fac = factor_integer(rep.disc, budget);
    rep.unfactored_part = fac.unfactored;

    bool any_divides = false;
    bool any_untestable = false;
    for (const auto& [p, e] : fac.primes) {
        if (e < 2) continue;  // p | index forces p^2 | disc
        if (!p.fits_slong_p() || p.get_si() >= (int64_t(1) << 31)) {
            any_untestable = true;
            rep.note = "candidate prime " + to_string(p) + " exceeds the modular test range";
            continue;
        }
        DedekindResult r = dedekind_divides_index(f, p.get_si());
        rep.tested.push_back({p, r.divides, r.witness});
        if (r.divides) any_divides = true;
    }

    if (any_divides) {
        rep.index_is_one = TriState::No;
    } else if (fac.complete() && !any_untestable) {
        rep.index_is_one = TriState::Yes;
    } else {
        rep.index_is_one = TriState::Unknown;
        if (!fac.complete())
            rep.note = "unfactored cofactor " + to_string(fac.unfactored) +
                       " could hide a squared prime";
    }
    return rep;
}

}  // namespace ivp

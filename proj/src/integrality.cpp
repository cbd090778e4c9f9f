#include "ivp/integrality.hpp"

#include <sstream>

#include "ivp/fppoly.hpp"

namespace ivp {

RatPoly psi(int64_t p, int n) {
    if (n < 1) throw std::domain_error("psi: n must be >= 1");
    if (p < 2) throw std::domain_error("psi: p must be prime");
    RatPoly out = RatPoly::constant(1);
    Int pk = 1;
    for (int k = 1; k <= n; ++k) {
        pk *= p;
        if (!pk.fits_ulong_p()) throw std::domain_error("psi: p^n out of range");
        RatPoly term = RatPoly::monomial(1, static_cast<size_t>(pk.get_ui())) - RatPoly::x();
        out = out * term;
    }
    return out;
}

bool psi_lcm_oracle(int64_t p, int n) {
    Int pn = pow_int(Int(static_cast<long>(p)), static_cast<unsigned long>(n));
    if (n < 1 || pn > 81) throw std::domain_error("psi_lcm_oracle: enumeration bound p^n <= 81");
    FpPoly lcm(p, {1});
    // every monic polynomial of degree 1..n
    for (int d = 1; d <= n; ++d) {
        Int count = pow_int(Int(static_cast<long>(p)), static_cast<unsigned long>(d));
        for (Int idx = 0; idx < count; ++idx) {
            std::vector<int64_t> c(static_cast<size_t>(d) + 1, 0);
            Int rest = idx;
            for (int i = 0; i < d; ++i) {
                c[static_cast<size_t>(i)] = Int(rest % p).get_si();
                rest /= p;
            }
            c[static_cast<size_t>(d)] = 1;
            lcm = fp_lcm(lcm, FpPoly(p, std::move(c)));
        }
    }
    FpPoly psibar = FpPoly::from_ratpoly(psi(p, n), p);
    return lcm == psibar.monic();
}

bool is_integral_value(const AlgebraicElement& e, const Int& d) {
    if (d == 0) throw std::domain_error("is_integral_value: d must be nonzero");
    RatPoly c = char_poly_of_element(e);
    const int n = c.degree();
    // char poly of value/d has X^i coefficient c_i / d^{n-i}
    Int dk = 1;
    for (int i = n - 1; i >= 0; --i) {
        dk *= d;
        Rat scaled = c.coeff(static_cast<size_t>(i)) / Rat(dk);
        if (!is_integer(scaled)) return false;
    }
    return true;
}

bool psi_membership_check(int64_t p, int n, const AlgebraicElement& e) {
    RatPoly composed = psi(p, n).compose_mod(e.expr(), e.min_poly());
    return is_integral_value(e.with_expr(composed), Int(static_cast<long>(p)));
}

SplittingReport kummer_splitting(const RatPoly& f, int64_t p) {
    SplittingReport rep;
    rep.min_poly = f;
    rep.prime = p;
    DedekindResult ded = dedekind_divides_index(f, p);
    if (ded.divides) {
        rep.index_ok = false;
        rep.reason = "index obstruction: " + std::to_string(p) + " divides the index";
        return rep;
    }
    rep.index_ok = true;
    for (const auto& [pi, e] : factor_mod_p(f, p))
        rep.pairs.emplace_back(e, pi.degree());
    return rep;
}

IvpGenerator ef_bound_generator(int64_t p, int e0, int f0) {
    if (e0 < 1 || f0 < 1) throw std::domain_error("ef_bound_generator: e0, f0 must be >= 1");
    if (f0 > 4) throw std::domain_error("ef_bound_generator: f0 <= 4 enforced");
    unsigned long fact = 1;
    for (int i = 2; i <= f0; ++i) fact *= static_cast<unsigned long>(i);
    Int q = pow_int(Int(static_cast<long>(p)), fact);
    if (q > 729) throw std::domain_error("ef_bound_generator: q = p^{f0!} exceeds bound 729");
    RatPoly base = RatPoly::monomial(1, static_cast<size_t>(q.get_ui())) - RatPoly::x();
    return {base.pow(static_cast<unsigned>(e0)), Int(static_cast<long>(p))};
}

bool PrimeConstraint::certainly_contains(const Int& q) const {
    for (const Int& e : excluded)
        if (e == q) return false;
    if (uncertain_modulus != 1 && uncertain_modulus % q == 0) return false;
    return true;
}

std::string PrimeConstraint::describe() const {
    std::ostringstream os;
    if (excluded.empty() && uncertain_modulus == 1) {
        os << "all primes";
    } else {
        os << "all primes except {";
        for (size_t i = 0; i < excluded.size(); ++i)
            os << (i ? ", " : "") << to_string(excluded[i]);
        os << "}";
        if (uncertain_modulus != 1)
            os << ", primes dividing " << to_string(uncertain_modulus) << " unclassified";
    }
    if (f_integral) os << " (vacuous: f already integral)";
    return os.str();
}

PrimeConstraint lemma43_constraint(const RatPoly& f, const AlgebraicElement& e,
                                   const IndexReport& report) {
    if (f.degree() >= e.field_degree())
        throw std::domain_error("lemma43_constraint: deg f must be below the field degree");
    PrimeConstraint out;
    out.f_integral = f.is_integral();
    for (const auto& t : report.tested)
        if (t.divides) out.excluded.push_back(t.p);
    out.uncertain_modulus = report.unfactored_part;
    return out;
}

}  // namespace ivp

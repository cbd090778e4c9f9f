#include "ivp/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "ivp/fppoly.hpp"

namespace ivp {

const char* IrredCertificate::kind_name(Kind k) {
    switch (k) {
        case Kind::Unchecked: return "unchecked";
        case Kind::Linear: return "linear";
        case Kind::RationalRootFree: return "rational-root-free";
        case Kind::Perron: return "perron";
        case Kind::Eisenstein: return "eisenstein";
        case Kind::NewtonSlope: return "newton-slope";
        case Kind::ModularSubsets: return "modular-subsets";
        case Kind::Cyclotomic: return "cyclotomic";
    }
    return "?";
}

bool perron_irreducible(const RatPoly& f) {
    if (!f.is_monic() || !f.is_integral())
        throw std::domain_error("perron_irreducible: polynomial must be monic integral");
    const int n = f.degree();
    if (n < 2 || f.coeff(0) == 0)
        throw std::domain_error("perron_irreducible: need degree >= 2 and f(0) != 0");
    Rat tail = 1;
    for (int i = 0; i + 2 <= n; ++i) tail += abs(f.coeff(static_cast<size_t>(i)));
    return abs(f.coeff(static_cast<size_t>(n - 1))) > tail;
}

namespace {

// Divisors of |n| up to a cap on the number of divisors; nullopt when the
// factorization-free enumeration would be too wide.
std::optional<std::vector<Int>> small_divisors(const Int& n, size_t cap = 4096) {
    Int a = abs(n);
    std::vector<Int> divs;
    Int d = 1;
    // trial enumeration up to sqrt; fine for desk-scale constants
    Int root = sqrt(a);
    for (d = 1; d <= root; ++d) {
        if (a % d == 0) {
            divs.push_back(d);
            Int q = a / d;
            if (q != d) divs.push_back(q);
            if (divs.size() > cap) return std::nullopt;
        }
        if (d > 2000000) return std::nullopt;  // constant too large to scan
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

bool has_rational_root(const RatPoly& f, bool* decided) {
    *decided = true;
    if (f.coeff(0) == 0) return true;  // root 0
    auto divs = small_divisors(Int(f.coeff(0).get_num()));
    if (!divs) {
        *decided = false;
        return false;
    }
    for (const Int& d : *divs) {
        if (f.eval(Rat(d)) == 0) return true;
        if (f.eval(Rat(-d)) == 0) return true;
    }
    return false;
}

std::optional<IrredCertificate> try_eisenstein(const RatPoly& f) {
    // candidate primes: prime divisors of the constant term (cheap scan)
    Int a0 = abs(Int(f.coeff(0).get_num()));
    if (a0 == 0) return std::nullopt;
    Int rest = a0;
    std::vector<Int> primes;
    for (long t = 2; t < 100000 && rest > 1; ++t) {
        if (rest % t == 0) {
            primes.emplace_back(t);
            while (rest % t == 0) rest /= t;
        }
    }
    if (rest > 1 && is_probable_prime(rest)) primes.push_back(rest);
    for (const Int& p : primes) {
        bool ok = true;
        for (int i = 0; i < f.degree() && ok; ++i)
            if (Int(f.coeff(static_cast<size_t>(i)).get_num()) % p != 0) ok = false;
        if (!ok) continue;
        if (Int(f.coeff(0).get_num()) % (p * p) == 0) continue;
        IrredCertificate c;
        c.kind = IrredCertificate::Kind::Eisenstein;
        c.note = "eisenstein at " + to_string(p);
        return c;
    }
    return std::nullopt;
}

std::optional<IrredCertificate> try_newton_slope(const RatPoly& f) {
    // A single Newton segment whose slope a/b (lowest terms) has b = deg f
    // forces every factor degree to be a multiple of deg f.
    Int a0 = abs(Int(f.coeff(0).get_num()));
    if (a0 <= 1) return std::nullopt;
    Int rest = a0;
    std::vector<Int> primes;
    for (long t = 2; t < 100000 && rest > 1; ++t) {
        if (rest % t == 0) {
            primes.emplace_back(t);
            while (rest % t == 0) rest /= t;
        }
    }
    if (rest > 1 && is_probable_prime(rest)) primes.push_back(rest);
    const long n = f.degree();
    for (const Int& p : primes) {
        long m = val_p(Rat(f.coeff(0)), p);
        if (m <= 0) continue;
        Int g;
        Int mz(m), nz(n);
        mpz_gcd(g.get_mpz_t(), mz.get_mpz_t(), nz.get_mpz_t());
        if (g != 1) continue;
        // all interior points must lie on or above the segment from (0, m) to (n, 0):
        // v_p(a_i) * n >= m * (n - i)
        bool above = true;
        for (int i = 1; i < n && above; ++i) {
            const Rat& c = f.coeff(static_cast<size_t>(i));
            if (c == 0) continue;
            long v = val_p(c, p);
            if (v * n < m * (n - i)) above = false;
        }
        if (!above) continue;
        IrredCertificate cert;
        cert.kind = IrredCertificate::Kind::NewtonSlope;
        cert.note = "single segment of slope " + to_string(Int(m)) + "/" + std::to_string(n) +
                    " at " + to_string(p);
        return cert;
    }
    return std::nullopt;
}

// Degree-4 decision: no linear factor (checked by caller) and no monic
// quadratic factor. Candidate quadratics are recombined from the
// factorization modulo one prime large enough to cover the coefficient
// bounds of a true factor.
IrredOutcome quartic_no_quadratic_factor(const RatPoly& f, uint64_t seed) {
    // Cauchy bound on roots: 1 + max |a_i|
    Rat maxc = 0;
    for (int i = 0; i < 4; ++i) {
        Rat a = abs(f.coeff(static_cast<size_t>(i)));
        if (a > maxc) maxc = a;
    }
    Int rbound = Int(maxc.get_num()) / Int(maxc.get_den()) + 1;
    Int cbound = rbound * rbound + 1;
    if (cbound < 2 * rbound) cbound = 2 * rbound;
    Int q = 2 * cbound + 1;
    int64_t qq = 0;
    for (int tries = 0; tries < 200; ++tries) {
        mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
        FpPoly fb = FpPoly::from_ratpoly(f, q.get_si());
        if (fb.degree() == 4 && fp_gcd(fb, fb.derivative()).degree() == 0) {
            qq = q.get_si();
            break;
        }
    }
    if (qq == 0) return IrredOutcome::Unknown;
    auto factors = factor_mod_p(f, qq, seed);
    std::vector<FpPoly> irr;
    for (auto& [poly, e] : factors)
        for (int i = 0; i < e; ++i) irr.push_back(poly);
    const size_t k = irr.size();
    for (size_t mask = 1; mask + 1 < (size_t(1) << k); ++mask) {
        int deg = 0;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t(1) << i)) deg += irr[i].degree();
        if (deg != 2) continue;
        FpPoly cand(qq, {1});
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t(1) << i)) cand = cand * irr[i];
        // symmetric lift, then trial division over Q
        std::vector<Rat> lifted(3);
        for (size_t i = 0; i < 3; ++i) {
            int64_t c = cand.coeff(i);
            if (c > qq / 2) c -= qq;
            lifted[i] = Rat(static_cast<long>(c));
        }
        RatPoly g{std::vector<Rat>(lifted)};
        if (g.degree() == 2 && g.divides(f)) return IrredOutcome::Reducible;
    }
    return IrredOutcome::Irreducible;
}

}  // namespace

IrredCheck certify_irreducible(const RatPoly& f) {
    if (!f.is_monic() || !f.is_integral())
        throw std::domain_error("certify_irreducible: need a monic integer polynomial");
    const int n = f.degree();
    IrredCheck out{IrredOutcome::Unknown, {}};
    if (n < 1) {
        out.outcome = IrredOutcome::Reducible;
        return out;
    }
    if (n == 1) {
        out.outcome = IrredOutcome::Irreducible;
        out.cert.kind = IrredCertificate::Kind::Linear;
        return out;
    }
    if (f.coeff(0) == 0) {
        out.outcome = IrredOutcome::Reducible;
        return out;
    }
    if (poly_gcd(f, f.derivative()).degree() > 0) {
        out.outcome = IrredOutcome::Reducible;  // repeated factor
        return out;
    }
    if (perron_irreducible(f)) {
        out.outcome = IrredOutcome::Irreducible;
        out.cert.kind = IrredCertificate::Kind::Perron;
        return out;
    }
    if (auto c = try_eisenstein(f)) {
        out.outcome = IrredOutcome::Irreducible;
        out.cert = *c;
        return out;
    }
    if (auto c = try_newton_slope(f)) {
        out.outcome = IrredOutcome::Irreducible;
        out.cert = *c;
        return out;
    }
    bool decided = false;
    bool root = has_rational_root(f, &decided);
    if (decided && root) {
        out.outcome = IrredOutcome::Reducible;
        return out;
    }
    if (!decided) return out;  // Unknown
    if (n <= 3) {
        out.outcome = IrredOutcome::Irreducible;
        out.cert.kind = IrredCertificate::Kind::RationalRootFree;
        return out;
    }
    if (n == 4) {
        out.outcome = quartic_no_quadratic_factor(f, kDefaultFactorSeed);
        if (out.outcome == IrredOutcome::Irreducible)
            out.cert.kind = IrredCertificate::Kind::ModularSubsets;
        return out;
    }
    return out;  // degree >= 5, nothing conclusive
}

AlgebraicElement::AlgebraicElement(RatPoly min_poly, RatPoly expr,
                                   std::optional<IrredCertificate> cert)
    : min_(std::move(min_poly)) {
    if (!min_.is_monic() || !min_.is_integral() || min_.degree() < 1)
        throw std::domain_error("AlgebraicElement: minimal polynomial must be monic integral, degree >= 1");
    if (cert) {
        cert_ = *cert;
    } else {
        IrredCheck chk = certify_irreducible(min_);
        if (chk.outcome == IrredOutcome::Reducible)
            throw std::domain_error("AlgebraicElement: minimal polynomial is reducible over Q");
        cert_ = chk.cert;  // Unchecked when outcome is Unknown
    }
    expr_ = expr.mod(min_);
}

AlgebraicElement AlgebraicElement::from_integer(const Int& n) {
    RatPoly min({Rat(Int(-n)), Rat(1)});
    IrredCertificate c;
    c.kind = IrredCertificate::Kind::Linear;
    return AlgebraicElement(min, RatPoly::x(), c);
}

AlgebraicElement AlgebraicElement::with_expr(const RatPoly& e) const {
    return AlgebraicElement(min_, e, cert_);
}

std::string AlgebraicElement::describe() const {
    std::ostringstream os;
    os << "(" << expr_.str() << ") at root of " << min_.str() << " ["
       << IrredCertificate::kind_name(cert_.kind) << "]";
    return os.str();
}

RatPoly char_poly_of_element(const AlgebraicElement& e) {
    const RatPoly& f = e.min_poly();
    const size_t n = static_cast<size_t>(f.degree());
    const RatPoly h = e.expr();  // already reduced mod f
    // traces of alpha^i
    std::vector<Rat> base = power_sums(f, n == 0 ? 0 : n - 1);
    auto trace = [&](const RatPoly& b) {
        Rat t = b.coeff(0) * Rat(static_cast<long>(n));
        for (int i = 1; i <= b.degree(); ++i)
            t += b.coeff(static_cast<size_t>(i)) * base[static_cast<size_t>(i - 1)];
        return t;
    };
    std::vector<Rat> t(n);
    RatPoly g = h;
    for (size_t k = 0; k < n; ++k) {
        t[k] = trace(g);
        if (k + 1 < n) g = (g * h).mod(f);
    }
    return poly_from_power_sums(t, n);
}

}  // namespace ivp

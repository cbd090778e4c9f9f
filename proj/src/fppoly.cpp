#include "ivp/fppoly.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

namespace ivp {

namespace {

int64_t mod_reduce(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

int64_t mul_mod(int64_t a, int64_t b, int64_t p) {
    return static_cast<int64_t>((static_cast<__int128>(a) * b) % p);
}

int64_t pow_mod_scalar(int64_t a, int64_t e, int64_t p) {
    int64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

int64_t inv_mod(int64_t a, int64_t p) {
    a = mod_reduce(a, p);
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    return pow_mod_scalar(a, p - 2, p);
}

void check_modulus(int64_t p) {
    if (p < 2 || p > (int64_t(1) << 31))
        throw std::domain_error("FpPoly: modulus out of supported range");
    Int pz(static_cast<long>(p));
    if (!is_probable_prime(pz)) throw std::domain_error("FpPoly: modulus is not prime");
}

struct SplitRng {
    uint64_t s;
    explicit SplitRng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

}  // namespace

FpPoly::FpPoly(int64_t p) : p_(p) { check_modulus(p); }

FpPoly::FpPoly(int64_t p, std::vector<int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    check_modulus(p);
    for (auto& c : c_) c = mod_reduce(c, p_);
    normalize();
}

void FpPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::from_ratpoly(const RatPoly& f, int64_t p) {
    check_modulus(p);
    Int pz(static_cast<long>(p));
    std::vector<int64_t> v;
    v.reserve(static_cast<size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) {
        const Rat& c = f.coeff(static_cast<size_t>(i));
        Int num = c.get_num(), den = c.get_den();
        Int dmod = den % pz;
        if (dmod == 0)
            throw std::domain_error("FpPoly: coefficient denominator divisible by p");
        Int nmod = num % pz;
        int64_t n = mod_reduce(nmod.get_si(), p);
        int64_t d = mod_reduce(dmod.get_si(), p);
        v.push_back(mul_mod(n, inv_mod(d, p), p));
    }
    return FpPoly(p, std::move(v));
}

FpPoly FpPoly::x(int64_t p) { return FpPoly(p, {0, 1}); }

int64_t FpPoly::lc() const {
    if (c_.empty()) throw std::domain_error("lc of zero polynomial");
    return c_.back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    std::vector<int64_t> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = mod_reduce(coeff(i) + o.coeff(i), p_);
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    std::vector<int64_t> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = mod_reduce(coeff(i) - o.coeff(i), p_);
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return FpPoly(p_);
    std::vector<int64_t> v(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] = mod_reduce(v[i + j] + mul_mod(c_[i], o.c_[j], p_), p_);
    }
    return FpPoly(p_, std::move(v));
}

bool FpPoly::operator<(const FpPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

FpPoly FpPoly::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    if (is_monic()) return *this;
    int64_t inv = inv_mod(lc(), p_);
    std::vector<int64_t> v(c_);
    for (auto& c : v) c = mul_mod(c, inv, p_);
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::derivative() const {
    if (c_.size() <= 1) return FpPoly(p_);
    std::vector<int64_t> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = mul_mod(c_[i], static_cast<int64_t>(i % static_cast<size_t>(p_)), p_);
    return FpPoly(p_, std::move(v));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& div) const {
    if (div.is_zero()) throw std::domain_error("division by zero polynomial");
    if (degree() < div.degree()) return {FpPoly(p_), *this};
    std::vector<int64_t> rem(c_);
    std::vector<int64_t> quo(static_cast<size_t>(degree() - div.degree() + 1), 0);
    int64_t dinv = inv_mod(div.lc(), p_);
    for (int k = degree() - div.degree(); k >= 0; --k) {
        int64_t q = mul_mod(rem[static_cast<size_t>(k + div.degree())], dinv, p_);
        quo[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (int i = 0; i <= div.degree(); ++i) {
            size_t idx = static_cast<size_t>(k + i);
            rem[idx] = mod_reduce(rem[idx] - mul_mod(q, div.c_[static_cast<size_t>(i)], p_), p_);
        }
    }
    return {FpPoly(p_, std::move(quo)), FpPoly(p_, std::move(rem))};
}

FpPoly FpPoly::exact_div(const FpPoly& div) const {
    auto [q, r] = divmod(div);
    if (!r.is_zero()) throw std::domain_error("exact_div: not exact");
    return q;
}

bool FpPoly::divides(const FpPoly& multiple) const {
    if (is_zero()) return multiple.is_zero();
    return multiple.divmod(*this).second.is_zero();
}

int64_t FpPoly::eval(int64_t x) const {
    x = mod_reduce(x, p_);
    int64_t r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = mod_reduce(mul_mod(r, x, p_) + c_[i], p_);
    return r;
}

FpPoly FpPoly::pow_mod(const Int& e, const FpPoly& m) const {
    if (e < 0) throw std::domain_error("pow_mod: negative exponent");
    FpPoly r(p_, {1});
    FpPoly b = mod(m);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r.mod(m);
    for (size_t i = bits; i-- > 0;) {
        r = (r * r).mod(m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b).mod(m);
    }
    return r;
}

RatPoly FpPoly::lift() const {
    std::vector<Rat> v;
    v.reserve(c_.size());
    for (int64_t c : c_) v.emplace_back(static_cast<long>(c));
    return RatPoly(std::move(v));
}

std::string FpPoly::str() const { return lift().str(); }

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a.mod(b);
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

FpPoly fp_lcm(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly(a.modulus());
    return (a * b).exact_div(fp_gcd(a, b)).monic();
}

// ---------------------------------------------------------------------------
// factorization
// ---------------------------------------------------------------------------

namespace {

// f = g(X^p) -> g, using a^p = a in F_p.
FpPoly pth_root(const FpPoly& f) {
    const int64_t p = f.modulus();
    std::vector<int64_t> v;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
        v.push_back(f.coeff(static_cast<size_t>(i)));
    return FpPoly(p, std::move(v));
}

FpPoly random_poly(int64_t p, int deg, SplitRng& rng) {
    std::vector<int64_t> v(static_cast<size_t>(deg + 1));
    for (auto& c : v) c = static_cast<int64_t>(rng.next() % static_cast<uint64_t>(p));
    return FpPoly(p, std::move(v));
}

// Equal-degree splitting: g is monic squarefree, all factors of degree d.
void edf(const FpPoly& g, int d, SplitRng& rng, std::vector<FpPoly>& out) {
    const int64_t p = g.modulus();
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    FpPoly factor(p);
    while (true) {
        FpPoly a = random_poly(p, g.degree() - 1, rng);
        if (a.is_zero()) continue;
        FpPoly t(p);
        if (p == 2) {
            // trace map a + a^2 + ... + a^{2^{d-1}} mod g
            t = a;
            FpPoly cur = a;
            for (int i = 1; i < d; ++i) {
                cur = (cur * cur).mod(g);
                t = t + cur;
            }
        } else {
            Int e = (pow_int(Int(static_cast<long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
            t = a.pow_mod(e, g) - FpPoly(p, {1});
        }
        FpPoly h = fp_gcd(t, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            factor = h;
            break;
        }
    }
    edf(factor, d, rng, out);
    edf(g.exact_div(factor).monic(), d, rng, out);
}

// Distinct-degree split of a monic squarefree polynomial, then equal-degree
// refinement; appends (irreducible, 1) entries.
void factor_squarefree(const FpPoly& f, SplitRng& rng, std::vector<FpPoly>& out) {
    const int64_t p = f.modulus();
    FpPoly rest = f.monic();
    FpPoly frob = FpPoly::x(p);  // X^{p^d} mod rest, advanced per level
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
        frob = frob.pow_mod(Int(static_cast<long>(p)), rest);
        FpPoly g = fp_gcd(frob - FpPoly::x(p), rest);
        if (g.degree() > 0) {
            edf(g, d, rng, out);
            rest = rest.exact_div(g).monic();
            frob = frob.mod(rest);
        }
    }
    if (rest.degree() > 0) out.push_back(rest);
}

}  // namespace

namespace {
std::atomic<uint64_t> g_factor_seed{kDefaultFactorSeed};
}

void set_default_factor_seed(uint64_t seed) { g_factor_seed.store(seed ? seed : kDefaultFactorSeed); }

uint64_t default_factor_seed() { return g_factor_seed.load(); }

std::vector<std::pair<FpPoly, int>> factor_mod_p(const RatPoly& f, int64_t p) {
    return factor_mod_p(f, p, default_factor_seed());
}

std::vector<std::pair<FpPoly, int>> factor_mod_p(const RatPoly& f, int64_t p, uint64_t seed) {
    FpPoly fbar = FpPoly::from_ratpoly(f, p);
    if (fbar.is_zero()) throw std::domain_error("factor_mod_p: polynomial vanishes mod p");
    SplitRng rng(seed);
    std::map<FpPoly, int> found;  // ordered -> deterministic output

    FpPoly work = fbar.monic();
    while (work.degree() > 0) {
        FpPoly der = work.derivative();
        if (der.is_zero()) {
            // pure p-th power layer
            FpPoly root = pth_root(work);
            std::vector<std::pair<FpPoly, int>> sub;
            {
                auto inner = factor_mod_p(root.lift(), p, seed);
                sub = std::move(inner);
            }
            for (auto& [poly, e] : sub) found[poly] += e * static_cast<int>(p);
            break;
        }
        FpPoly sf = work.exact_div(fp_gcd(work, der)).monic();  // squarefree part
        std::vector<FpPoly> irr;
        factor_squarefree(sf, rng, irr);
        for (const auto& q : irr) {
            int e = 0;
            while (q.divides(work)) {
                work = work.exact_div(q);
                ++e;
            }
            found[q] += e;
        }
        work = work.monic();
    }
    return {found.begin(), found.end()};
}

bool fp_is_irreducible(const FpPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    const int64_t p = f.modulus();
    FpPoly g = f.monic();
    // X^{p^n} == X mod f, and gcd(X^{p^{n/q}} - X, f) == 1 for prime q | n.
    const int n = g.degree();
    FpPoly frob = FpPoly::x(p);
    std::vector<FpPoly> powers;  // X^{p^d} for d = 1..n
    for (int d = 1; d <= n; ++d) {
        frob = frob.pow_mod(Int(static_cast<long>(p)), g);
        powers.push_back(frob);
    }
    if (powers.back() != FpPoly::x(p).mod(g)) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        bool qprime = true;
        for (int t = 2; t * t <= q; ++t)
            if (q % t == 0) qprime = false;
        if (!qprime) continue;
        FpPoly diff = powers[static_cast<size_t>(n / q - 1)] - FpPoly::x(p);
        if (fp_gcd(diff, g).degree() != 0) return false;
    }
    return true;
}

}  // namespace ivp

#include "ivp/ratpoly.hpp"

#include <algorithm>
#include <sstream>

namespace ivp {

namespace {
const Rat kZero = 0;
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly({c}); }

RatPoly RatPoly::x() { return RatPoly({Rat(0), Rat(1)}); }

RatPoly RatPoly::monomial(const Rat& c, size_t k) {
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rat> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return RatPoly(std::move(v));
}

const Rat& RatPoly::coeff(size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const Rat& RatPoly::lc() const {
    if (c_.empty()) throw std::domain_error("lc of zero polynomial");
    return c_.back();
}

bool RatPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

bool RatPoly::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& c) { return c.get_den() == 1; });
}

RatPoly RatPoly::operator-() const {
    std::vector<Rat> v(c_);
    for (auto& c : v) c = -c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    if (s == 0) return {};
    std::vector<Rat> v(c_);
    for (auto& c : v) c *= s;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(v));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

RatPoly RatPoly::shifted(const Rat& a) const {
    // Horner on f(X + a): fold coefficients into a polynomial in X.
    RatPoly r;
    RatPoly xa({a, Rat(1)});
    for (size_t i = c_.size(); i-- > 0;) r = r * xa + constant(c_[i]);
    return r;
}

RatPoly RatPoly::pow(unsigned e) const {
    RatPoly r = constant(1);
    RatPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& div) const {
    if (div.is_zero()) throw std::domain_error("division by zero polynomial");
    if (degree() < div.degree()) return {RatPoly{}, *this};
    std::vector<Rat> rem(c_);
    std::vector<Rat> quo(degree() - div.degree() + 1, Rat(0));
    const Rat& d = div.lc();
    for (int k = degree() - div.degree(); k >= 0; --k) {
        Rat q = rem[k + div.degree()] / d;
        quo[k] = q;
        if (q == 0) continue;
        for (int i = 0; i <= div.degree(); ++i) rem[k + i] -= q * div.c_[i];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::exact_div(const RatPoly& div) const {
    auto [q, r] = divmod(div);
    if (!r.is_zero()) throw std::domain_error("exact_div: division is not exact");
    return q;
}

bool RatPoly::divides(const RatPoly& multiple) const {
    if (is_zero()) return multiple.is_zero();
    return multiple.divmod(*this).second.is_zero();
}

RatPoly RatPoly::compose_mod(const RatPoly& g, const RatPoly& m) const {
    if (m.degree() < 1) throw std::domain_error("compose_mod: modulus must be nonconstant");
    RatPoly gm = g.mod(m);
    RatPoly r;
    for (size_t i = c_.size(); i-- > 0;) r = (r * gm + constant(c_[i])).mod(m);
    return r;
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    return *this * (Rat(1) / lc());
}

Int RatPoly::denominator_lcm() const {
    Int l = 1;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

std::pair<Int, RatPoly> RatPoly::primitive() const {
    if (is_zero()) throw std::domain_error("primitive part of zero polynomial");
    if (!is_integral()) throw std::domain_error("primitive: polynomial is not integral");
    Int g = 0;
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    if (lc() < 0) g = -g;
    std::vector<Rat> v(c_);
    for (auto& c : v) c /= Rat(g);
    return {g, RatPoly(std::move(v))};
}

std::string RatPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        Rat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && i > 0;
        if (!unit) os << a.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd via primitive pseudo-remainder sequence over Z
// ---------------------------------------------------------------------------

namespace {

// Pseudo-remainder of integral polynomials: lc(b)^{da-db+1} a mod b.
RatPoly prem(RatPoly a, const RatPoly& b) {
    int db = b.degree();
    const Rat& lb = b.lc();
    while (!a.is_zero() && a.degree() >= db) {
        int k = a.degree() - db;
        RatPoly t = RatPoly::monomial(a.lc(), static_cast<size_t>(k)) * b;
        a = a * lb - t;
    }
    return a;
}

}  // namespace

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero()) return b.is_zero() ? RatPoly{} : b.monic();
    if (b.is_zero()) return a.monic();
    RatPoly f = (a * Rat(a.denominator_lcm())).primitive().second;
    RatPoly g = (b * Rat(b.denominator_lcm())).primitive().second;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        RatPoly r = prem(f, g);
        if (!r.is_zero()) r = r.primitive().second;
        f = g;
        g = r;
    }
    return f.monic();
}

// ---------------------------------------------------------------------------
// resultant via Bareiss on the Sylvester matrix
// ---------------------------------------------------------------------------

namespace {

Int bareiss_det(std::vector<std::vector<Int>>& m) {
    const size_t n = m.size();
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace

Rat resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant: zero input polynomial");
    const int m = f.degree(), n = g.degree();
    if (m == 0) {
        Rat r = 1;
        for (int i = 0; i < n; ++i) r *= f.lc();
        return r;
    }
    if (n == 0) {
        Rat r = 1;
        for (int i = 0; i < m; ++i) r *= g.lc();
        return r;
    }
    // Clear denominators; Res(c*f, g) = c^{deg g} Res(f, g).
    Int df = f.denominator_lcm(), dg = g.denominator_lcm();
    RatPoly F = f * Rat(df), G = g * Rat(dg);
    const size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<Int>> syl(N, std::vector<Int>(N, Int(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) syl[r][r + i] = Int(F.coeff(static_cast<size_t>(m - i)).get_num());
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) syl[n + r][r + i] = Int(G.coeff(static_cast<size_t>(n - i)).get_num());
    Int det = bareiss_det(syl);
    Rat scale = Rat(pow_int(df, static_cast<unsigned long>(n))) *
                Rat(pow_int(dg, static_cast<unsigned long>(m)));
    return Rat(det) / scale;
}

Rat discriminant(const RatPoly& f) {
    if (f.degree() < 1) throw std::domain_error("discriminant: degree must be >= 1");
    const int n = f.degree();
    if (n == 1) return 1;
    Rat res = resultant(f, f.derivative());
    Rat d = res / f.lc();
    return (static_cast<long>(n) * (n - 1) / 2) % 2 == 0 ? d : Rat(-d);
}

// ---------------------------------------------------------------------------
// power sums / Newton's identities
// ---------------------------------------------------------------------------

std::vector<Rat> power_sums(const RatPoly& monic_f, size_t K) {
    if (!monic_f.is_monic()) throw std::domain_error("power_sums: polynomial must be monic");
    const size_t n = static_cast<size_t>(monic_f.degree());
    std::vector<Rat> p(K + 1, Rat(0));
    p[0] = Rat(static_cast<long>(n));
    for (size_t k = 1; k <= K; ++k) {
        Rat s = 0;
        if (k <= n) s = -Rat(static_cast<long>(k)) * monic_f.coeff(n - k);
        const size_t top = std::min(k - 1, n);
        for (size_t i = 1; i <= top; ++i) s -= monic_f.coeff(n - i) * p[k - i];
        p[k] = s;
    }
    p.erase(p.begin());
    return p;
}

RatPoly poly_from_power_sums(const std::vector<Rat>& p, size_t n) {
    if (p.size() < n) throw std::domain_error("poly_from_power_sums: need n power sums");
    std::vector<Rat> e(n + 1, Rat(0));
    e[0] = 1;
    for (size_t k = 1; k <= n; ++k) {
        Rat s = 0;
        for (size_t i = 1; i <= k; ++i) {
            Rat term = e[k - i] * p[i - 1];
            s += (i % 2 == 1) ? term : Rat(-term);
        }
        e[k] = s / Rat(static_cast<long>(k));
    }
    std::vector<Rat> c(n + 1, Rat(0));
    for (size_t k = 0; k <= n; ++k) c[n - k] = (k % 2 == 0) ? e[k] : Rat(-e[k]);
    return RatPoly(std::move(c));
}

}  // namespace ivp

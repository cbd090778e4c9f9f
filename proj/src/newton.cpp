#include "ivp/newton.hpp"

#include <algorithm>

namespace ivp {

NewtonPolygon newton_polygon(const RatPoly& f, const Int& p) {
    if (f.is_zero()) throw std::domain_error("newton_polygon: zero polynomial");
    if (!is_probable_prime(p)) throw std::domain_error("newton_polygon: p is not prime");

    // strip zero roots
    size_t z = 0;
    while (f.coeff(z) == 0) ++z;

    // points (i, v_p(a_i)) for the surviving tail, i shifted to start at 0
    struct Pt {
        long x;
        long y;
    };
    std::vector<Pt> pts;
    for (size_t i = z; i <= static_cast<size_t>(f.degree()); ++i) {
        const Rat& c = f.coeff(i);
        if (c == 0) continue;
        if (Int(c.get_den()) % p == 0)
            throw std::domain_error("newton_polygon: coefficient denominator divisible by p");
        pts.push_back({static_cast<long>(i - z), val_p(c, p)});
    }

    NewtonPolygon np;
    np.prime = p;
    np.zero_roots = static_cast<int>(z);
    if (pts.size() < 2) return np;  // constant tail: no finite roots

    // lower hull, exact integer cross products
    std::vector<Pt> hull;
    for (const Pt& q : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            // keep b only if it lies strictly below segment a--q
            Int cross = Int(b.x - a.x) * Int(q.y - a.y) - Int(b.y - a.y) * Int(q.x - a.x);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(q);
    }

    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        const Pt& a = hull[i];
        const Pt& b = hull[i + 1];
        NewtonSegment seg;
        seg.slope = Rat(Int(a.y - b.y), Int(b.x - a.x));
        seg.slope.canonicalize();
        seg.length = static_cast<int>(b.x - a.x);
        np.segments.push_back(seg);
    }
    // hull order gives decreasing root valuation; report increasing
    std::reverse(np.segments.begin(), np.segments.end());
    return np;
}

ValMultiset root_valuations(const RatPoly& f, const Int& p) {
    NewtonPolygon np = newton_polygon(f, p);
    ValMultiset out;
    for (const auto& seg : np.segments) out.emplace_back(Val(seg.slope), seg.length);
    if (np.zero_roots > 0) out.emplace_back(Val::infinity(), np.zero_roots);
    return out;
}

ValMultiset element_valuations(const AlgebraicElement& e, const Int& p) {
    return root_valuations(char_poly_of_element(e), p);
}

RatPoly difference_poly(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("difference_poly: zero input polynomial");
    if (!f.is_monic() || !f.is_integral() || !g.is_monic() || !g.is_integral())
        throw std::domain_error("difference_poly: inputs must be monic integral");
    const size_t m = static_cast<size_t>(f.degree());
    const size_t n = static_cast<size_t>(g.degree());
    const size_t K = m * n;
    if (K == 0) return RatPoly::constant(1);
    if (K > 4096)
        throw std::domain_error("difference_poly: product of degrees above the 4096 budget");

    std::vector<Rat> pf = power_sums(f, K);
    std::vector<Rat> pg = power_sums(g, K);
    pf.insert(pf.begin(), Rat(static_cast<long>(m)));  // pf[k] = sum alpha^k, k = 0..K
    pg.insert(pg.begin(), Rat(static_cast<long>(n)));

    std::vector<Int> row{Int(1)};  // rolling Pascal row
    std::vector<Rat> r(K);
    for (size_t k = 1; k <= K; ++k) {
        row.push_back(1);
        for (size_t l = k - 1; l >= 1; --l) row[l] += row[l - 1];
        Rat s = 0;
        for (size_t l = 0; l <= k; ++l) {
            Rat term = Rat(row[l]) * pg[l] * pf[k - l];
            s += ((k - l) % 2 == 0) ? term : Rat(-term);
        }
        r[k - 1] = s;
    }
    return poly_from_power_sums(r, K);
}

ValMultiset difference_valuations(const RatPoly& f, const RatPoly& g, const Int& p) {
    return root_valuations(difference_poly(f, g), p);
}

int multiset_size(const ValMultiset& m) {
    int n = 0;
    for (const auto& [v, k] : m) n += k;
    return n;
}

}  // namespace ivp

#include "ivp/families.hpp"

#include <algorithm>
#include <sstream>

#include "ivp/cyclotomic.hpp"

namespace ivp {

const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::RootsOfUnityPPower: return "roots-of-unity-p-power";
        case FamilyKind::RootsOfUnityPrimes: return "roots-of-unity-primes";
        case FamilyKind::NthRootTower: return "nth-root-tower";
        case FamilyKind::PrimeProductRadicals: return "prime-product-radicals";
        case FamilyKind::Fcn: return "fcn";
        case FamilyKind::ScaledRing: return "scaled-ring";
    }
    return "?";
}

std::optional<FamilyKind> family_kind_from_name(const std::string& s) {
    for (FamilyKind k :
         {FamilyKind::RootsOfUnityPPower, FamilyKind::RootsOfUnityPrimes, FamilyKind::NthRootTower,
          FamilyKind::PrimeProductRadicals, FamilyKind::Fcn, FamilyKind::ScaledRing})
        if (s == family_kind_name(k)) return k;
    return std::nullopt;
}

namespace {

long zigzag(long t) { return (t % 2 == 1) ? (t + 1) / 2 : -(t / 2); }

RatPoly scale_argument(const RatPoly& m, const Int& d) {
    // minimal polynomial of d*alpha from the minimal polynomial of alpha:
    // a_i -> a_i * d^{n-i}
    const int n = m.degree();
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    Int pw = 1;
    for (int i = n; i >= 0; --i) {
        c[static_cast<size_t>(i)] = m.coeff(static_cast<size_t>(i)) * Rat(pw);
        pw *= d;
    }
    return RatPoly(std::move(c));
}

}  // namespace

std::vector<RatPoly> irreducible_corpus(int max_deg, int height, size_t count) {
    std::vector<RatPoly> out;
    if (max_deg < 2 || count == 0) return out;
    // spread the quota across degrees so higher-degree elements actually appear
    const size_t degrees = static_cast<size_t>(max_deg - 1);
    const size_t quota = (count + degrees - 1) / degrees;
    for (int deg = 2; deg <= max_deg && out.size() < count; ++deg) {
        const long span = 2 * height + 1;
        long total = 1;
        for (int i = 0; i < deg; ++i) total *= span;
        size_t taken = 0;
        for (long idx = 0; idx < total && taken < quota && out.size() < count; ++idx) {
            std::vector<Rat> c(static_cast<size_t>(deg) + 1);
            long rest = idx;
            for (int i = 0; i < deg; ++i) {
                c[static_cast<size_t>(i)] = Rat(zigzag(rest % span));
                rest /= span;
            }
            c[static_cast<size_t>(deg)] = 1;
            if (c[0] == 0) continue;
            RatPoly f(std::move(c));
            IrredCheck chk = certify_irreducible(f);
            if (chk.outcome == IrredOutcome::Irreducible) {
                out.push_back(f);
                ++taken;
            }
        }
    }
    return out;
}

SequenceSample make_family(FamilyKind kind, const FamilyParams& params) {
    SequenceSample s;
    s.kind = kind;
    s.params = params;
    const int len = params.len;
    if (len < 1) throw std::domain_error("make_family: len must be >= 1");

    switch (kind) {
        case FamilyKind::RootsOfUnityPPower: {
            const int64_t p = params.p;
            if (p < 2) throw std::domain_error("make_family: p must be prime");
            Int pk = 1;
            for (int k = 1; k <= len; ++k) {
                pk *= p;
                if (pk > 256) throw std::domain_error("make_family: cyclotomic index above 256");
                IrredCertificate cert;
                cert.kind = IrredCertificate::Kind::Cyclotomic;
                cert.note = "cyclotomic index " + to_string(pk);
                s.elements.emplace_back(cyclotomic(static_cast<unsigned>(pk.get_ui())),
                                        RatPoly::x(), cert);
            }
            Int pz(static_cast<long>(p));
            s.diff_formula = [pz](size_t i, size_t j, const Int& q) -> std::optional<Val> {
                if (i == j) return Val::infinity();
                if (q != pz) return Val(Rat(0));
                unsigned long K = static_cast<unsigned long>(std::max(i, j)) + 1;
                Rat v(Int(1), Int(pow_int(pz, K - 1) * (pz - 1)));
                v.canonicalize();
                return Val(v);
            };
            s.elem_formula = [](size_t, const Int&) -> std::optional<Val> { return Val(Rat(0)); };
            s.provenance =
                "prime-power roots of unity; differences of two such are unit multiples of "
                "1 - (root of top index), whose valuation at the base prime is "
                "1/(p^{k-1}(p-1)) by total ramification, and 0 elsewhere";
            s.expected = "pseudo-divergent at the base prime (gauge -> 0), pseudo-stationary at "
                         "every other prime; ring of integral-valued polynomials trivial";
            break;
        }

        case FamilyKind::RootsOfUnityPrimes: {
            for (int k = 1; k <= len; ++k) {
                Int q = nth_prime(static_cast<unsigned>(k));
                if (q > 256) throw std::domain_error("make_family: cyclotomic index above 256");
                IrredCertificate cert;
                cert.kind = IrredCertificate::Kind::Cyclotomic;
                cert.note = "cyclotomic index " + to_string(q);
                s.elements.emplace_back(cyclotomic(static_cast<unsigned>(q.get_ui())),
                                        RatPoly::x(), cert);
            }
            s.diff_formula = [](size_t i, size_t j, const Int&) -> std::optional<Val> {
                if (i == j) return Val::infinity();
                return Val(Rat(0));
            };
            s.elem_formula = [](size_t, const Int&) -> std::optional<Val> { return Val(Rat(0)); };
            s.provenance =
                "roots of unity of distinct prime index; the difference of two is a unit times "
                "1 - (primitive qr-th root), a unit since qr is not a prime power";
            s.expected = "pseudo-stationary with gauge 0 at every prime; trivial";
            break;
        }

        case FamilyKind::NthRootTower: {
            const int64_t p = params.p;
            const int n = params.n;
            if (p < 2 || n < 2) throw std::domain_error("make_family: need prime p and n >= 2");
            Int pz(static_cast<long>(p));
            Int nk = 1;
            std::vector<Rat> bvals;
            for (int k = 1; k <= len; ++k) {
                nk *= n;
                if (nk > 128) throw std::domain_error("make_family: tower degree above 128");
                Int mk = (nk - 1) / (n - 1);
                RatPoly min = RatPoly::monomial(1, static_cast<size_t>(nk.get_ui())) -
                              RatPoly::constant(Rat(pow_int(pz, mk.get_ui())));
                IrredCertificate cert;
                cert.kind = IrredCertificate::Kind::NewtonSlope;
                cert.note = "single segment of slope " + to_string(mk) + "/" + to_string(nk) +
                            " at " + to_string(pz);
                s.elements.emplace_back(min, RatPoly::x(), cert);
                Rat b(mk, nk);
                b.canonicalize();
                bvals.push_back(b);
            }
            s.diff_formula = [pz, bvals](size_t i, size_t j, const Int& q) -> std::optional<Val> {
                if (i == j) return Val::infinity();
                if (q != pz) return std::nullopt;  // conjugate spread possible away from p
                return Val(bvals[std::min(i, j)]);
            };
            s.elem_formula = [pz, bvals](size_t i, const Int& q) -> std::optional<Val> {
                return q == pz ? Val(bvals[i]) : Val(Rat(0));
            };
            s.provenance =
                "tower p^{b_k} with b_k = (1 - n^{-k})/(n - 1); elements have distinct "
                "valuations b_k at p, so pairwise differences take the smaller of the two";
            s.expected = "pseudo-convergent at p with increasing gauge b_k; nontrivial with "
                         "generator X^n / p";
            s.generator = IvpGenerator{RatPoly::monomial(1, static_cast<size_t>(n)),
                                       Int(static_cast<long>(p))};
            break;
        }

        case FamilyKind::PrimeProductRadicals: {
            if (len > 64) throw std::domain_error("make_family: radical degree above 64");
            Int prod = 1;
            std::vector<Int> primes;
            for (int k = 1; k <= len; ++k) {
                Int pk = nth_prime(static_cast<unsigned>(k));
                primes.push_back(pk);
                prod *= pk;
                RatPoly min =
                    RatPoly::monomial(1, static_cast<size_t>(k)) - RatPoly::constant(Rat(prod));
                IrredCertificate cert;
                cert.kind = IrredCertificate::Kind::Eisenstein;
                cert.note = "eisenstein at " + to_string(primes.front());
                s.elements.emplace_back(min, RatPoly::x(), cert);
            }
            s.diff_formula = [primes](size_t i, size_t j, const Int& q) -> std::optional<Val> {
                if (i == j) return Val::infinity();
                size_t t = 0;  // 1-based index of q among the construction primes, 0 if absent
                for (size_t a = 0; a < primes.size(); ++a)
                    if (primes[a] == q) t = a + 1;
                size_t k1 = std::min(i, j) + 1, k2 = std::max(i, j) + 1;
                if (t == 0) return std::nullopt;
                if (k1 >= t) {
                    Rat v(Int(1), Int(static_cast<long>(k2)));
                    v.canonicalize();
                    return Val(v);
                }
                if (k2 >= t) return Val(Rat(0));
                return std::nullopt;  // both values vanish; spread possible
            };
            s.elem_formula = [primes](size_t i, const Int& q) -> std::optional<Val> {
                size_t t = 0;
                for (size_t a = 0; a < primes.size(); ++a)
                    if (primes[a] == q) t = a + 1;
                size_t k = i + 1;
                if (t == 0 || k < t) return Val(Rat(0));
                Rat v(Int(1), Int(static_cast<long>(k)));
                v.canonicalize();
                return Val(v);
            };
            s.provenance =
                "k-th roots of the product of the first k primes; the valuation of s_k at the "
                "t-th construction prime is 0 for k < t and 1/k for k >= t";
            s.expected = "eventually pseudo-divergent with gauge -> 0 at every prime; trivial";
            break;
        }

        case FamilyKind::Fcn: {
            const Int c = params.c;
            if (c < 2) throw std::domain_error("make_family: need c >= 2");
            std::vector<Int> degs;
            unsigned idx = 1;
            while (static_cast<int>(degs.size()) < len) {
                Int q = nth_prime(idx++);
                if (q < 2) break;
                if (c % q == 0) continue;
                if (q > 97) throw std::domain_error("make_family: fcn degree above 97");
                degs.push_back(q);
            }
            for (const Int& nq : degs) {
                size_t n = static_cast<size_t>(nq.get_ui());
                std::vector<Rat> coeffs(n + 1, Rat(0));
                coeffs[0] = Rat(c * c);
                coeffs[n - 1] = Rat(c * c * c);
                coeffs[n] = 1;
                RatPoly min{std::move(coeffs)};
                IrredCertificate cert;
                cert.kind = IrredCertificate::Kind::Perron;
                s.elements.emplace_back(min, RatPoly::x(), cert);
            }
            Int cc = c;
            std::vector<Int> dv(degs);
            s.diff_formula = [cc, dv](size_t i, size_t j, const Int& q) -> std::optional<Val> {
                if (i == j) return Val::infinity();
                if (cc % q != 0) return std::nullopt;
                long vq = val_p(cc, q);
                Rat v(Int(2 * vq), dv[std::max(i, j)]);
                v.canonicalize();
                return Val(v);
            };
            s.elem_formula = [cc, dv](size_t i, const Int& q) -> std::optional<Val> {
                if (cc % q != 0) return Val(Rat(0));
                long vq = val_p(cc, q);
                Rat v(Int(2 * vq), dv[i]);
                v.canonicalize();
                return Val(v);
            };
            s.provenance =
                "roots of X^n + c^3 X^{n-1} + c^2 over the increasing primes n coprime to c; at "
                "p | c the single Newton segment gives every root valuation 2 v_p(c)/n";
            s.expected = "valuations at p | c strictly decrease to 0 (divergent pattern); away "
                         "from c the index is coprime to the prime for large n; trivial";
            break;
        }

        case FamilyKind::ScaledRing: {
            const Int d = params.d;
            if (d < 1) throw std::domain_error("make_family: need d >= 1");
            auto corpus = irreducible_corpus(params.max_deg, params.height,
                                             static_cast<size_t>(len));
            for (const RatPoly& m : corpus) {
                IrredCheck chk = certify_irreducible(m);
                IrredCertificate cert = chk.cert;
                cert.note += (cert.note.empty() ? "" : "; ") + std::string("argument scaled by ") +
                             to_string(d);
                s.elements.emplace_back(scale_argument(m, d), RatPoly::x(), cert);
            }
            s.diff_formula = [](size_t i, size_t j, const Int&) -> std::optional<Val> {
                if (i == j) return Val::infinity();
                return std::nullopt;
            };
            s.elem_formula = [](size_t, const Int&) -> std::optional<Val> { return std::nullopt; };
            s.provenance = "sampled multiples d*alpha over a fixed corpus of monic irreducibles";
            s.expected = "nontrivial: X/d maps every element back to an algebraic integer";
            s.generator = IvpGenerator{RatPoly::x(), d};
            break;
        }
    }
    return s;
}

FamilyCrosscheck crosscheck_family(const SequenceSample& s, const Int& p,
                                   const CrosscheckBudget& budget) {
    FamilyCrosscheck rep;
    const size_t n = s.elements.size();

    auto multiset_str = [](const ValMultiset& m) {
        std::ostringstream os;
        for (size_t i = 0; i < m.size(); ++i)
            os << (i ? ", " : "") << m[i].first.str() << " x" << m[i].second;
        return os.str();
    };

    for (size_t i = 0; i < n; ++i) {
        FamilyCrosscheckEntry ent;
        ent.what = "element " + std::to_string(i);
        auto want = s.elem_formula ? s.elem_formula(i, p) : std::nullopt;
        int deg = s.elements[i].field_degree();
        if (!want || deg > budget.max_elem_degree) {
            rep.entries.push_back(ent);
            continue;
        }
        ValMultiset got = element_valuations(s.elements[i], p);
        ent.checked = true;
        ent.expected = want->str() + " x" + std::to_string(deg);
        ent.got = multiset_str(got);
        ent.ok = got.size() == 1 && got[0].first == *want && got[0].second == deg;
        if (!ent.ok) rep.all_ok = false;
        ++rep.checked;
        rep.entries.push_back(ent);
    }

    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            FamilyCrosscheckEntry ent;
            ent.what = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
            auto want = s.diff_formula ? s.diff_formula(i, j, p) : std::nullopt;
            long di = s.elements[i].field_degree(), dj = s.elements[j].field_degree();
            if (!want || di * dj > budget.max_pair_degree) {
                rep.entries.push_back(ent);
                continue;
            }
            ValMultiset got = difference_valuations(s.elements[i].min_poly(),
                                                    s.elements[j].min_poly(), p);
            ent.checked = true;
            ent.expected = want->str() + " x" + std::to_string(di * dj);
            ent.got = multiset_str(got);
            ent.ok = got.size() == 1 && got[0].first == *want &&
                     got[0].second == static_cast<int>(di * dj);
            if (!ent.ok) rep.all_ok = false;
            ++rep.checked;
            rep.entries.push_back(ent);
        }
    }
    return rep;
}

FamilyVerdict family_verdict(const SequenceSample& s, const Int& p) {
    FamilyVerdict v;
    const size_t n = s.elements.size();

    // earliest suffix the formula covers entirely; if that suffix shows no
    // pattern, advance until one appears (the "eventually" behaviour)
    auto covered = [&](size_t st) {
        for (size_t i = st; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (!s.diff_formula(i, j, p)) return false;
        return true;
    };
    auto classify_suffix = [&](size_t st) {
        const size_t m = n - st;
        std::vector<Val> upper;
        for (size_t i = st; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) upper.push_back(*s.diff_formula(i, j, p));
        return classify_prefix(ValuationMatrix::from_upper(m, upper));
    };
    bool done = false;
    std::optional<size_t> first_covered;
    for (size_t st = 0; st + 3 <= n && !done; ++st) {
        if (!covered(st)) continue;
        if (!first_covered) first_covered = st;
        ClassificationReport rep = classify_suffix(st);
        if (rep.kind != SeqKind::None) {
            v.suffix_start = st;
            v.classification = rep;
            done = true;
        }
    }
    if (!done) {
        if (first_covered) {
            v.suffix_start = *first_covered;
            v.classification = classify_suffix(*first_covered);
        } else {
            v.suffix_start = n;
            v.classification.reason = "insufficient: formula covers fewer than 3 points";
            v.classification.prefix_len = 0;
        }
    }

    switch (s.kind) {
        case FamilyKind::NthRootTower: {
            v.nontrivial = true;
            v.mechanism = "explicit-generator";
            v.generator = s.generator;
            bool all = true;
            for (const auto& e : s.elements) {
                RatPoly xn = RatPoly::monomial(1, static_cast<size_t>(s.params.n));
                if (!is_integral_value(e.with_expr(xn.mod(e.min_poly())), v.generator->d))
                    all = false;
            }
            v.note = all ? "generator verified integral on every prefix element"
                         : "generator FAILED on some prefix element";
            break;
        }
        case FamilyKind::ScaledRing: {
            v.nontrivial = true;
            v.mechanism = "explicit-generator";
            v.generator = s.generator;
            bool all = true;
            for (const auto& e : s.elements)
                if (!is_integral_value(e, v.generator->d)) all = false;
            v.note = all ? "generator verified integral on every corpus element"
                         : "generator FAILED on some corpus element";
            break;
        }
        case FamilyKind::RootsOfUnityPPower:
        case FamilyKind::RootsOfUnityPrimes: {
            v.nontrivial = false;
            v.mechanism = "index-one";
            size_t certified = 0, checked = 0;
            for (const auto& e : s.elements) {
                if (e.field_degree() > 32) continue;
                ++checked;
                if (index_one_certificate(e.min_poly()).index_is_one == TriState::Yes) ++certified;
            }
            std::ostringstream os;
            os << "index 1 certified for " << certified << "/" << checked
               << " prefix elements (degree <= 32); unbounded degree with index 1 forces "
                  "triviality";
            v.note = os.str();
            break;
        }
        case FamilyKind::PrimeProductRadicals: {
            v.nontrivial = false;
            v.mechanism = "divergent-to-zero";
            v.note = "element valuations at each construction prime eventually strictly "
                     "decrease to 0 (prefix-certified)";
            break;
        }
        case FamilyKind::Fcn: {
            v.nontrivial = false;
            if (s.params.c % p == 0) {
                v.mechanism = "divergent-to-zero";
                v.note = "root valuations 2 v_p(c)/n strictly decrease to 0 along the prefix";
            } else {
                v.mechanism = "index-coprime";
                v.note = "for each degree bound some element has index coprime to this prime, "
                         "forcing p-integrality of low-degree integral-valued polynomials";
            }
            break;
        }
    }
    return v;
}

}  // namespace ivp

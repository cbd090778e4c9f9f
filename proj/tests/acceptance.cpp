// Acceptance gate: one check per shipped guarantee, each printed as a single
// pass/fail line with its runtime. Exit status is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "ivp/closure.hpp"
#include "ivp/cyclotomic.hpp"
#include "ivp/dedekind.hpp"
#include "ivp/families.hpp"
#include "ivp/integrality.hpp"
#include "ivp/newton.hpp"
#include "ivp/ultrametric.hpp"

using namespace ivp;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<bool(std::ostream&)> run;
};

RatPoly tower_min_poly(int64_t p, int n, int k) {
    Int nk = pow_int(Int(n), static_cast<unsigned long>(k));
    Int mk = (nk - 1) / (n - 1);
    return RatPoly::monomial(1, static_cast<size_t>(nk.get_ui())) -
           RatPoly::constant(Rat(pow_int(Int(static_cast<long>(p)), mk.get_ui())));
}

RatPoly scaled_char_poly(const AlgebraicElement& e, const Int& d) {
    RatPoly c = char_poly_of_element(e);
    std::vector<Rat> out(static_cast<size_t>(c.degree()) + 1);
    Int dk = 1;
    for (int i = c.degree(); i >= 0; --i) {
        out[static_cast<size_t>(i)] = c.coeff(static_cast<size_t>(i)) / Rat(dk);
        dk *= d;
    }
    return RatPoly(std::move(out));
}

bool criterion1(std::ostream& log) {
    bool ok = true;
    for (int64_t p : {2, 3, 5})
        for (int n : {2, 3})
            for (int k = 1; k <= 4; ++k) {
                AlgebraicElement e(tower_min_poly(p, n, k),
                                   RatPoly::monomial(1, static_cast<size_t>(n)));
                if (!is_integral_value(e, Int(p))) {
                    log << " power-map not integral at (p=" << p << ",n=" << n << ",k=" << k << ")";
                    ok = false;
                    continue;
                }
                RatPoly value = scaled_char_poly(e, Int(p));
                if (!tower_min_poly(p, n, k - 1).divides(value)) {
                    log << " divisibility fails at (p=" << p << ",n=" << n << ",k=" << k << ")";
                    ok = false;
                }
            }
    return ok;
}

bool criterion2(std::ostream& log) {
    bool ok = true;
    for (auto [p, n] :
         std::vector<std::pair<int64_t, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}})
        if (!psi_lcm_oracle(p, n)) {
            log << " lcm mismatch at (" << p << "," << n << ")";
            ok = false;
        }
    return ok;
}

bool criterion3(std::ostream& log) {
    bool ok = true;
    auto corpus = irreducible_corpus(2, 10, 55);
    if (corpus.size() < 50) {
        log << " corpus too small: " << corpus.size();
        ok = false;
    }
    size_t members = 0;
    for (const auto& m : corpus)
        if (psi_membership_check(2, 2, AlgebraicElement(m))) ++members;
    if (members != corpus.size()) {
        log << " only " << members << "/" << corpus.size() << " degree-2 members";
        ok = false;
    }
    if (psi_membership_check(2, 2, AlgebraicElement(RatPoly::from_ints({1, 1, 0, 1})))) {
        log << " degree-3 witness unexpectedly passes";
        ok = false;
    }
    return ok;
}

bool criterion4(std::ostream& log) {
    bool ok = true;
    for (long c : {2L, 3L, 6L})
        for (int n = 2; n <= 7; ++n) {
            std::vector<Rat> coeffs(static_cast<size_t>(n) + 1, Rat(0));
            coeffs[0] = Rat(c * c);
            coeffs[static_cast<size_t>(n - 1)] = Rat(c * c * c);
            coeffs[static_cast<size_t>(n)] = 1;
            RatPoly f{std::move(coeffs)};
            for (int64_t p : {2, 3, 5, 7}) {
                bool divides = dedekind_divides_index(f, p).divides;
                if (c % p == 0 && !divides) {
                    log << " (c=" << c << ",n=" << n << ",p=" << p << ") want true";
                    ok = false;
                }
                if (n % p == 0 && c % p != 0 && divides) {
                    log << " (c=" << c << ",n=" << n << ",p=" << p << ") want false";
                    ok = false;
                }
            }
        }
    const std::vector<std::pair<long, bool>> quad = {{2, false}, {3, false}, {5, true},
                                                     {6, false}, {7, false}, {10, false}};
    for (auto [d, want] : quad)
        if (dedekind_divides_index(RatPoly::from_ints({-d, 0, 1}), 2).divides != want) {
            log << " quadratic oracle x^2-" << d;
            ok = false;
        }
    return ok;
}

bool criterion5(std::ostream& log) {
    bool ok = true;
    auto check = [&](int64_t p, int k) {
        Int pk = pow_int(Int(static_cast<long>(p)), static_cast<unsigned long>(k));
        auto rv = root_valuations(cyclotomic(static_cast<unsigned>(pk.get_ui())).shifted(1),
                                  Int(static_cast<long>(p)));
        Rat want(Int(1),
                 pow_int(Int(static_cast<long>(p)), static_cast<unsigned long>(k - 1)) * (p - 1));
        want.canonicalize();
        unsigned phi = euler_phi(static_cast<unsigned>(pk.get_ui()));
        if (!(rv.size() == 1 && rv[0].first == Val(want) && rv[0].second == static_cast<int>(phi))) {
            log << " (p=" << p << ",k=" << k << ")";
            ok = false;
        }
    };
    for (int k = 1; k <= 6; ++k) check(2, k);
    for (int k = 1; k <= 3; ++k) check(3, k);
    return ok;
}

bool criterion6(std::ostream& log) {
    bool ok = true;
    const std::vector<unsigned> primes = {2, 3, 5, 7, 11, 13};
    for (size_t a = 0; a < primes.size(); ++a)
        for (size_t b = a + 1; b < primes.size(); ++b) {
            RatPoly D = difference_poly(cyclotomic(primes[a]), cyclotomic(primes[b]));
            for (long l : {2L, 3L, 5L, 7L}) {
                auto rv = root_valuations(D, Int(l));
                if (!(rv.size() == 1 && rv[0].first == Val(Rat(0)))) {
                    log << " (" << primes[a] << "," << primes[b] << ") at " << l;
                    ok = false;
                }
            }
        }
    return ok;
}

bool criterion7(std::ostream& log) {
    bool ok = true;
    for (uint64_t s = 1; s <= 200; ++s) {
        ValuationMatrix m = random_tree_matrix(3 + s % 6, s * 2654435761ULL);
        CrosscheckReport rep = theorem24_crosscheck(m);
        if (!rep.all_ok) {
            log << " seed " << s;
            ok = false;
        }
    }
    return ok;
}

bool criterion8(std::ostream& log) {
    bool ok = true;
    {
        FamilyParams p;
        p.p = 2;
        p.len = 4;
        FamilyVerdict v = family_verdict(make_family(FamilyKind::RootsOfUnityPPower, p), Int(2));
        if (v.classification.kind != SeqKind::PseudoDivergent ||
            v.classification.gauge !=
                std::vector<Val>{Val(Rat(1, 2)), Val(Rat(1, 4)), Val(Rat(1, 8))}) {
            log << " two-power roots misclassified";
            ok = false;
        }
    }
    {
        FamilyParams p;
        p.len = 5;
        FamilyVerdict v = family_verdict(make_family(FamilyKind::RootsOfUnityPrimes, p), Int(3));
        if (v.classification.kind != SeqKind::PseudoStationary ||
            v.classification.gauge != std::vector<Val>{Val(Rat(0))}) {
            log << " prime-index roots misclassified";
            ok = false;
        }
    }
    {
        const size_t n = 5;
        std::vector<Val> upper;
        for (size_t i = 1; i <= n; ++i)
            for (size_t j = i + 1; j <= n; ++j) upper.push_back(Val(Rat(static_cast<long>(i + 1))));
        ClassificationReport rep = classify_prefix(ValuationMatrix::from_upper(n, upper));
        bool increasing = true;
        for (size_t i = 0; i + 1 < rep.gauge.size(); ++i)
            if (!(rep.gauge[i] < rep.gauge[i + 1])) increasing = false;
        if (rep.kind != SeqKind::PseudoConvergent || !increasing) {
            log << " partial sums misclassified";
            ok = false;
        }
    }
    return ok;
}

bool criterion9(std::ostream& log) {
    bool ok = true;
    {
        FamilyParams sp;
        sp.d = 2;
        sp.len = 55;
        auto fam = make_family(FamilyKind::ScaledRing, sp);
        if (fam.elements.size() < 50) {
            log << " corpus too small";
            ok = false;
        }
        IvpGenerator gen{RatPoly::x(), Int(2)};
        for (const auto& e : fam.elements)
            if (!in_Sfd(e, gen)) {
                log << " scaled element escapes S(x,2)";
                ok = false;
            }
    }
    // every non-rational quadratic integer of height <= 10, witness bound k <= 4
    std::ostringstream misses;
    int count = 0, found = 0;
    for (long a = -10; a <= 10; ++a)
        for (long b = -10; b <= 10; ++b) {
            RatPoly f = RatPoly::from_ints({b, a, 1});
            if (certify_irreducible(f).outcome != IrredOutcome::Irreducible) continue;
            ++count;
            if (z_closure_witness(AlgebraicElement(f), 4)) ++found;
            else misses << " " << f.str() << ";";
        }
    if (found != count) {
        log << " binomial witness with k <= 4 found for only " << found << "/" << count
            << " quadratics; counterexamples (each has C(a,2..4) all integral; smallest witness"
            << " is k = 5):" << misses.str();
        ok = false;
    }
    return ok;
}

bool criterion10(std::ostream& log) {
    bool ok = true;
    auto corpus = irreducible_corpus(4, 10, 60);
    for (auto [p, e0, f0] :
         std::vector<std::tuple<int64_t, int, int>>{{2, 1, 1}, {2, 2, 1}, {3, 1, 2}}) {
        IvpGenerator gen = ef_bound_generator(p, e0, f0);
        int tested = 0;
        for (const auto& m : corpus) {
            SplittingReport rep = kummer_splitting(m, p);
            if (!rep.index_ok) continue;
            bool bounded = true;
            for (auto [e, f] : rep.pairs)
                if (e > e0 || f > f0) bounded = false;
            if (!bounded) continue;
            ++tested;
            AlgebraicElement el(m);
            RatPoly value = gen.f.compose_mod(el.expr(), m);
            if (!is_integral_value(el.with_expr(value), gen.d)) {
                log << " generator not integral on " << m.str() << " at (p=" << p << ")";
                ok = false;
            }
        }
        if (tested == 0) {
            log << " no corpus element satisfies the bounds at (p=" << p << ",e0=" << e0
                << ",f0=" << f0 << ")";
            ok = false;
        }
    }
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "tower power map: integrality and exact descent identity", 1.0, criterion1},
        {2, "psi matches the brute-force lcm of low-degree polynomials", 10.0, criterion2},
        {3, "psi(2,2)/2 separates degree 2 from degree 3", 30.0, criterion3},
        {4, "Dedekind criterion on the coefficient-family grid + quadratic oracle", 5.0, criterion4},
        {5, "cyclotomic root valuations 1/(p^{k-1}(p-1))", 5.0, criterion5},
        {6, "prime-index roots of unity differ by units at every prime", 20.0, criterion6},
        {7, "minimal ball cover = residue class count on 200 random ultrametrics", 30.0, criterion7},
        {8, "model families classify divergent / stationary / convergent", 5.0, criterion8},
        {9, "scaled-ring closure membership + binomial witnesses at k <= 4", 30.0, criterion9},
        {10, "double-boundedness generator integral under (e0, f0) gates", 30.0, criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream log;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& ex) {
            log << " exception: " << ex.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        if (secs > c.budget_seconds) {
            log << " [over time budget " << c.budget_seconds << "s]";
            ok = false;
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.title
                  << " (" << static_cast<long>(secs * 1000) << " ms)";
        if (!ok) {
            std::cout << " --" << log.str();
            ++failures;
        }
        std::cout << "\n";
    }
    std::cout << (10 - failures) << "/10 criteria passed\n";
    return failures;
}

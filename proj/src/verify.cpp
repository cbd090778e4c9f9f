#include "ivp/verify.hpp"

#include <functional>
#include <future>
#include <sstream>

#include "ivp/closure.hpp"
#include "ivp/cyclotomic.hpp"
#include "ivp/dedekind.hpp"
#include "ivp/families.hpp"
#include "ivp/integrality.hpp"
#include "ivp/newton.hpp"
#include "ivp/poly_io.hpp"
#include "ivp/ultrametric.hpp"

namespace ivp {

int VerificationReport::failed() const {
    int n = 0;
    for (const auto& it : items) n += it.status == VerifyStatus::Fail;
    return n;
}

int VerificationReport::inconclusive() const {
    int n = 0;
    for (const auto& it : items) n += it.status == VerifyStatus::Inconclusive;
    return n;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& it : items) {
        const char* st = it.status == VerifyStatus::Pass ? "pass"
                         : it.status == VerifyStatus::Fail ? "fail"
                                                           : "inconclusive";
        arr.push_back(nlohmann::json{{"anchor", it.anchor},
                                     {"command", it.command},
                                     {"expected", it.expected},
                                     {"actual", it.actual},
                                     {"status", st}});
    }
    return nlohmann::json{
        {"suite", suite}, {"items", arr}, {"toolchain", toolchain}, {"failed", failed()}};
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << " (" << toolchain << ")\n";
    for (const auto& it : items) {
        const char* st = it.status == VerifyStatus::Pass ? "PASS"
                         : it.status == VerifyStatus::Fail ? "FAIL"
                                                           : "INCONCLUSIVE";
        os << "[" << st << "] " << it.anchor << ": " << it.command << "\n";
        if (it.status != VerifyStatus::Pass)
            os << "         expected " << it.expected << ", got " << it.actual << "\n";
    }
    os << items.size() << " items, " << failed() << " failed, " << inconclusive()
       << " inconclusive\n";
    return os.str();
}

namespace {

struct Check {
    std::string anchor;
    std::string command;
    std::function<void(VerifyItem&, uint64_t seed)> run;
};

void set(VerifyItem& it, bool ok, const std::string& expected, const std::string& actual) {
    it.expected = expected;
    it.actual = actual;
    it.status = ok ? VerifyStatus::Pass : VerifyStatus::Fail;
}

RatPoly tower_min_poly(int64_t p, int n, int k) {
    Int nk = pow_int(Int(n), static_cast<unsigned long>(k));
    Int mk = (nk - 1) / (n - 1);
    return RatPoly::monomial(1, static_cast<size_t>(nk.get_ui())) -
           RatPoly::constant(Rat(pow_int(Int(static_cast<long>(p)), mk.get_ui())));
}

// char poly of h(alpha)/d as a rational polynomial
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

const std::vector<Check>& registry() {
    static const std::vector<Check> checks = [] {
        std::vector<Check> v;

        v.push_back({"tower-power-generator",
                     "X^n/p maps each tower element p^{b_k} to the previous one",
                     [](VerifyItem& it, uint64_t) {
                         std::ostringstream bad;
                         int checked = 0;
                         for (int64_t p : {2, 3, 5})
                             for (int n : {2, 3})
                                 for (int k = 1; k <= 4; ++k) {
                                     AlgebraicElement e(
                                         tower_min_poly(p, n, k),
                                         RatPoly::monomial(1, static_cast<size_t>(n)));
                                     bool integral = is_integral_value(e, Int(p));
                                     RatPoly value = scaled_char_poly(e, Int(p));
                                     RatPoly prev = tower_min_poly(p, n, k - 1);
                                     bool divisible = prev.divides(value);
                                     ++checked;
                                     if (!integral || !divisible)
                                         bad << " (p=" << p << ",n=" << n << ",k=" << k << ")";
                                 }
                         set(it, bad.str().empty(), "integral + divisibility on 24 cases",
                             bad.str().empty() ? "all " + std::to_string(checked) + " hold"
                                               : "failures:" + bad.str());
                     }});

        v.push_back({"psi-lcm", "psi(p,n) mod p equals the lcm of all degree<=n polynomials",
                     [](VerifyItem& it, uint64_t) {
                         std::ostringstream bad;
                         for (auto [p, n] : std::vector<std::pair<int64_t, int>>{
                                  {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}})
                             if (!psi_lcm_oracle(p, n)) bad << " (" << p << "," << n << ")";
                         set(it, bad.str().empty(), "equality for 5 parameter pairs",
                             bad.str().empty() ? "all hold" : "failures:" + bad.str());
                     }});

        v.push_back(
            {"psi-degree-separation",
             "psi(2,2)/2 integral on degree<=2 integers, not at a degree-3 witness",
             [](VerifyItem& it, uint64_t) {
                 auto corpus = irreducible_corpus(2, 10, 55);
                 size_t ok = 0;
                 for (const auto& m : corpus)
                     if (psi_membership_check(2, 2, AlgebraicElement(m))) ++ok;
                 for (long z : {-2L, -1L, 0L, 1L, 2L})
                     if (psi_membership_check(2, 2, AlgebraicElement::from_integer(Int(z)))) ++ok;
                 bool witness_fails =
                     !psi_membership_check(2, 2, AlgebraicElement(RatPoly::from_ints({1, 1, 0, 1})));
                 size_t total = corpus.size() + 5;
                 set(it, ok == total && witness_fails,
                     "all " + std::to_string(total) + " members + failing witness",
                     std::to_string(ok) + "/" + std::to_string(total) +
                         (witness_fails ? ", witness fails" : ", witness DOES NOT fail"));
             }});

        v.push_back(
            {"dedekind-fcn-grid",
             "index divisibility for X^n + c^3 X^{n-1} + c^2 over c in {2,3,6}, n in 2..7",
             [](VerifyItem& it, uint64_t) {
                 std::ostringstream bad;
                 for (long c : {2L, 3L, 6L})
                     for (int n = 2; n <= 7; ++n) {
                         std::vector<Rat> coeffs(static_cast<size_t>(n) + 1, Rat(0));
                         coeffs[0] = Rat(c * c);
                         coeffs[static_cast<size_t>(n - 1)] = Rat(c * c * c);
                         coeffs[static_cast<size_t>(n)] = 1;
                         RatPoly f{std::move(coeffs)};
                         for (int64_t p : {2, 3, 5, 7}) {
                             bool divides = dedekind_divides_index(f, p).divides;
                             if (c % p == 0 && !divides)
                                 bad << " (c=" << c << ",n=" << n << ",p=" << p << ":want-true)";
                             if (n % p == 0 && c % p != 0 && divides)
                                 bad << " (c=" << c << ",n=" << n << ",p=" << p << ":want-false)";
                         }
                     }
                 // classical quadratic cross-check at 2
                 const std::vector<std::pair<long, bool>> quad = {{2, false}, {3, false},
                                                                  {5, true},  {6, false},
                                                                  {7, false}, {10, false}};
                 for (auto [d, want] : quad) {
                     RatPoly f = RatPoly::from_ints({-d, 0, 1});
                     if (dedekind_divides_index(f, 2).divides != want)
                         bad << " (x^2-" << d << " at 2)";
                 }
                 set(it, bad.str().empty(), "grid + quadratic oracle",
                     bad.str().empty() ? "all hold" : "failures:" + bad.str());
             }});

        v.push_back(
            {"cyclotomic-unit-valuation",
             "valuation of 1 - zeta_{p^k} is 1/(p^{k-1}(p-1)), read off a Newton polygon",
             [](VerifyItem& it, uint64_t) {
                 std::ostringstream bad;
                 auto check = [&](int64_t p, int k) {
                     Int pk = pow_int(Int(static_cast<long>(p)), static_cast<unsigned long>(k));
                     RatPoly shifted = cyclotomic(static_cast<unsigned>(pk.get_ui())).shifted(1);
                     auto rv = root_valuations(shifted, Int(static_cast<long>(p)));
                     Int denom = pow_int(Int(static_cast<long>(p)),
                                         static_cast<unsigned long>(k - 1)) *
                                 (p - 1);
                     Rat want(Int(1), denom);
                     want.canonicalize();
                     unsigned phi = euler_phi(static_cast<unsigned>(pk.get_ui()));
                     if (!(rv.size() == 1 && rv[0].first == Val(want) &&
                           rv[0].second == static_cast<int>(phi)))
                         bad << " (p=" << p << ",k=" << k << ")";
                 };
                 for (int k = 1; k <= 6; ++k) check(2, k);
                 for (int k = 1; k <= 3; ++k) check(3, k);
                 set(it, bad.str().empty(), "single segment with the stated slope",
                     bad.str().empty() ? "all 9 cases hold" : "failures:" + bad.str());
             }});

        v.push_back(
            {"prime-roots-stationary",
             "differences of prime-index roots of unity are units at every prime",
             [](VerifyItem& it, uint64_t) {
                 std::ostringstream bad;
                 const std::vector<unsigned> primes = {2, 3, 5, 7, 11, 13};
                 for (size_t a = 0; a < primes.size(); ++a)
                     for (size_t b = a + 1; b < primes.size(); ++b) {
                         RatPoly D = difference_poly(cyclotomic(primes[a]), cyclotomic(primes[b]));
                         for (long l : {2L, 3L, 5L, 7L}) {
                             auto rv = root_valuations(D, Int(l));
                             bool flat = rv.size() == 1 && rv[0].first == Val(Rat(0));
                             if (!flat) bad << " (" << primes[a] << "," << primes[b] << ";" << l << ")";
                         }
                     }
                 set(it, bad.str().empty(), "all difference valuations 0",
                     bad.str().empty() ? "60 pair/prime cases hold" : "failures:" + bad.str());
             }});

        v.push_back({"cover-residue-duality",
                     "minimal ball covers match residue class counts on random ultrametrics",
                     [](VerifyItem& it, uint64_t seed) {
                         std::ostringstream bad;
                         int matrices = 0;
                         for (uint64_t s = 1; s <= 200; ++s) {
                             size_t n = 3 + static_cast<size_t>((s + seed) % 6);  // 3..8
                             ValuationMatrix m = random_tree_matrix(n, s * 2654435761ULL + seed);
                             ++matrices;
                             CrosscheckReport rep = theorem24_crosscheck(m);
                             if (!rep.all_ok) bad << " seed" << s;
                         }
                         set(it, bad.str().empty(), "equality on every grid point",
                             bad.str().empty() ? std::to_string(matrices) + " matrices hold"
                                               : "failures:" + bad.str());
                     }});

        v.push_back(
            {"family-classifications",
             "prefix classification of the three generator families",
             [](VerifyItem& it, uint64_t) {
                 std::ostringstream bad;
                 // 2-power roots of unity at 2: divergent with gauge 1/2, 1/4, 1/8
                 FamilyParams rp;
                 rp.p = 2;
                 rp.len = 4;
                 auto ru = make_family(FamilyKind::RootsOfUnityPPower, rp);
                 auto vd = family_verdict(ru, Int(2));
                 if (vd.classification.kind != SeqKind::PseudoDivergent ||
                     vd.classification.gauge !=
                         std::vector<Val>{Val(Rat(1, 2)), Val(Rat(1, 4)), Val(Rat(1, 8))} ||
                     vd.classification.hint != BreadthHint::MaximalIdeal)
                     bad << " (2-power-roots at 2)";
                 auto vq = family_verdict(ru, Int(3));
                 if (vq.classification.kind != SeqKind::PseudoStationary ||
                     vq.classification.hint != BreadthHint::WholeRing)
                     bad << " (2-power-roots at 3)";
                 // prime-index roots of unity: stationary with gauge 0
                 FamilyParams pp;
                 pp.len = 5;
                 auto pr = make_family(FamilyKind::RootsOfUnityPrimes, pp);
                 for (long l : {2L, 7L}) {
                     auto vr = family_verdict(pr, Int(l));
                     if (vr.classification.kind != SeqKind::PseudoStationary ||
                         vr.classification.gauge != std::vector<Val>{Val(Rat(0))} ||
                         vr.classification.hint != BreadthHint::WholeRing)
                         bad << " (prime-roots at " << l << ")";
                 }
                 // geometric partial sums: v(s_j - s_k) = min(j,k) + 1, 1-based
                 {
                     const size_t n = 5;
                     std::vector<Val> upper;
                     for (size_t i = 1; i <= n; ++i)
                         for (size_t j = i + 1; j <= n; ++j)
                             upper.push_back(Val(Rat(static_cast<long>(i + 1))));
                     auto rep = classify_prefix(ValuationMatrix::from_upper(n, upper));
                     if (rep.kind != SeqKind::PseudoConvergent) bad << " (partial sums)";
                 }
                 set(it, bad.str().empty(), "divergent / stationary / convergent",
                     bad.str().empty() ? "all three classified as stated" : "failures:" + bad.str());
             }});

        v.push_back({"scaled-ring-closure",
                     "X/2 is integral-valued on sampled elements of the doubled ring",
                     [](VerifyItem& it, uint64_t) {
                         FamilyParams sp;
                         sp.d = 2;
                         sp.len = 55;
                         auto fam = make_family(FamilyKind::ScaledRing, sp);
                         IvpGenerator gen{RatPoly::x(), Int(2)};
                         size_t ok = 0;
                         for (const auto& e : fam.elements)
                             if (in_Sfd(e, gen)) ++ok;
                         set(it, ok == fam.elements.size() && ok >= 50,
                             "membership on >= 50 elements",
                             std::to_string(ok) + "/" + std::to_string(fam.elements.size()));
                     }});

        v.push_back(
            {"z-closure-binomial",
             "every non-rational quadratic integer of height <= 10 has a binomial witness",
             [](VerifyItem& it, uint64_t) {
                 std::ostringstream bad;
                 int count = 0;
                 for (long a = -10; a <= 10; ++a)
                     for (long b = -10; b <= 10; ++b) {
                         RatPoly f = RatPoly::from_ints({b, a, 1});
                         IrredCheck chk = certify_irreducible(f);
                         if (chk.outcome != IrredOutcome::Irreducible) continue;
                         ++count;
                         auto w = z_closure_witness(AlgebraicElement(f), 8);
                         if (!w) bad << " (a=" << a << ",b=" << b << ")";
                     }
                 set(it, bad.str().empty(),
                     "witness with k <= 8 for all " + std::to_string(count) + " elements",
                     bad.str().empty() ? "all found" : "missing:" + bad.str());
             }});

        v.push_back(
            {"ef-bound-generator",
             "(X^q - X)^{e0}/p integral wherever splitting pairs obey the bounds",
             [](VerifyItem& it, uint64_t) {
                 std::ostringstream bad;
                 auto corpus = irreducible_corpus(3, 6, 40);
                 int tested = 0;
                 for (auto [p, e0, f0] : std::vector<std::tuple<int64_t, int, int>>{
                          {2, 1, 1}, {2, 2, 1}, {3, 1, 2}}) {
                     IvpGenerator gen = ef_bound_generator(p, e0, f0);
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
                         if (!is_integral_value(el.with_expr(value), gen.d))
                             bad << " (" << poly_text(m) << " at p=" << p << ")";
                     }
                 }
                 set(it, bad.str().empty() && tested > 0,
                     "integrality on every in-bounds element",
                     bad.str().empty() ? std::to_string(tested) + " elements hold"
                                       : "failures:" + bad.str());
             }});

        v.push_back(
            {"index-one-examples", "index certificates for three minimal polynomials",
             [](VerifyItem& it, uint64_t) {
                 std::ostringstream bad;
                 if (index_one_certificate(RatPoly::from_ints({-1, -1, 1})).index_is_one !=
                     TriState::Yes)
                     bad << " (x^2-x-1:want-yes)";
                 if (index_one_certificate(RatPoly::from_ints({-8, 0, 1})).index_is_one !=
                     TriState::No)
                     bad << " (x^2-8:want-no)";
                 if (index_one_certificate(RatPoly::from_ints({1, 0, 0, 1, 0, 0, 1}))
                         .index_is_one != TriState::Yes)
                     bad << " (x^6+x^3+1:want-yes)";
                 set(it, bad.str().empty(), "yes / no / yes",
                     bad.str().empty() ? "as stated" : "failures:" + bad.str());
             }});

        v.push_back({"fcn-root-valuation",
                     "roots of X^n + c^3 X^{n-1} + c^2 have valuation 2 v_p(c)/n at p | c",
                     [](VerifyItem& it, uint64_t) {
                         FamilyParams fp;
                         fp.c = 2;
                         fp.len = 4;
                         auto fam = make_family(FamilyKind::Fcn, fp);
                         auto rep = crosscheck_family(fam, Int(2));
                         set(it, rep.all_ok && rep.checked > 0,
                             "formula matches recomputed valuations",
                             rep.all_ok ? std::to_string(rep.checked) + " checks hold"
                                        : "mismatch found");
                     }});

        v.push_back({"doubled-ring-membership",
                     "X/2 separates 2*sqrt(2) from sqrt(2)",
                     [](VerifyItem& it, uint64_t) {
                         bool yes = is_integral_value(
                             AlgebraicElement(RatPoly::from_ints({-8, 0, 1})), Int(2));
                         bool no = !is_integral_value(
                             AlgebraicElement(RatPoly::from_ints({-2, 0, 1})), Int(2));
                         set(it, yes && no, "integral at 2*sqrt(2), not at sqrt(2)",
                             std::string(yes ? "integral" : "NOT integral") + " / " +
                                 (no ? "non-integral" : "INTEGRAL"));
                     }});

        return v;
    }();
    return checks;
}

}  // namespace

std::vector<std::string> verify_anchors() {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.push_back(c.anchor);
    return out;
}

VerificationReport run_verify_paper(const std::string& filter, uint64_t seed, int jobs) {
    const auto& checks = registry();
    std::vector<size_t> selected;
    for (size_t i = 0; i < checks.size(); ++i)
        if (filter.empty() || checks[i].anchor.find(filter) != std::string::npos)
            selected.push_back(i);
    if (selected.empty())
        throw std::invalid_argument("run_verify_paper: no check matches filter '" + filter + "'");

    VerificationReport rep;
    rep.suite = filter.empty() ? "full" : "filter:" + filter;
    rep.items.resize(selected.size());
    if (jobs < 1) jobs = 1;

    std::vector<std::future<void>> inflight;
    size_t next = 0;
    auto launch = [&](size_t slot) {
        size_t idx = selected[slot];
        rep.items[slot].anchor = checks[idx].anchor;
        rep.items[slot].command = checks[idx].command;
        inflight.push_back(std::async(std::launch::async, [&rep, slot, idx, seed] {
            try {
                registry()[idx].run(rep.items[slot], seed);
            } catch (const std::exception& ex) {
                rep.items[slot].status = VerifyStatus::Fail;
                rep.items[slot].actual = std::string("exception: ") + ex.what();
            }
        }));
    };
    while (next < selected.size() || !inflight.empty()) {
        while (next < selected.size() && inflight.size() < static_cast<size_t>(jobs))
            launch(next++);
        inflight.front().wait();
        inflight.erase(inflight.begin());
    }
    return rep;
}

}  // namespace ivp

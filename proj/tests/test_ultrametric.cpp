#include <doctest.h>

#include "ivp/ultrametric.hpp"

using namespace ivp;

namespace {

// v(zeta_{2^i} - zeta_{2^j}) = 1/2^{max(i,j)-1} with 1-based exponents
ValuationMatrix two_power_roots(size_t n) {
    std::vector<Val> upper;
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = i + 1; j <= n; ++j) {
            Rat v(Int(1), pow_int(Int(2), static_cast<unsigned long>(j - 1)));
            v.canonicalize();
            upper.push_back(Val(v));
        }
    return ValuationMatrix::from_upper(n, upper);
}

ValuationMatrix constant_matrix(size_t n, const Val& v) {
    std::vector<Val> upper(n * (n - 1) / 2, v);
    return ValuationMatrix::from_upper(n, upper);
}

// v(s_j - s_k) = min(j,k) + 1 for partial geometric sums, 1-based
ValuationMatrix partial_sums(size_t n) {
    std::vector<Val> upper;
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = i + 1; j <= n; ++j) upper.push_back(Val(Rat(static_cast<long>(i + 1))));
    return ValuationMatrix::from_upper(n, upper);
}

// integers 0..3 with the 2-adic metric
ValuationMatrix four_integers() {
    std::vector<Val> upper = {Val(Rat(0)), Val(Rat(1)), Val(Rat(0)),
                              Val(Rat(0)), Val(Rat(1)), Val(Rat(0))};
    return ValuationMatrix::from_upper(4, upper);
}

}  // namespace

TEST_CASE("construction validates the ultrametric law") {
    // v(a-b) = 2, v(b-c) = 2, v(a-c) = 1 is impossible
    CHECK_THROWS_AS(ValuationMatrix::from_upper(
                        3, {Val(Rat(2)), Val(Rat(1)), Val(Rat(2))}),
                    std::domain_error);
    // equality must hold when the two smaller values differ
    CHECK_THROWS_AS(ValuationMatrix::from_upper(
                        3, {Val(Rat(1)), Val(Rat(3)), Val(Rat(2))}),
                    std::domain_error);
    CHECK_NOTHROW(ValuationMatrix::from_upper(3, {Val(Rat(1)), Val(Rat(1)), Val(Rat(2))}));
    // diagonal and symmetry
    CHECK_THROWS_AS(ValuationMatrix(2, {Val(Rat(1)), Val(Rat(0)), Val(Rat(0)), Val(Rat(1))}),
                    std::domain_error);
}

TEST_CASE("classification of the three model prefixes") {
    ClassificationReport div = classify_prefix(two_power_roots(4));
    CHECK(div.kind == SeqKind::PseudoDivergent);
    CHECK(div.gauge == std::vector<Val>{Val(Rat(1, 2)), Val(Rat(1, 4)), Val(Rat(1, 8))});
    CHECK(div.breadth == Val(Rat(1, 8)));
    CHECK(div.hint == BreadthHint::MaximalIdeal);
    CHECK(div.prefix_certified);
    CHECK(div.prefix_len == 4);

    ClassificationReport stat = classify_prefix(constant_matrix(5, Val(Rat(0))));
    CHECK(stat.kind == SeqKind::PseudoStationary);
    CHECK(stat.gauge == std::vector<Val>{Val(Rat(0))});
    CHECK(stat.hint == BreadthHint::WholeRing);

    ClassificationReport conv = classify_prefix(partial_sums(5));
    CHECK(conv.kind == SeqKind::PseudoConvergent);
    for (size_t i = 0; i + 1 < conv.gauge.size(); ++i) CHECK(conv.gauge[i] < conv.gauge[i + 1]);
    CHECK(conv.hint == BreadthHint::ProperBall);
}

TEST_CASE("stationary with positive gauge hints at a proper ball") {
    ClassificationReport rep = classify_prefix(constant_matrix(4, Val(Rat(1, 2))));
    CHECK(rep.kind == SeqKind::PseudoStationary);
    CHECK(rep.hint == BreadthHint::ProperBall);
    REQUIRE(rep.hint_radius.has_value());
    CHECK(*rep.hint_radius == Val(Rat(1, 2)));
}

TEST_CASE("order sensitivity") {
    // reversing a convergent prefix gives a divergent one
    const size_t n = 5;
    ValuationMatrix conv = partial_sums(n);
    std::vector<Val> upper;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) upper.push_back(conv.at(n - 1 - i, n - 1 - j));
    ValuationMatrix rev = ValuationMatrix::from_upper(n, upper);
    CHECK(classify_prefix(rev).kind == SeqKind::PseudoDivergent);

    // permuting a stationary prefix never changes the verdict
    CHECK(classify_prefix(constant_matrix(4, Val(Rat(2)))).kind == SeqKind::PseudoStationary);
}

TEST_CASE("too short and mixed prefixes") {
    CHECK(classify_prefix(constant_matrix(2, Val(Rat(0)))).kind == SeqKind::None);
    // the 2-adic integers 0, 2, 1, 3 in that order: genuinely ultrametric, no pattern
    ValuationMatrix mixed = ValuationMatrix::from_upper(
        4, {Val(Rat(1)), Val(Rat(0)), Val(Rat(0)), Val(Rat(0)), Val(Rat(0)), Val(Rat(1))});
    ClassificationReport rep = classify_prefix(mixed);
    CHECK(rep.kind == SeqKind::None);
    CHECK(rep.reason.find("mixed") != std::string::npos);
    auto scan = divergent_subsequence_scan(mixed);
    CHECK(scan.size() >= 2);
}

TEST_CASE("ball cover on four integers") {
    ValuationMatrix m = four_integers();
    CHECK(ball_cover(m, Val(Rat(1))) == std::vector<size_t>{0, 1});
    CHECK(ball_cover(m, Val(Rat(2))).size() == 4);
    CHECK(ball_cover(constant_matrix(1, Val(Rat(0))), Val(Rat(5))) == std::vector<size_t>{0});
    CHECK_THROWS_AS(ball_cover(m, Val(Rat(0))), std::domain_error);
}

TEST_CASE("residue classes on four integers") {
    ValuationMatrix m = four_integers();
    auto classes = residue_classes(m, Val(Rat(1)));
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == std::vector<size_t>{0, 2});
    CHECK(classes[1] == std::vector<size_t>{1, 3});

    auto singletons = residue_classes(constant_matrix(5, Val(Rat(0))), Val(Rat(1)));
    CHECK(singletons.size() == 5);
}

TEST_CASE("stationary matrix covered by one ball below its gauge") {
    ValuationMatrix m = constant_matrix(4, Val(Rat(1, 2)));
    CHECK(ball_cover(m, Val(Rat(1, 4))).size() == 1);
    CHECK(residue_classes(m, Val(Rat(1, 4))).size() == 1);
}

TEST_CASE("cover size equals residue class count on random ultrametrics") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        ValuationMatrix m = random_tree_matrix(3 + seed % 6, seed * 977);
        CrosscheckReport rep = theorem24_crosscheck(m);
        CAPTURE(seed);
        CHECK(rep.all_ok);
        CHECK(!rep.items.empty());
        // the gamma above every entry isolates all points
        CHECK(rep.items.back().class_count == m.size());
    }
}

TEST_CASE("divergent prefix sits inside a single ball at its gauge floor") {
    CrosscheckReport rep = theorem24_crosscheck(two_power_roots(4));
    CHECK(rep.all_ok);
    REQUIRE(!rep.breadth_notes.empty());
    CHECK(rep.breadth_notes[0].find("holds") != std::string::npos);
}

#include <doctest.h>

#include "ivp/families.hpp"
#include "ivp/fppoly.hpp"
#include "ivp/integrality.hpp"

using namespace ivp;

TEST_CASE("psi products") {
    CHECK(psi(2, 1) == RatPoly::from_ints({0, -1, 1}));
    CHECK(psi(3, 1) == RatPoly::from_ints({0, -1, 0, 1}));
    RatPoly p22 = psi(2, 2);
    CHECK(p22.degree() == 6);
    CHECK(p22 == (RatPoly::monomial(1, 4) - RatPoly::x()) * (RatPoly::monomial(1, 2) - RatPoly::x()));
}

TEST_CASE("psi lcm oracle") {
    // every parameter pair within the enumeration bound p^n <= 81
    for (auto [p, n] : std::vector<std::pair<int64_t, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 4},
                                                            {2, 5}, {2, 6}, {3, 1}, {3, 2},
                                                            {3, 3}, {3, 4}, {5, 1}, {5, 2},
                                                            {7, 1}, {7, 2}, {11, 1}, {13, 1}}) {
        CAPTURE(p);
        CAPTURE(n);
        CHECK(psi_lcm_oracle(p, n));
    }
    // the lcm mod 2 at level 2 is x^2 (x+1)^2 (x^2+x+1), degree 6
    FpPoly x(2, {0, 1}), x1(2, {1, 1}), q(2, {1, 1, 1});
    FpPoly expect = x * x * x1 * x1 * q;
    CHECK(FpPoly::from_ratpoly(psi(2, 2), 2) == expect);
    CHECK_THROWS_AS(psi_lcm_oracle(2, 7), std::domain_error);
}

TEST_CASE("integral value decisions") {
    CHECK(is_integral_value(AlgebraicElement(RatPoly::from_ints({-8, 0, 1})), 2));
    CHECK(!is_integral_value(AlgebraicElement(RatPoly::from_ints({-2, 0, 1})), 2));
    AlgebraicElement quart(RatPoly::from_ints({-8, 0, 0, 0, 1}), RatPoly::monomial(1, 2));
    CHECK(is_integral_value(quart, 2));
    CHECK_THROWS_AS(is_integral_value(quart, 0), std::domain_error);
}

TEST_CASE("every algebraic integer is integral with denominator 1") {
    for (const RatPoly& m : irreducible_corpus(3, 5, 25))
        CHECK(is_integral_value(AlgebraicElement(m), 1));
}

TEST_CASE("psi membership") {
    // (10 - 6 sqrt(2))/2 = 5 - 3 sqrt(2) is integral
    AlgebraicElement sqrt2(RatPoly::from_ints({-2, 0, 1}));
    CHECK(psi_membership_check(2, 2, sqrt2));
    // degree-3 separation witness
    AlgebraicElement beta(RatPoly::from_ints({1, 1, 0, 1}));
    CHECK(!psi_membership_check(2, 2, beta));
    // level 1 on rational integers (little Fermat)
    for (long m = -10; m <= 10; ++m)
        for (int64_t p : {2, 3, 5})
            CHECK(psi_membership_check(p, 1, AlgebraicElement::from_integer(Int(m))));
}

TEST_CASE("psi membership holds up to degree n and breaks at degree n + 1") {
    struct Case {
        int64_t p;
        int n;
        std::vector<long> witness;  // irreducible of degree n+1 mod p
    };
    const std::vector<Case> cases = {
        {2, 1, {1, 1, 1}},     // x^2 + x + 1
        {2, 2, {1, 1, 0, 1}},  // x^3 + x + 1
        {3, 1, {1, 0, 1}},     // x^2 + 1
    };
    for (const auto& c : cases) {
        CAPTURE(c.p);
        CAPTURE(c.n);
        for (const RatPoly& m : irreducible_corpus(std::min(c.n, 3), 10, 20))
            CHECK(psi_membership_check(c.p, c.n, AlgebraicElement(m)));
        for (long z : {-3L, 0L, 5L})
            CHECK(psi_membership_check(c.p, c.n, AlgebraicElement::from_integer(Int(z))));
        CHECK(!psi_membership_check(c.p, c.n, AlgebraicElement(RatPoly::from_ints(c.witness))));
    }
}

TEST_CASE("kummer splitting") {
    SplittingReport a = kummer_splitting(RatPoly::from_ints({1, 0, 1}), 5);
    CHECK(a.index_ok);
    CHECK(a.pairs == std::vector<std::pair<int, int>>{{1, 1}, {1, 1}});

    SplittingReport b = kummer_splitting(RatPoly::from_ints({1, 0, 1}), 2);
    CHECK(b.index_ok);
    CHECK(b.pairs == std::vector<std::pair<int, int>>{{2, 1}});

    SplittingReport c = kummer_splitting(RatPoly::from_ints({1, 0, 0, 1, 0, 0, 1}), 3);
    CHECK(c.index_ok);
    CHECK(c.pairs == std::vector<std::pair<int, int>>{{6, 1}});

    // index obstruction: 2 divides the index of 2^(3/2)
    SplittingReport d = kummer_splitting(RatPoly::from_ints({-8, 0, 1}), 2);
    CHECK(!d.index_ok);
    CHECK(d.pairs.empty());
    CHECK(d.reason.find("index obstruction") != std::string::npos);
}

TEST_CASE("splitting degrees sum to the field degree") {
    for (const RatPoly& m : irreducible_corpus(4, 4, 30)) {
        for (int64_t p : {2, 3, 5}) {
            SplittingReport rep = kummer_splitting(m, p);
            if (!rep.index_ok) continue;
            int total = 0;
            for (auto [e, f] : rep.pairs) total += e * f;
            CHECK(total == m.degree());
        }
    }
}

TEST_CASE("double-boundedness generator") {
    IvpGenerator a = ef_bound_generator(2, 1, 1);
    CHECK(a.f == RatPoly::from_ints({0, -1, 1}));
    CHECK(a.d == 2);
    IvpGenerator b = ef_bound_generator(2, 2, 1);
    CHECK(b.f == RatPoly::from_ints({0, -1, 1}).pow(2));
    IvpGenerator c = ef_bound_generator(3, 1, 2);
    CHECK(c.f == RatPoly::monomial(1, 9) - RatPoly::x());
    CHECK(c.d == 3);
    CHECK_THROWS_AS(ef_bound_generator(2, 1, 5), std::domain_error);
    CHECK_THROWS_AS(ef_bound_generator(5, 1, 3), std::domain_error);  // 5^6 > 729
}

TEST_CASE("forced integrality constraints from an index report") {
    AlgebraicElement phi(RatPoly::from_ints({-1, -1, 1}));
    IndexReport rep = index_one_certificate(phi.min_poly());
    RatPoly half_x({Rat(0), Rat(1, 2)});
    PrimeConstraint pc = lemma43_constraint(half_x, phi, rep);
    CHECK(pc.certainly_contains(2));
    CHECK(pc.certainly_contains(97));
    CHECK(!pc.f_integral);
    // x/2 has a 2-adic denominator yet is forced 2-integral: contradiction
    // certificate that x/2 is not integral-valued at the golden ratio
    CHECK(!is_integral_value(phi.with_expr(half_x), 1));

    IndexReport rep2 = index_one_certificate(RatPoly::from_ints({-8, 0, 1}));
    AlgebraicElement e2(RatPoly::from_ints({-8, 0, 1}));
    PrimeConstraint pc2 = lemma43_constraint(RatPoly({Rat(0), Rat(1, 3)}), e2, rep2);
    CHECK(!pc2.certainly_contains(2));
    CHECK(pc2.certainly_contains(3));
    CHECK(pc2.certainly_contains(5));

    // vacuous pass: integral f
    AlgebraicElement cubic(RatPoly::from_ints({4, 0, 8, 1}));
    PrimeConstraint pc3 =
        lemma43_constraint(RatPoly::monomial(1, 2), cubic, index_one_certificate(cubic.min_poly()));
    CHECK(pc3.f_integral);

    CHECK_THROWS_AS(lemma43_constraint(RatPoly::monomial(1, 2), phi, rep), std::domain_error);
}

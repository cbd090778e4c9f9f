#include <doctest.h>

#include "ivp/closure.hpp"
#include "ivp/families.hpp"

using namespace ivp;

TEST_CASE("membership in S(f, d)") {
    IvpGenerator half_x{RatPoly::x(), Int(2)};
    CHECK(in_Sfd(AlgebraicElement(RatPoly::from_ints({-8, 0, 1})), half_x));   // 2 sqrt(2)
    CHECK(!in_Sfd(AlgebraicElement(RatPoly::from_ints({-2, 0, 1})), half_x));  // sqrt(2)
    // d = 1 generators are inert
    IvpGenerator inert{RatPoly::from_ints({0, 5, 0, 1}), Int(1)};
    CHECK(in_Sfd(AlgebraicElement(RatPoly::from_ints({-2, 0, 1})), inert));
    CHECK_THROWS_AS(in_Sfd(AlgebraicElement(RatPoly::from_ints({-2, 0, 1})),
                           IvpGenerator{RatPoly({Rat(1, 2), Rat(1)}), Int(2)}),
                    std::domain_error);
}

TEST_CASE("membership is conjugation-invariant") {
    // x and -x present conjugate values of the same element
    RatPoly min = RatPoly::from_ints({-8, 0, 1});
    IvpGenerator g{RatPoly::x(), Int(2)};
    CHECK(in_Sfd(AlgebraicElement(min, RatPoly::x()), g) ==
          in_Sfd(AlgebraicElement(min, -RatPoly::x()), g));
}

TEST_CASE("closure membership over generator lists") {
    std::vector<IvpGenerator> gens = {{RatPoly::x(), Int(2)}};
    CHECK(closure_member(gens, AlgebraicElement(RatPoly::from_ints({4, 2, 1}))));  // 2 zeta_3
    CHECK(!closure_member(gens, AlgebraicElement(RatPoly::from_ints({-2, 0, 1}))));
    CHECK(closure_member({}, AlgebraicElement(RatPoly::from_ints({-2, 0, 1}))));
    // d = 1 entries are skipped
    std::vector<IvpGenerator> all_inert = {{RatPoly::x(), Int(1)}};
    CHECK(closure_member(all_inert, AlgebraicElement(RatPoly::from_ints({-2, 0, 1}))));
}

TEST_CASE("tower generator certifies its own prefix") {
    FamilyParams p;
    p.p = 2;
    p.n = 2;
    p.len = 4;
    SequenceSample fam = make_family(FamilyKind::NthRootTower, p);
    REQUIRE(fam.generator.has_value());
    for (const auto& e : fam.elements) CHECK(in_Sfd(e, *fam.generator));
}

TEST_CASE("binomial witnesses against the closure of the rational integers") {
    auto w1 = z_closure_witness(AlgebraicElement(RatPoly::from_ints({-2, 0, 1})), 8);
    REQUIRE(w1.has_value());
    CHECK(w1->k == 2);
    CHECK(w1->char_poly == RatPoly({Rat(1, 2), Rat(-2), Rat(1)}));

    auto w2 = z_closure_witness(AlgebraicElement(RatPoly::from_ints({-1, -1, 1})), 8);
    REQUIRE(w2.has_value());
    CHECK(w2->k == 2);
    // the value is the rational 1/2, seen through a degree-2 field
    CHECK(w2->char_poly == RatPoly({Rat(1, 4), Rat(-1), Rat(1)}));

    CHECK(!z_closure_witness(AlgebraicElement::from_integer(Int(7)), 8).has_value());
    CHECK(!z_closure_witness(AlgebraicElement::from_integer(Int(-3)), 8).has_value());
}

TEST_CASE("ten height-10 quadratics need the fifth binomial") {
    // C(alpha,2), C(alpha,3), C(alpha,4) are all integral at a root of
    // x^2 - x + 6 (they evaluate to -3, 2 - alpha and alpha), so the smallest
    // witness is k = 5
    AlgebraicElement e(RatPoly::from_ints({6, -1, 1}));
    CHECK(!z_closure_witness(e, 4).has_value());
    auto w = z_closure_witness(e, 5);
    REQUIRE(w.has_value());
    CHECK(w->k == 5);
}

TEST_CASE("witness budget") {
    AlgebraicElement e(RatPoly::from_ints({-2, 0, 1}));
    CHECK_THROWS_AS(z_closure_witness(e, 33), std::domain_error);  // 33 * 2 > 64
    CHECK_THROWS_AS(z_closure_witness(e, 0), std::domain_error);
}

TEST_CASE("non-integral presentations are rejected at the type level") {
    CHECK_THROWS_AS(AlgebraicElement(RatPoly({Rat(-1, 2), Rat(1)})), std::domain_error);
}

#include <doctest.h>

#include "ivp/dedekind.hpp"

using namespace ivp;

TEST_CASE("index divisibility fixed cases") {
    auto r1 = dedekind_divides_index(RatPoly::from_ints({4, 0, 8, 1}), 2);
    CHECK(r1.divides);
    REQUIRE(r1.witness.has_value());
    CHECK(r1.witness->lift() == RatPoly::x());

    CHECK(!dedekind_divides_index(RatPoly::from_ints({4, 0, 8, 1}), 3).divides);
    CHECK(!dedekind_divides_index(RatPoly::from_ints({-1, -1, 1}), 5).divides);
}

TEST_CASE("classical quadratic ring oracle") {
    // for squarefree d, the order Z[sqrt(d)] is maximal at 2 exactly when
    // d is 2 or 3 mod 4; index divisible by 2 exactly when d is 1 mod 4
    for (long d : {2L, 3L, 5L, 6L, 7L, 10L, -1L, -3L, -7L, 13L, 17L, 21L}) {
        bool divides = dedekind_divides_index(RatPoly::from_ints({-d, 0, 1}), 2).divides;
        bool classical = ((d % 4) + 4) % 4 == 1;
        CAPTURE(d);
        CHECK(divides == classical);
    }
}

TEST_CASE("coefficient-family grid") {
    for (long c : {2L, 3L, 6L}) {
        for (int n = 2; n <= 7; ++n) {
            std::vector<Rat> coeffs(static_cast<size_t>(n) + 1, Rat(0));
            coeffs[0] = Rat(c * c);
            coeffs[static_cast<size_t>(n - 1)] = Rat(c * c * c);
            coeffs[static_cast<size_t>(n)] = 1;
            RatPoly f{std::move(coeffs)};
            for (int64_t p : {2, 3, 5, 7}) {
                CAPTURE(c);
                CAPTURE(n);
                CAPTURE(p);
                bool divides = dedekind_divides_index(f, p).divides;
                if (c % p == 0) CHECK(divides);
                if (n % p == 0 && c % p != 0) CHECK(!divides);
            }
        }
    }
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(dedekind_divides_index(RatPoly::from_ints({1, 2, 2}), 2), std::domain_error);
    CHECK_THROWS_AS(dedekind_divides_index(RatPoly::from_ints({1, 2, 1}), 3), std::domain_error);
    CHECK_THROWS_AS(dedekind_divides_index(RatPoly({Rat(1, 2), Rat(1)}), 3), std::domain_error);
    CHECK_THROWS_AS(index_one_certificate(RatPoly::from_ints({0, 0, 1})), std::domain_error);
}

TEST_CASE("index-one certificates") {
    IndexReport a = index_one_certificate(RatPoly::from_ints({-1, -1, 1}));
    CHECK(a.index_is_one == TriState::Yes);
    CHECK(a.disc == 5);
    CHECK(a.unfactored_part == 1);
    CHECK(a.tested.empty());  // squarefree discriminant, nothing to test

    IndexReport b = index_one_certificate(RatPoly::from_ints({-8, 0, 1}));
    CHECK(b.index_is_one == TriState::No);
    REQUIRE(b.tested.size() == 1);
    CHECK(b.tested[0].p == 2);
    CHECK(b.tested[0].divides);
    CHECK(b.tested[0].witness.has_value());

    IndexReport c = index_one_certificate(RatPoly::from_ints({1, 0, 0, 1, 0, 0, 1}));
    CHECK(c.index_is_one == TriState::Yes);
    CHECK(abs(c.disc) == 19683);  // 3^9
    REQUIRE(c.tested.size() == 1);
    CHECK(!c.tested[0].divides);
}

TEST_CASE("verdict invariants and budget stability") {
    for (const auto& ci : std::vector<std::vector<long>>{
             {-1, -1, 1}, {-8, 0, 1}, {1, 0, 1}, {4, 0, 8, 1}, {1, 1, 0, 1}}) {
        RatPoly f = RatPoly::from_ints(ci);
        IndexReport rep = index_one_certificate(f);
        if (rep.index_is_one == TriState::Yes) {
            for (const auto& t : rep.tested) CHECK(!t.divides);
            CHECK(rep.unfactored_part == 1);
        }
        for (const auto& t : rep.tested) CHECK(t.witness.has_value() == t.divides);

        FactorBudget big;
        big.trial_bound = 2000000;
        big.rho_iterations = 6000000;
        CHECK(index_one_certificate(f, big).index_is_one == rep.index_is_one);
    }
}

TEST_CASE("integer factoring leaves honest leftovers under a tiny budget") {
    FactorBudget tiny;
    tiny.trial_bound = 10;
    tiny.rho_restarts = 0;
    tiny.rho_iterations = 1;
    // product of two 9-digit primes, far out of reach of the tiny budget
    Int n = Int("1000000007") * Int("1000000009");
    FactoredInteger fac = factor_integer(n, tiny);
    CHECK(!fac.complete());
    CHECK(fac.unfactored == n);

    FactoredInteger full = factor_integer(Int(2 * 2 * 3 * 19 * 19));
    CHECK(full.complete());
    REQUIRE(full.primes.size() == 3);
    CHECK(full.primes[0] == std::make_pair(Int(2), 2));
    CHECK(full.primes[1] == std::make_pair(Int(3), 1));
    CHECK(full.primes[2] == std::make_pair(Int(19), 2));
}

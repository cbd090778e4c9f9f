#include <doctest.h>

#include "ivp/poly_io.hpp"
#include "ivp/verify.hpp"

using namespace ivp;

TEST_CASE("polynomial text grammar") {
    CHECK(parse_poly("x^3 + 8*x^2 + 4") == RatPoly::from_ints({4, 0, 8, 1}));
    CHECK(parse_poly("x^2 - x - 1") == RatPoly::from_ints({-1, -1, 1}));
    CHECK(parse_poly("-x + 2") == RatPoly::from_ints({2, -1}));
    CHECK(parse_poly("1/2*x^2 - 3") == RatPoly({Rat(-3), Rat(0), Rat(1, 2)}));
    CHECK(parse_poly("3x^2") == RatPoly::from_ints({0, 0, 3}));  // * optional
    CHECK(parse_poly("7") == RatPoly::constant(7));
    CHECK(parse_poly("X^2+1") == RatPoly::from_ints({1, 0, 1}));
    CHECK(parse_poly("x + x") == RatPoly::from_ints({0, 2}));
    CHECK_THROWS_AS(parse_poly("x +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x ^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("2y"), std::invalid_argument);
}

TEST_CASE("text round trip") {
    for (const auto& text : {"x^3 + 8*x^2 + 4", "x^2 - x - 1", "1/2*x^6 - 3/4*x + 1"}) {
        RatPoly f = parse_poly(text);
        CHECK(parse_poly(poly_text(f)) == f);
    }
}

TEST_CASE("polynomial JSON form") {
    json j = json::parse(R"({"coeffs": ["4","0","8","1"]})");
    RatPoly f = poly_from_json(j);
    CHECK(f == RatPoly::from_ints({4, 0, 8, 1}));
    CHECK(poly_json(f) == j);
    // big integers as decimal strings survive
    RatPoly big({Rat(Int("123456789012345678901234567890")), Rat(1)});
    CHECK(poly_from_json(poly_json(big)) == big);
}

TEST_CASE("newton polygon JSON shape") {
    NewtonPolygon np = newton_polygon(RatPoly::from_ints({-8, 0, 1}), 2);
    json j = polygon_json(np);
    CHECK(j["prime"] == 2);
    CHECK(j["zero_roots"] == 0);
    REQUIRE(j["segments"].size() == 1);
    CHECK(j["segments"][0]["slope"] == "3/2");
    CHECK(j["segments"][0]["length"] == 2);
}

TEST_CASE("valuation matrix JSON round trip") {
    json j = json::parse(R"({"n":3,"entries":[["inf","1/2","1/2"],["1/2","inf","1/2"],["1/2","1/2","inf"]]})");
    ValuationMatrix m = matrix_from_json(j);
    CHECK(m.size() == 3);
    CHECK(m.at(0, 1) == Val(Rat(1, 2)));
    CHECK(m.at(2, 2).is_infinity());
    CHECK(matrix_from_json(matrix_json(m)).at(1, 2) == Val(Rat(1, 2)));
}

TEST_CASE("generator list JSON") {
    auto gens = gens_from_json(json::parse(R"([{"f":"x","d":2}])"));
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].f == RatPoly::x());
    CHECK(gens[0].d == 2);
    json j = gens_json(gens);
    CHECK(j[0]["f"] == "x");
    CHECK(j[0]["d"] == 2);
}

TEST_CASE("index report JSON uses decimal strings") {
    IndexReport rep = index_one_certificate(parse_poly("x^2 - 8"));
    json j = index_report_json(rep);
    CHECK(j["disc"] == "32");
    CHECK(j["index_is_one"] == "no");
    CHECK(j["tested_primes"][0]["p"] == "2");
}

TEST_CASE("verification report is deterministic and filterable") {
    VerificationReport a = run_verify_paper("psi-lcm");
    VerificationReport b = run_verify_paper("psi-lcm");
    CHECK(a.to_json() == b.to_json());
    CHECK(a.items.size() == 1);
    CHECK(a.failed() == 0);
    CHECK_THROWS_AS(run_verify_paper("NoSuchAnchor"), std::invalid_argument);
    // registration order survives concurrency
    VerificationReport c = run_verify_paper("index", 0, 4);
    REQUIRE(c.items.size() >= 1);
}

TEST_CASE("val parsing") {
    CHECK(Val::parse("inf").is_infinity());
    CHECK(Val::parse("3/2") == Val(Rat(3, 2)));
    CHECK(Val::parse("-1") == Val(Rat(-1)));
    CHECK_THROWS_AS(Val::parse("x"), std::invalid_argument);
}

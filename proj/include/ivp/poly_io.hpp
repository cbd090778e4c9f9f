#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ivp/dedekind.hpp"
#include "ivp/families.hpp"
#include "ivp/integrality.hpp"
#include "ivp/newton.hpp"
#include "ivp/ratpoly.hpp"
#include "ivp/ultrametric.hpp"

namespace ivp {

using nlohmann::json;

/**
 * Text grammar for polynomials: terms like `x^3 + 8*x^2 - 4` joined by + and
 * -, coefficients as signed decimal integers or a/b rationals, `*` between
 * coefficient and variable optional, variable `x` or `X`.
 */
RatPoly parse_poly(const std::string& text);
std::string poly_text(const RatPoly& f);

/// {"coeffs": ["4","0","8","1"]}, ascending, big integers/rationals as strings.
json poly_json(const RatPoly& f);
RatPoly poly_from_json(const json& j);

json polygon_json(const NewtonPolygon& np);
json multiset_json(const ValMultiset& m);

json matrix_json(const ValuationMatrix& m);
ValuationMatrix matrix_from_json(const json& j);

json index_report_json(const IndexReport& rep);
json splitting_json(const SplittingReport& rep);
json classification_json(const ClassificationReport& rep);
json crosscheck_json(const CrosscheckReport& rep);
json family_crosscheck_json(const FamilyCrosscheck& rep);
json family_verdict_json(const FamilyVerdict& v);

std::vector<IvpGenerator> gens_from_json(const json& j);
json gens_json(const std::vector<IvpGenerator>& gens);

}  // namespace ivp

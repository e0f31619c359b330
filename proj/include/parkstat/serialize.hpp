#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "parkstat/exactprob.hpp"
#include "parkstat/formulas.hpp"
#include "parkstat/lucky.hpp"
#include "parkstat/montecarlo.hpp"
#include "parkstat/poly.hpp"

// CSV and JSON forms for every emitted table. CSV is UTF-8 with a header
// row; rationals travel as "num/den". Each emitter has a parser and the
// pair round-trips to an equal in-memory value.
namespace parkstat::serialize {

using nlohmann::json;

std::string double_repr(double v);  // shortest round-trip decimal

// "degree,numerator,denominator", dense by degree.
std::string poly_csv(const PolyP& poly);
PolyP poly_from_csv(const std::string& text);
json poly_json(const PolyP& poly);  // {"coeffs": ["num/den", ...]}
PolyP poly_from_json(const json& j);

std::string polyq_csv(const PolyQ& poly);  // denominator column stays 1
PolyQ polyq_from_csv(const std::string& text);
json polyq_json(const PolyQ& poly);
PolyQ polyq_from_json(const json& j);

// "j,numerator,denominator,float"
std::string dist_csv(const formulas::RationalDist& dist);
formulas::RationalDist dist_from_csv(const std::string& text);
json dist_json(const formulas::RationalDist& dist);
formulas::RationalDist dist_from_json(const json& j);

// One CSV row per triangle row: "i,e0,e1,..."
std::string triangle_csv(const lucky::TriangleTable& t);
lucky::TriangleTable triangle_from_csv(const std::string& text);
json triangle_json(const lucky::TriangleTable& t);  // arrays of arrays
lucky::TriangleTable triangle_from_json(const json& j);

// {"n":..., "p":"num/den", "tv":"num/den", "tv_float":..., "lower":...,
//  "upper":...}
json tv_json(const formulas::TvBounds& b);
std::string tv_csv(const formulas::TvBounds& b);

std::string report_csv(const montecarlo::SimReport& r);  // one summary row
json report_json(const montecarlo::SimReport& r);        // with histogram
std::string histogram_csv(const montecarlo::SimReport& r);  // "j,count,frequency"

// "p,success_rate,cond_mean,std_err"
std::string sweep_csv(
    const std::vector<std::pair<double, montecarlo::SimReport>>& rows);

// "a,i,degree,numerator,denominator", dense per entry polynomial.
std::string vacancy_csv(const exactprob::VacancyTable& table);
exactprob::VacancyTable vacancy_from_csv(const std::string& text);
json vacancy_json(const exactprob::VacancyTable& table);

}  // namespace parkstat::serialize

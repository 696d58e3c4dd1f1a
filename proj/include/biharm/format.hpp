#pragma once

#include "biharm/ratfn.hpp"

#include "json.hpp"

#include <string>

namespace biharm {

using Json = nlohmann::ordered_json;

std::string to_string(const Monomial& m);
/// Canonical text form, accepted back by parse_expr: "z11^2 - 2*p1*z12*z21".
std::string to_string(const Poly& p);
/// "(num)/(den)", or just the numerator when den = 1.
std::string to_string(const RatFn& f);

std::string to_latex(const GaussRat& c);
std::string to_latex(const Monomial& m);
std::string to_latex(const Poly& p);
std::string to_latex(const RatFn& f);

Json to_json(const GaussRat& c);
Json to_json(const Monomial& m);
Json to_json(const Poly& p);
Json to_json(const RatFn& f);

GaussRat gauss_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RatFn ratfn_from_json(const Json& j);

} // namespace biharm

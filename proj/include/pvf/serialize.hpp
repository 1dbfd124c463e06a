#pragma once

#include "pvf/correlations.hpp"
#include "pvf/diffop.hpp"
#include "pvf/multipoly.hpp"
#include "pvf/poly.hpp"
#include "pvf/ratfun.hpp"
#include "pvf/series.hpp"

#include <json.hpp>

#include <string>

namespace pvf {

using Json = nlohmann::ordered_json;

// Structured form. Rationals are strings "p/q" or "p"; polynomials are
// ascending coefficient lists. A series stores base_exponent and
// valid_order as integers in units of 1/ramification, with a null
// valid_order for an exact series.
Json to_json(const Rational& q);
Json to_json(const Poly& p);
Json to_json(const RationalFunction& f);
Json to_json(const Series& s);
Json to_json(const MultiPoly& p);
Json to_json(const MultiFraction& f);
/// With `with_cleared`, adds "cleared": integer polynomial coefficients per D^i.
Json to_json(const DiffOperator& L, bool with_cleared = false);
Json to_json(const EKPolynomial& f);

Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RationalFunction ratfun_from_json(const Json& j);
Series series_from_json(const Json& j);
MultiPoly multipoly_from_json(const Json& j);
MultiFraction multifraction_from_json(const Json& j);
DiffOperator operator_from_json(const Json& j);
EKPolynomial ekform_from_json(const Json& j);

// Line-oriented text form; each from_text inverts the matching to_text.
std::string to_text(const Rational& q);
std::string to_text(const Series& s);
std::string to_text(const MultiPoly& p);
std::string to_text(const MultiFraction& f);
std::string to_text(const DiffOperator& L);
std::string to_text(const EKPolynomial& f);

Rational rational_from_text(const std::string& text);
Series series_from_text(const std::string& text);
MultiPoly multipoly_from_text(const std::string& text);
MultiFraction multifraction_from_text(const std::string& text);
DiffOperator operator_from_text(const std::string& text);
EKPolynomial ekform_from_text(const std::string& text);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace pvf

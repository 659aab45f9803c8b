#pragma once

#include <string>
#include <string_view>
#include <vector>
#include <boost/multiprecision/gmp.hpp>
#include <json.hpp>

namespace cubevol {

using Rational      = boost::multiprecision::mpq_rational;
using RationalPoint = std::vector<Rational>;

std::string to_string(const Rational& q);

/** Parses "a", "-a" or "a/b". */
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

/** Lexicographic three-way comparison; shorter points order first on ties. */
int compare_points(const RationalPoint& a, const RationalPoint& b);

/** `[num, den]` with exact integers (JSON numbers when they fit in 64 bits, decimal strings otherwise). */
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

}   // namespace cubevol

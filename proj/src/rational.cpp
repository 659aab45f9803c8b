#include "cubevol/rational.hpp"

#include <limits>

#include "cubevol/errors.hpp"

namespace cubevol {

namespace {

using Integer = boost::multiprecision::mpz_int;

nlohmann::json integer_to_json(const Integer& z)
{
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return z.convert_to<std::int64_t>();
    return z.str();
}

Integer integer_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw InputError("expected an exact integer, got " + j.dump());
}

}   // namespace

std::string to_string(const Rational& q)
{
    return q.str();
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash != std::string_view::npos)
    {
        const std::string_view den = text.substr(slash + 1);
        if (den.empty() || den.find_first_not_of('0') == std::string_view::npos)
            throw InputError("not a rational number: '" + std::string(text) + "'");
    }
    try
    {
        return Rational(std::string(text));
    }
    catch (const std::exception&)
    {
        throw InputError("not a rational number: '" + std::string(text) + "'");
    }
}

double to_double(const Rational& q)
{
    return q.convert_to<double>();
}

int compare_points(const RationalPoint& a, const RationalPoint& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
    {
        if (a[i] < b[i]) return -1;
        if (b[i] < a[i]) return 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

nlohmann::json rational_to_json(const Rational& q)
{
    return nlohmann::json::array({integer_to_json(numerator(q)), integer_to_json(denominator(q))});
}

Rational rational_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw InputError("expected [num, den], got " + j.dump());
    const Integer den = integer_from_json(j[1]);
    if (den == 0)
        throw InputError("zero denominator in " + j.dump());
    return Rational(integer_from_json(j[0]), den);
}

}   // namespace cubevol

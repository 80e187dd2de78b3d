#include <berge/error.hpp>
#include <berge/numeric.hpp>

#include <limits>

namespace berge {

Integer binom_zero(std::int64_t a, std::int64_t b)
{
    if (a < 0 || b < 0 || a < b)
        return 0;
    b = std::min(b, a - b);
    Integer result = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b)
{
    return -floor_div(-a, b);
}

std::int64_t to_int64(const Integer& v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorCode::bad_parameters, "value " + v.str() + " does not fit in 64 bits");
    return v.convert_to<std::int64_t>();
}

std::string to_string(const Rational& q)
{
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text)
{
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rational(Integer(text));
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw Error(ErrorCode::malformed_input, "not a rational number: '" + text + "'");
    }
}

} // namespace berge

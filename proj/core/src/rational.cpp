#include "swr/rational.hpp"

#include "swr/errors.hpp"

namespace swr {

Rational parse_rational(std::string_view s) {
    if (s.empty())
        throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(Integer(std::string(s)));
        Integer num{std::string(s.substr(0, slash))};
        Integer den{std::string(s.substr(slash + 1))};
        if (den == 0)
            throw ParseError("zero denominator in '" + std::string(s) + "'");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw ParseError("bad rational literal '" + std::string(s) + "': " + e.what());
    }
}

std::string format_rational(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace swr

#ifndef DA2_RATIONAL_HPP
#define DA2_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace da2 {

// Exact scalar type of the library: arbitrary-precision rationals, kept in
// lowest terms with positive denominator by the backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0)
        throw ParseError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

// Accepts "p" or "p/q" with q > 0; everything else is a ParseError.
inline Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw ParseError("empty rational literal");
    const auto slash = text.find('/');
    const std::string num_part = text.substr(0, slash == std::string::npos ? text.size() : slash);
    const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto is_integer = [](const std::string& s, bool allow_sign) {
        if (s.empty())
            return false;
        std::size_t k = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+'))
            k = 1;
        if (k == s.size())
            return false;
        for (; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                return false;
        return true;
    };
    if (!is_integer(num_part, true) || !is_integer(den_part, false))
        throw ParseError("malformed rational literal '" + text + "'");
    Integer num(num_part);
    Integer den(den_part);
    if (den <= 0)
        throw ParseError("rational denominator must be positive in '" + text + "'");
    return Rational(num, den);
}

// Canonical text form: lowest terms, "p" when the denominator is 1, else "p/q".
inline std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

} // namespace da2

#endif

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "bsato/errors.hpp"

namespace bsato {

// Exact arithmetic substrate. cpp_rational keeps gcd(num, den) = 1 and
// den > 0 after every operation, which is exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline long long to_long(const Rational& r) {
    return num(r).convert_to<long long>();
}

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

// "p", "-p" or "p/q" with q > 0.
inline Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> Rational {
        throw ParseError(msg + " in rational '" + std::string(text) + "'", i + 1);
    };
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        return fail("expected digit");
    Int n = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        n = n * 10 + (text[i++] - '0');
    Int d = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            return fail("expected digit after '/'");
        d = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            d = d * 10 + (text[i++] - '0');
        if (d == 0) return fail("zero denominator");
    }
    if (i != text.size()) return fail("trailing characters");
    Rational r(n, d);
    return neg ? Rational(-r) : r;
}

inline std::string to_string(const Rational& r) {
    std::string s = num(r).str();
    if (!is_integer(r)) s += "/" + den(r).str();
    return s;
}

} // namespace bsato

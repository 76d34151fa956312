#ifndef NILMAT_RATIONAL_HPP
#define NILMAT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace nilmat {

// Arbitrary-precision integers and exact fractions. cpp_rational keeps
// the denominator positive and the fraction in lowest terms, which is
// exactly the canonical form the rest of the library relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

// Renders "p/q", or just "p" when q == 1. Never decimals.
inline std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// Grammar: optional '-', digits, optionally '/' digits with denominator > 0.
inline std::optional<Rational> try_parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t pos = 0;
    if (s[0] == '-') pos = 1;
    if (pos >= s.size()) return std::nullopt;
    std::size_t digits_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits_start) return std::nullopt;
    Int n(s.substr(0, pos));
    if (pos == s.size()) return Rational(n);
    if (s[pos] != '/') return std::nullopt;
    ++pos;
    std::size_t den_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size() || pos == den_start) return std::nullopt;
    Int d(s.substr(den_start));
    if (d == 0) return std::nullopt;
    return Rational(n, d);
}

inline Rational parse_rational(const std::string& s) {
    auto q = try_parse_rational(s);
    if (!q) throw std::invalid_argument("invalid rational literal: '" + s + "'");
    return *q;
}

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(const Int& n, unsigned k) {
    Int b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

}  // namespace nilmat

#endif

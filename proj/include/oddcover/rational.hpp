#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oddcover {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps gcd-reduced form with a
// positive denominator, which is exactly the invariant we need.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

// Floor toward -infinity, exact for any sign.
inline BigInt rfloor(const Rational& r) {
    BigInt n = num(r), d = den(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline BigInt rceil(const Rational& r) {
    BigInt n = num(r), d = den(r);
    BigInt q = n / d;
    if (n > 0 && q * d != n) ++q;
    return q;
}

// Serialized as "p/q", integers as plain "p".
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline Rational parse_rational(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("bad rational: '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
        BigInt n{std::string(s.substr(0, slash))};
        BigInt d{std::string(s.substr(slash + 1))};
        if (d == 0) bad();
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational();  // unreachable
}

}  // namespace oddcover

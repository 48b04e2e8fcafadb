#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace opgrid {

// Exact scalars. cpp_rational keeps the invariants we need by construction:
// always reduced, denominator > 0, zero stored as 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or just "p" when q == 1.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text)));
        }
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + std::string(text) + "': " + e.what());
    }
}

/// a! for a >= 0.
inline Rational factorial(long a) {
    if (a < 0) throw std::domain_error("factorial of negative integer");
    BigInt f = 1;
    for (long i = 2; i <= a; ++i) f *= i;
    return Rational(f);
}

/// C(a, b) with a >= 0; zero when b < 0 or b > a.
inline Rational binomial_coeff(long a, long b) {
    if (a < 0) throw std::domain_error("binomial_coeff requires a >= 0");
    if (b < 0 || b > a) return Rational(0);
    b = std::min(b, a - b);
    BigInt num = 1, den = 1;
    for (long i = 1; i <= b; ++i) {
        num *= (a - b + i);
        den *= i;
    }
    return Rational(num, den);
}

/// Falling factorial a(a-1)...(a-i+1); defined for any integer a.
inline BigInt falling_factorial(const BigInt& a, long i) {
    BigInt f = 1;
    for (long s = 0; s < i; ++s) f *= (a - s);
    return f;
}

}  // namespace opgrid

#pragma once

// Exact rational arithmetic used throughout the symbolic layer.
// Floating point enters only at the numeric boundary (to_double).

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bracketeer {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denom(r) == 1; }

inline bool is_nonpositive_integer(const Rational& r) { return is_integer(r) && r <= 0; }

// Integer value of r; caller must ensure is_integer(r) and machine range.
inline long long to_longlong(const Rational& r) {
    if (!is_integer(r)) throw std::invalid_argument("to_longlong: not an integer");
    return numer(r).convert_to<long long>();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt factorial_big(unsigned long n) {
    BigInt f = 1;
    for (unsigned long i = 2; i <= n; ++i) f *= i;
    return f;
}

// base^e for integer e (negative allowed; base must be nonzero then).
inline Rational rational_pow(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    bool neg = e < 0;
    unsigned long long k = neg ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                               : static_cast<unsigned long long>(e);
    Rational acc = 1, b = base;
    while (k != 0) {
        if (k & 1ULL) acc *= b;
        b *= b;
        k >>= 1;
    }
    if (neg) {
        if (acc == 0) throw std::domain_error("rational_pow: zero base with negative exponent");
        acc = Rational(1) / acc;
    }
    return acc;
}

// Accepts "3", "-7", "3/2", "0.25", "-1.5".
std::optional<Rational> try_parse_rational(std::string_view text);

inline Rational parse_rational(std::string_view text) {
    auto r = try_parse_rational(text);
    if (!r) throw std::invalid_argument("not a rational literal: " + std::string(text));
    return *r;
}

std::string to_string(const Rational& r);

}  // namespace bracketeer

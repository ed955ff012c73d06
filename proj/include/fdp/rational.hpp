#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "fdp/error.hpp"

namespace fdp {

// Exact arithmetic for all theta values and closed-form probabilities.
// Backed by arbitrary-precision integers; always stored reduced with a
// positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den) {
    if (den == 0) raise(errc::invalid_parameter, "rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

// Canonical "p/q" rendering; integers print without the "/q" part.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// C(n, k) exactly; zero when k < 0 or k > n.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= BigInt(n - i);
        result /= BigInt(i + 1);
    }
    return result;
}

inline Rational pow(const Rational& base, long long exp) {
    if (exp < 0) {
        if (base == 0) raise(errc::invalid_parameter, "zero to a negative power");
        return Rational(1) / fdp::pow(base, -exp);
    }
    Rational result(1);
    Rational b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

}  // namespace fdp

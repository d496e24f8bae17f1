#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "schurcone/errors.hpp"

namespace schurcone {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the usual convention C(n,k)=0 for k<0 or k>n.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Serializes a rational in lowest terms as "p" or "p/q".
inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

/// Parses "p" or "p/q" with optional sign; q must be positive.
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q <= 0) throw ParseError("rational denominator must be positive: " + s);
        return Rational(p, q);
    } catch (const std::runtime_error& e) {
        throw ParseError("bad rational '" + s + "': " + e.what());
    }
}

}  // namespace schurcone

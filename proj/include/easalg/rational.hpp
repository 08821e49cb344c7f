#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace easalg {

// All scalars in this library are exact. BigInt is an arbitrary-precision
// integer; Rational is kept in lowest terms with positive denominator by
// the backend (zero is 0/1).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_zero(const Rational& q) { return q.is_zero(); }

// Canonical string form used in every JSON interface: "p/q", or "p" when q=1.
inline std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline std::string to_string(const BigInt& n) { return n.str(); }

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        return Rational(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// Integer power with exact big-int result.
inline BigInt ipow(const BigInt& base, unsigned e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace easalg

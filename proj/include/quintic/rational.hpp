#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace quintic {

// Exact scalars of the ground field Q. cpp_rational keeps the canonical form
// we rely on everywhere: gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Int& n) { return n.str(); }

// "num" when integral, "num/den" otherwise.
inline std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Int isqrt_floor(const Int& n) { return boost::multiprecision::sqrt(n); }

inline Int int_pow(Int base, unsigned e) {
    Int r(1);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, unsigned e) {
    return Rational(int_pow(num(base), e), int_pow(den(base), e));
}

inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int s = isqrt_floor(n);
    if (s * s == n) return s;
    return std::nullopt;
}

// The nonnegative rational square root when one exists in Q, i.e. when both
// numerator and denominator are integer squares.
inline std::optional<Rational> is_perfect_square(const Rational& r) {
    auto sn = exact_sqrt(num(r));
    if (!sn) return std::nullopt;
    auto sd = exact_sqrt(den(r));
    if (!sd) return std::nullopt;
    return Rational(*sn, *sd);
}

} // namespace quintic

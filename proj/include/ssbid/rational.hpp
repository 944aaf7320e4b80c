#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ssbid/errors.hpp"

namespace ssbid {

/// Arbitrary-precision integer and exact rational. Rationals are kept in
/// lowest terms with a positive denominator; arithmetic never rounds.
/// Floating point is banned throughout: marginality predicates are exact
/// equality tests on differences of prices and must never misclassify.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_floor(const Rat &r) {
    Int q = numerator(r) / denominator(r);
    if (q * denominator(r) > numerator(r)) --q;
    return q;
}

inline Int rat_ceil(const Rat &r) { return -rat_floor(-r); }

inline bool is_integral(const Rat &r) { return denominator(r) == 1; }

/// Parses "p/q" or "p" with optional sign. Decimal literals are rejected.
inline Rat parse_rational(const std::string &s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den <= 0) throw ParseError("rational denominator must be positive: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error &) {
        throw ParseError("cannot parse rational: " + s);
    }
}

inline std::string to_string(const Rat &r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace ssbid

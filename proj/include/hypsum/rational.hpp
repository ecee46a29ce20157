#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "hypsum/errors.hpp"

namespace hypsum {

using Integer = boost::multiprecision::cpp_int;

/// The universal scalar: an arbitrary-precision rational kept in canonical
/// form (denominator > 0, gcd(|num|, den) = 1) after every operation, so
/// equality is structural. There is no approximate representation anywhere
/// in this library.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw Error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Rational make_rational(long long num, long long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// Canonical rendering: "p/q", or just "p" when q = 1 (e.g. "15/8", "-3", "0").
inline std::string to_string(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) out += "/" + denominator(value).str();
    return out;
}

/// Strict parse of the p/q format. Accepts an optional sign on either part;
/// rejects anything else (in particular decimal notation).
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&] { return Error("not a rational in p/q form: '" + std::string(text) + "'"); };
    const auto parse_int = [&](std::string_view part) {
        if (part.empty()) throw bad();
        std::size_t start = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (start == part.size()) throw bad();
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
        return Integer(std::string(part));
    };
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const Integer num = parse_int(text.substr(0, slash));
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return make_rational(num, den);
}

inline bool is_integer(const Rational& value) { return denominator(value) == 1; }

/// True iff value is in {0, -1, -2, ...}; these are the points where a
/// Pochhammer symbol with enough terms vanishes.
inline bool is_nonpositive_integer(const Rational& value) {
    return is_integer(value) && numerator(value) <= 0;
}

/// The integer value when the rational is an integer that fits in long long.
inline std::optional<long long> as_integer(const Rational& value) {
    if (!is_integer(value)) return std::nullopt;
    const Integer& num = numerator(value);
    if (num < std::numeric_limits<long long>::min() || num > std::numeric_limits<long long>::max())
        return std::nullopt;
    return static_cast<long long>(num);
}

}  // namespace hypsum

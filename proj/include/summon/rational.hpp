#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace summon {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parse an exact rational from "7", "-3/4" or a decimal string like "2.5".
/// Decimal strings are converted exactly (0.5 -> 1/2); binary floats are
/// never involved. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical text form: "n" when the denominator is 1, otherwise "n/d".
std::string format_rational(const Rational& value);

inline int sign_of(const Rational& value) {
    return value.sign();
}

}  // namespace summon

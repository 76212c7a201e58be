#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>

namespace pavsel {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision rational, kept in canonical reduced form with a
// positive denominator by the backend. Every score comparison in this library
// is exact; floating point only ever appears in optional report output.
using Rational = boost::multiprecision::cpp_rational;

// Renders r as "p/q" with q >= 1 and the slash always present, e.g. "11/1",
// "-3/4". This is the wire format for every rational in reports.
std::string fraction_string(const Rational& r);

// Parses "p/q", a bare integer "p", or a plain decimal like "0.25". Returns
// nullopt on malformed input or a zero denominator.
std::optional<Rational> parse_fraction(std::string_view text);

double approx_double(const Rational& r);

// Smallest integer >= r.
BigInt ceil_rational(const Rational& r);

}  // namespace pavsel

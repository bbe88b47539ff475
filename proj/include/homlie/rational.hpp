#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace homlie {

// Base field: exact rationals, always kept in lowest terms by GMP.
using Rat = boost::multiprecision::mpq_rational;

// Renders "p" when the denominator is 1, "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) { return r.str(); }

// Accepts "p" or "p/q" with optional leading '-'. Rejects anything else,
// in particular floating literals and zero denominators.
std::optional<Rat> parse_rational(const std::string& text);

}  // namespace homlie

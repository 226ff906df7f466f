#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace dyckframe {

/// Exact integer of unbounded magnitude. Every count the library returns is nonnegative.
using Count = boost::multiprecision::cpp_int;

inline std::string to_string(const Count& c) { return c.str(); }

/// binom(a, b) with the conventions the path-counting formulas rely on:
/// binom(a, 0) = 1 for every a (including a = -1), binom(a, b) = 0 for b < 0,
/// binom(a, b) = 0 for b > a >= 0, and 0 for a < 0 < b.
Count binomial(std::int64_t a, std::int64_t b);

/// base^exponent with 0^0 = 1.
Count power(std::uint64_t base, std::uint64_t exponent);

}  // namespace dyckframe

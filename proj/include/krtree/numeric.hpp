#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace krtree {

using Coord = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the fermionic-formula convention: zero whenever
/// top < bottom, and one whenever bottom == 0 (even for negative top).
BigInt binomial(Coord top, Coord bottom);

inline std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v);

}  // namespace krtree

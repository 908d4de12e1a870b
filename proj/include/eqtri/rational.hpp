#pragma once
// Exact rational scalars and points. Arithmetic is arbitrary-precision so
// repeated halving and determinant work never overflow or round.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "eqtri/errors.hpp"

namespace eqtri {

using Rational = boost::multiprecision::cpp_rational;
using RationalPoint = std::vector<Rational>;

// "p", "-p", "p/q" with q > 0 after normalization.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);
std::string format_point(const RationalPoint& p);  // comma-separated

}  // namespace eqtri

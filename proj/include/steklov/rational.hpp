#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/rational.hpp>

namespace steklov {

/// Exact arithmetic for closed-form values (broom eigenvalues, minimal broom
/// tables). Inputs at desk scale keep numerators and denominators tiny.
using Rational = boost::rational<std::int64_t>;

/// 50 decimal digits; used where a bound is irrational and must be compared
/// without spending the tolerance budget on rounding.
using Extended = boost::multiprecision::cpp_bin_float_50;

inline double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

/// Largest integer not exceeding q.
std::int64_t floor(const Rational& q);
std::int64_t ceil(const Rational& q);
/// q - floor(q), always in [0, 1).
Rational frac(const Rational& q);

/// Accepts "p/q", "p" or a terminating decimal such as "1.5".
Rational parse_rational(std::string_view text);

/// "p/q" (or "p" when the denominator is one).
std::string to_string(const Rational& q);

}  // namespace steklov

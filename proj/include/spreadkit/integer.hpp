#pragma once

// Exact integer and rational arithmetic used by every counting formula.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace spreadkit {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline BigInt ipow(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) throw std::invalid_argument("ipow: negative exponent");
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

/// Floor of a/b for b > 0, rounding toward negative infinity.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt quot = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --quot;
  return quot;
}

/// Largest integer x with x*x <= value; value must be nonnegative.
inline BigInt isqrt(const BigInt& value) {
  if (value < 0) throw std::invalid_argument("isqrt of negative value");
  return boost::multiprecision::sqrt(value);
}

/// Smallest integer strictly greater than x.
inline BigInt floor_strictly_above(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  return floor_div(num, den) + 1;
}

/// [n]_q = (q^n - 1)/(q - 1), the number of points of F_q^n.
inline BigInt point_count(std::int64_t q, std::int64_t n) {
  if (n <= 0) return 0;
  return (ipow(q, n) - 1) / (q - 1);
}

inline BigInt choose2(const BigInt& x) { return x * (x - 1) / 2; }

inline std::string to_string(const BigInt& value) { return value.str(); }

inline std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_prime(std::int64_t value);

/// Returns (p, e) with q = p^e, or (0, 0) when q is not a prime power.
std::pair<std::int64_t, int> prime_power_decomposition(std::int64_t q);

inline bool is_prime_power(std::int64_t q) { return prime_power_decomposition(q).first != 0; }

}  // namespace spreadkit

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flatinc {

/// Exact rational coordinate. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Scalar = mpq_class;
using BigInt = mpz_class;

/// Parses "a" or "a/b" (optional leading '-', b > 0, gcd(a, b) = 1).
/// Returns nullopt on anything else, including non-reduced fractions.
std::optional<Scalar> parse_rational(std::string_view text);

/// Inverse of parse_rational: "a" for integers, "a/b" otherwise.
std::string format_rational(const Scalar& value);

/// Exact rational square root, or nullopt when `value` is not the square of a
/// rational.
std::optional<Scalar> exact_sqrt(const Scalar& value);

Scalar pow(const Scalar& base, unsigned exponent);

inline Scalar make_scalar(std::int64_t num, std::int64_t den = 1) {
  Scalar s{BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))};
  s.canonicalize();
  return s;
}

}  // namespace flatinc

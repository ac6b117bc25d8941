#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jetkit {

// Exact rational scalar used for every coefficient in the library.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

// "p/q" with q >= 1, always including the denominator.
[[nodiscard]] std::string to_string(const Rational& r);

// Accepts "p/q", "p" and an optional leading sign. Throws SchemaError.
[[nodiscard]] Rational parse_rational(std::string_view text);

// Rounded to `digits` fractional digits, for human reading only.
[[nodiscard]] std::string to_decimal(const Rational& r, int digits);

[[nodiscard]] Rational power(const Rational& base, int exponent);

[[nodiscard]] Rational factorial(int n);

[[nodiscard]] Vector zeros(std::size_t n);

[[nodiscard]] bool is_zero(std::span<const Rational> v);

}  // namespace jetkit

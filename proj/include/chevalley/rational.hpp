#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chevalley {

/// Requirements on a coefficient field: exact characteristic-zero arithmetic
/// with structural equality.
template <class F>
concept ExactField = std::regular<F> && requires(const F a, const F b) {
  { F(a + b) } -> std::same_as<F>;
  { F(a - b) } -> std::same_as<F>;
  { F(a * b) } -> std::same_as<F>;
  { F(a / b) } -> std::same_as<F>;
  { F(-a) } -> std::same_as<F>;
  F(0);
  F(1);
};

/// Arbitrary-precision rational. GMP keeps every value canonical (reduced,
/// positive denominator) after each operation, so == is structural.
using Rational = mpq_class;

static_assert(ExactField<Rational>);

/// Canonical text: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and "-p/q" with optional surrounding whitespace;
/// the result is canonicalized. Throws ParseError on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace chevalley

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace gsp4 {

// mpq_class keeps numerator/denominator canonical after every operation.
using Rational = mpq_class;

// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Exact square root if q is the square of a rational; the non-negative root.
std::optional<Rational> rational_sqrt(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace gsp4

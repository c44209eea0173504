#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace hsw {

/// Exact arbitrary-precision rational. Always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

/// Parses `p` or `p/q` with an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// `p` when the denominator is 1, otherwise `p/q`.
std::string to_string(const Rational& q);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

std::size_t hash_value(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace hsw

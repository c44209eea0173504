#pragma once

// Elements of a monoid with an absorbing zero. Two concrete instances share
// the symbols 0 and 1: the free cyclic monoid {1, z, z^2, ...} with a zero
// adjoined, and the multiplicative monoid of rationals q with |q| >= 1
// together with 0.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "hsw/rational.hpp"

namespace hsw {

enum class MonoidInstance { Neutral, Cyclic, Rational };

class InstanceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MonoidElement {
 public:
  struct Zero {
    bool operator==(const Zero&) const = default;
  };
  struct Unit {
    bool operator==(const Unit&) const = default;
  };
  struct CyclicPower {
    std::uint64_t exponent;  // >= 1
    bool operator==(const CyclicPower&) const = default;
  };
  struct RationalMod {
    Rational value;  // |value| >= 1, value != 1
    bool operator==(const RationalMod&) const = default;
  };

  MonoidElement() : rep_(Unit{}) {}

  static MonoidElement zero() { return MonoidElement(Zero{}); }
  static MonoidElement unit() { return MonoidElement(Unit{}); }
  /// z^n; z^0 is the unit.
  static MonoidElement cyclic(std::uint64_t exponent);
  /// q = 0 gives the zero element and q = 1 the unit. Throws std::domain_error for 0 < |q| < 1.
  static MonoidElement rational(Rational q);

  bool is_zero() const { return std::holds_alternative<Zero>(rep_); }
  bool is_unit() const { return std::holds_alternative<Unit>(rep_); }
  bool is_cyclic() const { return std::holds_alternative<CyclicPower>(rep_); }
  bool is_rational() const { return std::holds_alternative<RationalMod>(rep_); }

  /// Exponent of a cyclic power; 0 for the unit. Throws std::logic_error otherwise.
  std::uint64_t exponent() const;
  /// Numeric value for the rational instance (0 and 1 included). Throws std::logic_error for z^n.
  Rational value() const;

  MonoidInstance instance() const;

  const auto& rep() const { return rep_; }

  bool operator==(const MonoidElement& other) const = default;
  /// Total order: 0 < 1 < z < z^2 < ... < rationals by value.
  std::strong_ordering operator<=>(const MonoidElement& other) const;

  std::size_t hash() const;

 private:
  template <typename T>
  explicit MonoidElement(T rep) : rep_(std::move(rep)) {}

  std::variant<Zero, Unit, CyclicPower, RationalMod> rep_;
};

/// Monoid product. Throws InstanceMismatch when a cyclic power meets a rational.
MonoidElement mul(const MonoidElement& a, const MonoidElement& b);
MonoidElement pow(const MonoidElement& a, std::uint64_t n);

/// Throws InstanceMismatch if the two elements cannot live in one instance.
MonoidInstance common_instance(MonoidInstance a, MonoidInstance b);

/// Literal forms: `0`, `1`, `z`, `z^<nat>`, signed `p` or `p/q` with |p/q| >= 1.
MonoidElement parse_element(std::string_view text);
std::string to_string(const MonoidElement& e);
std::ostream& operator<<(std::ostream& os, const MonoidElement& e);

}  // namespace hsw

template <>
struct std::hash<hsw::MonoidElement> {
  std::size_t operator()(const hsw::MonoidElement& e) const noexcept { return e.hash(); }
};

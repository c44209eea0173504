#pragma once

// Truncated formal power series with harmonic-algebra coefficients. A series
// of order n knows its coefficients at degrees 0..n only; binary operations
// reconcile to the smaller order.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsw/halg.hpp"

namespace hsw {

inline constexpr int kDefaultSeriesOrder = 12;

class Series1 {
 public:
  explicit Series1(int order, std::string variable = "x");

  static Series1 constant(const HPoly& c, int order, std::string variable = "x");
  static Series1 monomial(const HPoly& c, int degree, int order, std::string variable = "x");

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::string& variable() const { return variable_; }

  /// Coefficient at x^n. Throws std::out_of_range past the truncation order.
  const HPoly& operator[](int n) const;
  HPoly& operator[](int n);

  Series1 truncated(int order) const;
  bool is_zero() const;

  Series1& operator+=(const Series1& other);
  Series1& operator-=(const Series1& other);
  friend Series1 operator+(Series1 a, const Series1& b) { return a += b; }
  friend Series1 operator-(Series1 a, const Series1& b) { return a -= b; }
  Series1 operator-() const;

  bool operator==(const Series1& other) const;

 private:
  std::vector<HPoly> coeffs_;
  std::string variable_;
};

/// Bivariate series in x, y truncated at total degree `order`.
class Series2 {
 public:
  explicit Series2(int order);

  int order() const { return order_; }
  /// Coefficient at x^i y^j; throws std::out_of_range when i + j > order.
  const HPoly& at(int i, int j) const;
  HPoly& at(int i, int j);

  Series2 truncated(int order) const;
  bool is_zero() const;

  Series2& operator+=(const Series2& other);
  Series2& operator-=(const Series2& other);
  friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
  friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }

  bool operator==(const Series2& other) const;

 private:
  std::size_t index(int i, int j) const;

  int order_;
  std::vector<HPoly> coeffs_;
};

Series1 scale(const Rational& c, const Series1& f);
Series2 scale(const Rational& c, const Series2& f);

/// Cauchy product with harmonic multiplication of coefficients.
Series1 mul_harmonic(const Series1& a, const Series1& b);
Series2 mul_harmonic(const Series2& a, const Series2& b);

/// Harmonic inverse. Throws std::domain_error unless the constant term is a nonzero rational.
Series1 inv_harmonic(const Series1& f);

/// exp_*(f) = sum_n f^{*n}/n!, via n g_n = sum_k k f_k * g_{n-k}. Needs f_0 = 0.
Series1 exp_star(const Series1& f);
/// Inverse of exp_star. Needs g_0 = 1.
Series1 log_star(const Series1& g);

/// Term-wise derivative; the order drops by one (an order-0 series maps to the zero series of order 0).
Series1 derivative(const Series1& f);

/// f(-x): odd-degree coefficients change sign.
Series1 negate_argument(const Series1& f);

/// f(x + y): coefficient of x^i y^j is binom(i+j, i) f_{i+j}.
Series2 shift_sum(const Series1& f);

/// f(x) and f(y) viewed as bivariate series.
Series2 embed_x(const Series1& f);
Series2 embed_y(const Series1& f);

std::string to_string(const Series1& f);
std::ostream& operator<<(std::ostream& os, const Series1& f);

}  // namespace hsw

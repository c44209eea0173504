#include "hsw/series.hpp"

#include <algorithm>
#include <ostream>

namespace hsw {

Series1::Series1(int order, std::string variable) : variable_(std::move(variable)) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series1 Series1::constant(const HPoly& c, int order, std::string variable) {
  return monomial(c, 0, order, std::move(variable));
}

Series1 Series1::monomial(const HPoly& c, int degree, int order, std::string variable) {
  Series1 f(order, std::move(variable));
  if (degree >= 0 && degree <= order) f[degree] = c;
  return f;
}

const HPoly& Series1::operator[](int n) const {
  if (n < 0 || n > order()) throw std::out_of_range("coefficient beyond truncation order");
  return coeffs_[static_cast<std::size_t>(n)];
}

HPoly& Series1::operator[](int n) {
  if (n < 0 || n > order()) throw std::out_of_range("coefficient beyond truncation order");
  return coeffs_[static_cast<std::size_t>(n)];
}

Series1 Series1::truncated(int order) const {
  Series1 r(std::min(order, this->order()), variable_);
  for (int n = 0; n <= r.order(); ++n) r[n] = (*this)[n];
  return r;
}

bool Series1::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const HPoly& p) { return p.is_zero(); });
}

namespace {

void check_variables(const Series1& a, const Series1& b) {
  if (a.variable() != b.variable())
    throw std::invalid_argument("series in different variables: " + a.variable() + ", " + b.variable());
}

}  // namespace

Series1& Series1::operator+=(const Series1& other) {
  check_variables(*this, other);
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
  for (int n = 0; n <= order(); ++n) (*this)[n] += other[n];
  return *this;
}

Series1& Series1::operator-=(const Series1& other) {
  check_variables(*this, other);
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
  for (int n = 0; n <= order(); ++n) (*this)[n] -= other[n];
  return *this;
}

Series1 Series1::operator-() const { return scale(Rational(-1), *this); }

bool Series1::operator==(const Series1& other) const {
  return order() == other.order() && coeffs_ == other.coeffs_;
}

Series2::Series2(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>((order + 1) * (order + 2) / 2));
}

std::size_t Series2::index(int i, int j) const {
  if (i < 0 || j < 0 || i + j > order_) throw std::out_of_range("coefficient beyond truncation order");
  const int d = i + j;
  return static_cast<std::size_t>(d * (d + 1) / 2 + j);
}

const HPoly& Series2::at(int i, int j) const { return coeffs_[index(i, j)]; }
HPoly& Series2::at(int i, int j) { return coeffs_[index(i, j)]; }

Series2 Series2::truncated(int order) const {
  Series2 r(std::min(order, order_));
  for (int d = 0; d <= r.order_; ++d)
    for (int j = 0; j <= d; ++j) r.at(d - j, j) = at(d - j, j);
  return r;
}

bool Series2::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const HPoly& p) { return p.is_zero(); });
}

Series2& Series2::operator+=(const Series2& other) {
  *this = truncated(other.order_);
  for (int d = 0; d <= order_; ++d)
    for (int j = 0; j <= d; ++j) at(d - j, j) += other.at(d - j, j);
  return *this;
}

Series2& Series2::operator-=(const Series2& other) {
  *this = truncated(other.order_);
  for (int d = 0; d <= order_; ++d)
    for (int j = 0; j <= d; ++j) at(d - j, j) -= other.at(d - j, j);
  return *this;
}

bool Series2::operator==(const Series2& other) const {
  return order_ == other.order_ && coeffs_ == other.coeffs_;
}

Series1 scale(const Rational& c, const Series1& f) {
  Series1 r = f;
  for (int n = 0; n <= r.order(); ++n) r[n] *= c;
  return r;
}

Series2 scale(const Rational& c, const Series2& f) {
  Series2 r = f;
  for (int d = 0; d <= r.order(); ++d)
    for (int j = 0; j <= d; ++j) r.at(d - j, j) *= c;
  return r;
}

Series1 mul_harmonic(const Series1& a, const Series1& b) {
  check_variables(a, b);
  Series1 r(std::min(a.order(), b.order()), a.variable());
  for (int n = 0; n <= r.order(); ++n)
    for (int k = 0; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      r[n] += harmonic(a[k], b[n - k]);
    }
  return r;
}

Series2 mul_harmonic(const Series2& a, const Series2& b) {
  Series2 r(std::min(a.order(), b.order()));
  const int order = r.order();
  for (int i1 = 0; i1 <= order; ++i1)
    for (int j1 = 0; i1 + j1 <= order; ++j1) {
      const HPoly& left = a.at(i1, j1);
      if (left.is_zero()) continue;
      for (int i2 = 0; i1 + j1 + i2 <= order; ++i2)
        for (int j2 = 0; i1 + j1 + i2 + j2 <= order; ++j2) {
          const HPoly& right = b.at(i2, j2);
          if (right.is_zero()) continue;
          r.at(i1 + i2, j1 + j2) += harmonic(left, right);
        }
    }
  return r;
}

Series1 inv_harmonic(const Series1& f) {
  if (!f[0].is_constant() || f[0].is_zero())
    throw std::domain_error("series is not invertible: constant term must be a nonzero rational");
  const Rational c_inv = 1 / f[0].constant_term();
  Series1 g(f.order(), f.variable());
  g[0] = HPoly(c_inv);
  for (int n = 1; n <= f.order(); ++n) {
    HPoly acc;
    for (int k = 1; k <= n; ++k)
      if (!f[k].is_zero() && !g[n - k].is_zero()) acc += harmonic(f[k], g[n - k]);
    g[n] = -c_inv * acc;
  }
  return g;
}

Series1 exp_star(const Series1& f) {
  if (!f[0].is_zero()) throw std::domain_error("exp_star needs a zero constant term");
  Series1 g(f.order(), f.variable());
  g[0] = HPoly(1);
  for (int n = 1; n <= f.order(); ++n) {
    HPoly acc;
    for (int k = 1; k <= n; ++k)
      if (!f[k].is_zero() && !g[n - k].is_zero()) acc += Rational(k) * harmonic(f[k], g[n - k]);
    g[n] = Rational(1, n) * acc;
  }
  return g;
}

Series1 log_star(const Series1& g) {
  if (g[0] != HPoly(1)) throw std::domain_error("log_star needs constant term 1");
  Series1 f(g.order(), g.variable());
  for (int n = 1; n <= g.order(); ++n) {
    HPoly acc = Rational(n) * g[n];
    for (int k = 1; k < n; ++k)
      if (!f[k].is_zero() && !g[n - k].is_zero()) acc -= Rational(k) * harmonic(f[k], g[n - k]);
    f[n] = Rational(1, n) * acc;
  }
  return f;
}

Series1 derivative(const Series1& f) {
  Series1 r(std::max(f.order() - 1, 0), f.variable());
  for (int n = 0; n + 1 <= f.order(); ++n) r[n] = Rational(n + 1) * f[n + 1];
  return r;
}

Series1 negate_argument(const Series1& f) {
  Series1 r = f;
  for (int n = 1; n <= r.order(); n += 2) r[n] = -r[n];
  return r;
}

Series2 shift_sum(const Series1& f) {
  Series2 r(f.order());
  for (int d = 0; d <= f.order(); ++d) {
    if (f[d].is_zero()) continue;
    for (int i = 0; i <= d; ++i)
      r.at(i, d - i) = binomial(static_cast<unsigned>(d), static_cast<unsigned>(i)) * f[d];
  }
  return r;
}

Series2 embed_x(const Series1& f) {
  Series2 r(f.order());
  for (int i = 0; i <= f.order(); ++i) r.at(i, 0) = f[i];
  return r;
}

Series2 embed_y(const Series1& f) {
  Series2 r(f.order());
  for (int j = 0; j <= f.order(); ++j) r.at(0, j) = f[j];
  return r;
}

std::string to_string(const Series1& f) {
  std::string out;
  for (int n = 0; n <= f.order(); ++n) {
    if (f[n].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (n == 0)
      out += "(" + to_string(f[n]) + ")";
    else
      out += f.variable() + (n == 1 ? "" : "^" + std::to_string(n)) + "*(" + to_string(f[n]) + ")";
  }
  if (!out.empty()) out += " + ";
  out += "O(" + f.variable() + "^" + std::to_string(f.order() + 1) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Series1& f) { return os << to_string(f); }

}  // namespace hsw

#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "hsw/halg.hpp"

namespace hsw {

/// A floating-point value with an explicit absolute error bound.
struct Estimate {
  double value = 0.0;
  double error_bound = 0.0;

  Estimate& operator+=(const Estimate& o) {
    value += o.value;
    error_bound += o.error_bound;
    return *this;
  }
  friend Estimate operator+(Estimate a, const Estimate& b) { return a += b; }
  friend Estimate operator*(double c, const Estimate& e) { return {c * e.value, std::abs(c) * e.error_bound}; }
  friend Estimate operator*(const Estimate& a, const Estimate& b) {
    return {a.value * b.value,
            std::abs(a.value) * b.error_bound + std::abs(b.value) * a.error_bound + a.error_bound * b.error_bound};
  }
};

/// Thrown by a numeric evaluator for a word outside its domain.
class UnsupportedWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numeric realization of I_{0,1} on single words of H^0.
using H0Evaluator = std::function<Estimate(const Word&)>;

}  // namespace hsw

#pragma once

// Harmonic regularization. Every element of the harmonic algebra is uniquely
// a polynomial in S = e_0 and T = e_1 (under the harmonic product) with
// coefficients in H^0, the span of the empty word and of words whose first
// letter is not e_0 and whose last letter is not e_1. Leading e_0 powers peel
// off by concatenation; trailing e_1 powers are solved for recursively from
// w' e_1^{m-1} * e_1 = m w' e_1^m + (words with fewer trailing e_1).

#include <map>
#include <string>
#include <utility>

#include "hsw/estimate.hpp"
#include "hsw/halg.hpp"

namespace hsw {

enum class WordClass { InH0, InH1NotH0, General };

WordClass classify(const Word& w);
bool in_h0(const HPoly& p);
bool in_h1(const HPoly& p);

/// Number of trailing e_1 letters.
std::size_t trailing_unit_count(const Word& w);

/// Exponent -> coefficient; zero coefficients are never stored.
using GradedPoly = std::map<int, HPoly>;

/// p = sum_i e_0^i u_i with every u_i free of leading e_0.
GradedPoly strip_e0(const HPoly& p);

/// p = sum_t c_t * e_1^{*t} with c_t in H^0. Throws std::invalid_argument when a word starts with e_0.
GradedPoly reg_T(const HPoly& p);
GradedPoly reg_T(const Word& w);

class RegularizedValue {
 public:
  using Key = std::pair<int, int>;  // (S exponent, T exponent)
  using TermMap = std::map<Key, HPoly, std::greater<>>;

  RegularizedValue() = default;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  HPoly coefficient(int s_exp, int t_exp) const;
  void add(int s_exp, int t_exp, const HPoly& c);

  /// Substitutes S -> e_0, T -> e_1 and multiplies out harmonically.
  HPoly expand() const;
  /// Every coefficient lies in H^0.
  bool satisfies_invariants() const;

  RegularizedValue& operator+=(const RegularizedValue& other);
  friend RegularizedValue operator+(RegularizedValue a, const RegularizedValue& b) { return a += b; }
  /// Commuting S, T with harmonic products of the H^0 coefficients.
  friend RegularizedValue operator*(const RegularizedValue& a, const RegularizedValue& b);

  bool operator==(const RegularizedValue&) const = default;

 private:
  TermMap terms_;
};

/// The unique algebra map fixing H^0 with e_0 -> S, e_1 -> T.
RegularizedValue z_st(const HPoly& p);

/// z_st(p) at S = T = 0 evaluated coefficient-wise.
Estimate z_num(const HPoly& p, const H0Evaluator& evaluator);

/// e.g. `1/2*T^2 + 1/2*s[1,2]`.
std::string to_string(const RegularizedValue& v);

std::size_t reg_cache_size();
void clear_reg_cache();

}  // namespace hsw

#pragma once

// Commutative calculus on the generators W_n standing for
// w_{z,n} = (2n+1)! s_{z^n,2} ... s_{z,2} (W_0 = 1). Coefficients of the
// addition defect A_z and of P_z are computed here as polynomials in the W_n;
// membership in the ideal generated by W_{m+n} - W_m W_n is decided by the
// substitution W_n -> W_1^n, whose kernel is exactly that ideal.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsw/halg.hpp"
#include "hsw/report.hpp"
#include "hsw/series.hpp"

namespace hsw {

inline constexpr int kDefaultMaxWIndex = 8;

/// Sorted multiset of generator indices (each >= 1); empty means the constant monomial.
using WMonomial = std::vector<int>;

class WPoly {
 public:
  using TermMap = std::map<WMonomial, Rational>;

  WPoly() = default;
  WPoly(const Rational& c);  // NOLINT
  WPoly(int c) : WPoly(Rational(c)) {}  // NOLINT

  /// W_n, with W_0 = 1. Throws std::out_of_range above max_index.
  static WPoly generator(int n, int max_index = kDefaultMaxWIndex);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const WMonomial& m) const;
  /// Word weight 2 (n_1 + ... + n_r) of the heaviest monomial.
  int weight() const;
  bool is_homogeneous() const;

  void add_term(WMonomial m, const Rational& c);

  WPoly& operator+=(const WPoly& other);
  WPoly& operator-=(const WPoly& other);
  WPoly& operator*=(const Rational& c);
  friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
  friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }
  friend WPoly operator*(const Rational& c, WPoly p) { return p *= c; }
  friend WPoly operator*(const WPoly& a, const WPoly& b);
  WPoly operator-() const { return Rational(-1) * *this; }

  bool operator==(const WPoly&) const = default;

 private:
  TermMap terms_;
};

int monomial_weight(const WMonomial& m);
std::string to_string(const WPoly& p);

/// Univariate polynomial in W_1: exponent -> coefficient.
struct W1Poly {
  std::map<int, Rational> coeffs;
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const W1Poly&) const = default;
};
W1Poly operator*(const W1Poly& a, const W1Poly& b);
std::string to_string(const W1Poly& p);

/// g_{m,n} = W_{m+n} - W_m W_n.
WPoly g_gen(int m, int n, int max_index = kDefaultMaxWIndex);

/// w_{z,n} in the harmonic algebra.
HPoly w_element(const MonoidElement& z, int n);

/// Ring homomorphism W_n -> w_{z,n}, products -> harmonic products.
HPoly eval_w(const WPoly& p, const MonoidElement& z);

/// Substitution W_n -> W_1^n.
W1Poly reduce_ap(const WPoly& p);

/// Coefficient of x^i y^j in S_z(x+y) - S_z(x)*C_z(y) - C_z(x)*S_z(y), in W form.
WPoly addition_defect_coeff(int i, int j, int max_index = kDefaultMaxWIndex);

/// Coefficient of x^{2N} in -w_{z,1} * S_z(x)^{*2} + C_z(x)^{*2}, in W form.
WPoly pythagoras_coeff(int N, int max_index = kDefaultMaxWIndex);
/// Coefficient at any degree; odd degrees are zero.
WPoly pythagoras_coeff_at_degree(int degree, int max_index = kDefaultMaxWIndex);

struct AdditionWitness {
  Rational scalar;
  int m = 0;
  int n = 0;
  bool operator==(const AdditionWitness&) const = default;
};

class NoWitness : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The (scalar, m, n) with addition_defect_coeff(i, j) = scalar * g_{m,n}.
/// Throws NoWitness when i + j is even (the coefficient vanishes identically).
AdditionWitness ap_witness_addition(int i, int j, int max_index = kDefaultMaxWIndex);

/// Forward direction: every defect coefficient with i + j <= max_degree reduces to 0.
/// Converse: every g_{m,n} with 2(m+n)+1 <= max_degree is recovered from two coefficients.
Report verify_addition(int max_degree, int max_index = kDefaultMaxWIndex);
/// reduce_ap(pythagoras_coeff(N)) = [N == 0] for N <= max_N.
Report verify_pythagoras(int max_N, int max_index = kDefaultMaxWIndex);

/// A_z(x, y) computed directly from the series S_z and C_z.
Series2 addition_defect_series(const MonoidElement& z, int order);
/// P_z(x) computed directly from the series S_z and C_z.
Series1 pythagoras_series(const MonoidElement& z, int order);

/// eval_w(addition_defect_coeff(i, j), z) equals the coefficient of the directly computed A_z for i + j <= max_degree.
Report verify_addition_bridge(const MonoidElement& z, int max_degree, int max_index = kDefaultMaxWIndex);
/// eval_w(pythagoras_coeff(N), z) equals the coefficient of the directly computed P_z for N <= max_N.
Report verify_pythagoras_bridge(const MonoidElement& z, int max_N, int max_index = kDefaultMaxWIndex);

}  // namespace hsw

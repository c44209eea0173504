#pragma once

// Numeric realization of the iterated integral I_{0,1} on H^0.
//
// Words over {e_0, e_1} become multiple zeta values,
//   I_{0,1}(s_{1,k_1} ... s_{1,k_r}) = (-1)^r zeta(k_1, ..., k_r),
//   zeta(k_1, ..., k_r) = sum over 0 < n_1 < ... < n_r of n_1^-k_1 ... n_r^-k_r,
// evaluated by cumulative prefix sums with an explicit tail bound. Words over
// other real letters are integrated by nested composite Gauss-Legendre quadrature.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>

#include "hsw/estimate.hpp"
#include "hsw/halg.hpp"
#include "hsw/report.hpp"

namespace hsw {

inline constexpr std::size_t kDefaultMzvCutoff = 1'000'000;
inline constexpr double kDefaultQuadTolerance = 1e-10;
inline constexpr std::size_t kMaxQuadratureWeight = 4;

struct MzvIndex {
  std::vector<int> ks;
  int sign = 1;

  /// Empty, or all entries positive with the last one at least 2.
  bool admissible() const;
  bool operator==(const MzvIndex&) const = default;
};

/// Throws UnsupportedWord unless w lies in H^0 and uses only the letters 0 and 1.
MzvIndex word_to_mzv(const Word& w);

/// zeta(ks) (sign ignored). Throws std::domain_error for an inadmissible index
/// and std::invalid_argument for a zero cutoff.
Estimate zeta(const std::vector<int>& ks, std::size_t cutoff = kDefaultMzvCutoff, bool em_correct = true);
/// sign * zeta(ks).
Estimate zeta(const MzvIndex& idx, std::size_t cutoff = kDefaultMzvCutoff, bool em_correct = true);

/// Single Riemann zeta value for k >= 2 by Euler-Maclaurin with Bernoulli corrections.
double riemann_zeta(int k);

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// I_{0,1}(w) for w in H^0 over real rational letters other than 1, weight <= 4.
/// Throws UnsupportedWord outside that domain and ConvergenceError when tol is not reached.
Estimate iterint_num(const Word& w, double tol = kDefaultQuadTolerance);

struct EvaluatorOptions {
  std::size_t mzv_cutoff = kDefaultMzvCutoff;
  bool em_correct = true;
  double quad_tolerance = kDefaultQuadTolerance;
};

/// Routes {0,1}-words to zeta and other real words to quadrature. Results are cached;
/// copies share the cache.
class NumericEvaluator {
 public:
  explicit NumericEvaluator(EvaluatorOptions options = {});

  Estimate operator()(const Word& w) const;
  H0Evaluator as_function() const;
  const EvaluatorOptions& options() const { return options_; }
  std::size_t cache_size() const;

 private:
  struct Cache;
  EvaluatorOptions options_;
  std::shared_ptr<Cache> cache_;
};

/// Z(s_{1,2}^n) = (-1)^n pi^{2n}/(2n+1)! for n <= n_max, Z(s_{1,1}) = 0,
/// and Z(s_{1,k}) = -zeta(k) for 2 <= k <= k_max.
Report check_assumptions(int n_max, int k_max, double tol, const NumericEvaluator& evaluator = NumericEvaluator());

}  // namespace hsw

#pragma once

// Linear relations among multiple zeta values obtained by evaluating the
// addition-defect and Pythagoras coefficients at z = 1.

#include <string>
#include <vector>

#include "hsw/mzveval.hpp"

namespace hsw {

inline constexpr int kMaxRelationWeight = 12;

struct RelationTerm {
  Rational coefficient;
  std::vector<int> index;
};

struct Relation {
  int weight = 0;
  /// Coefficients that produce this relation, e.g. "pythagoras[N=2]", "addition[3,2]".
  std::vector<std::string> sources;
  /// Coprime integers, leading term positive, heavier and lexicographically larger words first.
  std::vector<RelationTerm> terms;
  double residual = 0.0;
  double bound = 0.0;
};

/// Relations at an even weight in [2, kMaxRelationWeight]; identical relations are merged.
/// Throws std::invalid_argument for odd or out-of-range weights.
std::vector<Relation> mzv_relations(int weight, const NumericEvaluator& evaluator = NumericEvaluator());

/// e.g. `4*z(2,2) - 3*z(4) = 0`.
std::string to_string(const Relation& r);

}  // namespace hsw

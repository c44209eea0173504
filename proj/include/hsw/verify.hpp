#pragma once

// Random inputs and the property-style verification drivers.

#include <cstdint>
#include <random>
#include <vector>

#include "hsw/halg.hpp"
#include "hsw/mzveval.hpp"
#include "hsw/report.hpp"

namespace hsw {

struct RandomPolyOptions {
  std::vector<MonoidElement> alphabet{MonoidElement::zero(), MonoidElement::unit()};
  std::size_t max_weight = 5;
  std::size_t max_terms = 4;
  long max_numerator = 5;
  long max_denominator = 3;
};

class RandomPolyGen {
 public:
  explicit RandomPolyGen(RandomPolyOptions options = {}, std::uint64_t seed = 1);

  Word word(std::size_t weight);
  Word word();
  Rational coefficient();
  HPoly poly();
  /// s_{1,k_1} ... s_{1,k_r} with k_r >= 2, given depth and weight limits.
  Word admissible_word(std::size_t max_depth, std::size_t max_weight);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::size_t uniform(std::size_t lo, std::size_t hi);

  RandomPolyOptions options_;
  std::mt19937_64 rng_;
};

/// z_st roundtrip, coefficient invariants and multiplicativity on random inputs.
Report verify_regularization(int samples, std::size_t max_weight, std::uint64_t seed = 1,
                             std::vector<MonoidElement> alphabet = {MonoidElement::zero(), MonoidElement::unit()});

/// z_num(u) z_num(v) against z_num(u * v) for random admissible {0,1}-words.
Report verify_harmonic_hom(int samples, std::size_t max_weight, const NumericEvaluator& evaluator,
                           std::uint64_t seed = 1);

}  // namespace hsw

#include "hsw/verify.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>

#include "hsw/reg.hpp"

namespace hsw {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

RandomPolyGen::RandomPolyGen(RandomPolyOptions options, std::uint64_t seed)
    : options_(std::move(options)), rng_(seed) {
  if (options_.alphabet.empty()) throw std::invalid_argument("random alphabet must not be empty");
}

std::size_t RandomPolyGen::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

Word RandomPolyGen::word(std::size_t weight) {
  std::vector<MonoidElement> letters;
  letters.reserve(weight);
  for (std::size_t i = 0; i < weight; ++i) letters.push_back(options_.alphabet[uniform(0, options_.alphabet.size() - 1)]);
  return Word(std::move(letters));
}

Word RandomPolyGen::word() { return word(uniform(0, options_.max_weight)); }

Rational RandomPolyGen::coefficient() {
  long num = 0;
  while (num == 0)
    num = std::uniform_int_distribution<long>(-options_.max_numerator, options_.max_numerator)(rng_);
  const long den = std::uniform_int_distribution<long>(1, options_.max_denominator)(rng_);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

HPoly RandomPolyGen::poly() {
  HPoly p;
  const std::size_t terms = uniform(1, options_.max_terms);
  for (std::size_t i = 0; i < terms; ++i) p.add_term(word(), coefficient());
  return p;
}

Word RandomPolyGen::admissible_word(std::size_t max_depth, std::size_t max_weight) {
  if (max_depth == 0 || max_weight < 2) return Word();
  const std::size_t depth = uniform(1, std::min(max_depth, max_weight - 1));
  const std::size_t weight = uniform(depth + 1, max_weight);
  // distribute weight - depth extra e_0 letters, at least one on the last block
  std::vector<std::size_t> ks(depth, 1);
  ks.back() = 2;
  for (std::size_t extra = weight - depth - 1; extra > 0; --extra) ++ks[uniform(0, depth - 1)];
  Word w;
  for (std::size_t k : ks) w += s_word(MonoidElement::unit(), k);
  return w;
}

Report verify_regularization(int samples, std::size_t max_weight, std::uint64_t seed,
                             std::vector<MonoidElement> alphabet) {
  Report report{"regularization", {}};
  RandomPolyOptions opts;
  opts.alphabet = std::move(alphabet);
  opts.max_weight = max_weight;
  RandomPolyGen gen(opts, seed);
  for (int i = 0; i < samples; ++i) {
    const HPoly u = gen.poly();
    const HPoly v = gen.poly();
    const RegularizedValue zu = z_st(u);
    const RegularizedValue zv = z_st(v);

    const HPoly back = zu.expand();
    CheckItem roundtrip{"roundtrip." + std::to_string(i), back == u && zu.satisfies_invariants(), to_string(back),
                        to_string(u), to_string(zu)};
    report.items.push_back(std::move(roundtrip));

    const RegularizedValue lhs = z_st(harmonic(u, v));
    const RegularizedValue rhs = zu * zv;
    CheckItem hom{"homomorphism." + std::to_string(i), lhs == rhs, "", "", ""};
    if (!hom.passed) {
      hom.lhs = to_string(lhs);
      hom.rhs = to_string(rhs);
      hom.detail = "u = " + to_string(u) + ", v = " + to_string(v);
    }
    report.items.push_back(std::move(hom));
  }
  return report;
}

Report verify_harmonic_hom(int samples, std::size_t max_weight, const NumericEvaluator& evaluator,
                           std::uint64_t seed) {
  Report report{"harmonic-hom", {}};
  RandomPolyGen gen({}, seed);
  const auto eval = evaluator.as_function();
  for (int i = 0; i < samples; ++i) {
    const HPoly u(gen.admissible_word(2, max_weight));
    const HPoly v(gen.admissible_word(2, max_weight));
    const Estimate product = z_num(u, eval) * z_num(v, eval);
    const Estimate direct = z_num(harmonic(u, v), eval);
    const double diff = std::abs(product.value - direct.value);
    const double allowed = product.error_bound + direct.error_bound +
                           16 * DBL_EPSILON * (1.0 + std::abs(product.value) + std::abs(direct.value));
    report.items.push_back({"pair." + std::to_string(i), diff <= allowed, fmt(product.value), fmt(direct.value),
                            to_string(u) + " * " + to_string(v) + ": residual " + fmt(diff) + ", bound " +
                                fmt(allowed)});
  }
  return report;
}

}  // namespace hsw

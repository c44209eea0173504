#include "hsw/relations.hpp"

#include <cfloat>
#include <cmath>
#include <map>
#include <stdexcept>

#include "hsw/wcalc.hpp"

namespace hsw {

namespace {

// Signed zeta combination of an evaluated coefficient, scaled to coprime integers
// with a positive leading term. Empty when the coefficient degenerates to 0 = 0.
HPoly normalized_relation(const HPoly& evaluated) {
  HPoly rel;
  for (const auto& [w, c] : evaluated.terms()) rel.add_term(w, c * word_to_mzv(w).sign);
  if (rel.is_zero()) return rel;
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& [w, c] : rel.terms()) {
    den = lcm(den, c.get_den());
    num = gcd(num, c.get_num());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (rel.terms().begin()->second < 0) scale = -scale;
  return scale * rel;
}

}  // namespace

std::vector<Relation> mzv_relations(int weight, const NumericEvaluator& evaluator) {
  if (weight % 2 != 0) throw std::invalid_argument("relations exist only at even weight, got " + std::to_string(weight));
  if (weight < 2 || weight > kMaxRelationWeight)
    throw std::invalid_argument("relation weight must lie in [2, " + std::to_string(kMaxRelationWeight) + "]");

  std::vector<std::pair<std::string, WPoly>> sources;
  sources.emplace_back("pythagoras[N=" + std::to_string(weight / 2) + "]", pythagoras_coeff(weight / 2));
  for (int i = 0; i <= weight + 1; ++i)
    sources.emplace_back("addition[" + std::to_string(i) + "," + std::to_string(weight + 1 - i) + "]",
                         addition_defect_coeff(i, weight + 1 - i));

  std::vector<Relation> out;
  std::map<std::string, std::size_t> seen;
  const MonoidElement one = MonoidElement::unit();
  for (const auto& [name, coeff] : sources) {
    const HPoly rel = normalized_relation(eval_w(coeff, one));
    if (rel.is_zero()) continue;

    Relation r;
    r.weight = weight;
    double value = 0.0;
    double magnitude = 0.0;
    for (const auto& [w, c] : rel.terms()) {
      const MzvIndex idx = word_to_mzv(w);
      r.terms.push_back({c, idx.ks});
      const Estimate z = evaluator(w);
      const double cd = to_double(c);
      value += cd * idx.sign * z.value;
      magnitude += std::abs(cd * z.value);
      r.bound += std::abs(cd) * z.error_bound;
    }
    r.bound += 4 * DBL_EPSILON * static_cast<double>(r.terms.size()) * magnitude;
    r.residual = std::abs(value);

    const std::string key = to_string(r);
    if (auto it = seen.find(key); it != seen.end()) {
      out[it->second].sources.push_back(name);
      continue;
    }
    r.sources.push_back(name);
    seen.emplace(key, out.size());
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_string(const Relation& r) {
  std::string out;
  bool first = true;
  for (const auto& t : r.terms) {
    const bool negative = t.coefficient < 0;
    const Rational mag = negative ? Rational(-t.coefficient) : t.coefficient;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    out += "z(";
    for (std::size_t i = 0; i < t.index.size(); ++i) out += (i ? "," : "") + std::to_string(t.index[i]);
    out += ")";
  }
  return out + " = 0";
}

}  // namespace hsw

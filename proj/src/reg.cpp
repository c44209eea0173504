#include "hsw/reg.hpp"

#include <stdexcept>
#include <unordered_map>

namespace hsw {

WordClass classify(const Word& w) {
  if (w.empty()) return WordClass::InH0;
  if (w.front().is_zero()) return WordClass::General;
  return w.back().is_unit() ? WordClass::InH1NotH0 : WordClass::InH0;
}

bool in_h0(const HPoly& p) {
  for (const auto& [w, c] : p.terms())
    if (classify(w) != WordClass::InH0) return false;
  return true;
}

bool in_h1(const HPoly& p) {
  for (const auto& [w, c] : p.terms())
    if (classify(w) == WordClass::General) return false;
  return true;
}

std::size_t trailing_unit_count(const Word& w) {
  std::size_t m = 0;
  while (m < w.weight() && w[w.weight() - 1 - m].is_unit()) ++m;
  return m;
}

namespace {

void add_graded(GradedPoly& g, int exp, const HPoly& c) {
  if (c.is_zero()) return;
  HPoly& slot = g[exp];
  slot += c;
  if (slot.is_zero()) g.erase(exp);
}

std::unordered_map<Word, GradedPoly>& reg_cache() {
  thread_local std::unordered_map<Word, GradedPoly> cache;
  return cache;
}

}  // namespace

GradedPoly strip_e0(const HPoly& p) {
  GradedPoly out;
  for (const auto& [w, c] : p.terms()) {
    std::size_t i = 0;
    while (i < w.weight() && w[i].is_zero()) ++i;
    add_graded(out, static_cast<int>(i), HPoly(w.subword(i), c));
  }
  return out;
}

GradedPoly reg_T(const Word& w) {
  const WordClass cls = classify(w);
  if (cls == WordClass::General)
    throw std::invalid_argument("reg_T needs words without leading e_0, got " + to_string(w));
  if (cls == WordClass::InH0) return GradedPoly{{0, HPoly(w)}};

  auto& cache = reg_cache();
  if (auto it = cache.find(w); it != cache.end()) return it->second;

  const std::size_t m = trailing_unit_count(w);
  const Word base = w.subword(0, w.weight() - 1);
  const Word e1 = Word::letter(MonoidElement::unit());
  // base * e_1 = m w + (words with at most m - 1 trailing e_1)
  HPoly rest = harmonic(base, e1);
  if (rest.coefficient(w) != Rational(static_cast<long>(m)))
    throw std::logic_error("unexpected leading coefficient while regularizing " + to_string(w));
  rest.add_term(w, -Rational(static_cast<long>(m)));
  for (const auto& [u, c] : rest.terms())
    if (classify(u) == WordClass::General || trailing_unit_count(u) >= m)
      throw std::logic_error("regularization does not descend at " + to_string(u));

  GradedPoly result;
  for (const auto& [t, c] : reg_T(base)) add_graded(result, t + 1, c);
  for (const auto& [t, c] : reg_T(rest)) add_graded(result, t, -c);
  const Rational inv_m(1, static_cast<long>(m));
  for (auto& [t, c] : result) c *= inv_m;

  return cache.emplace(w, std::move(result)).first->second;
}

GradedPoly reg_T(const HPoly& p) {
  GradedPoly out;
  for (const auto& [w, c] : p.terms())
    for (const auto& [t, coeff] : reg_T(w)) add_graded(out, t, c * coeff);
  return out;
}

HPoly RegularizedValue::coefficient(int s_exp, int t_exp) const {
  auto it = terms_.find({s_exp, t_exp});
  return it == terms_.end() ? HPoly() : it->second;
}

void RegularizedValue::add(int s_exp, int t_exp, const HPoly& c) {
  if (c.is_zero()) return;
  HPoly& slot = terms_[{s_exp, t_exp}];
  slot += c;
  if (slot.is_zero()) terms_.erase({s_exp, t_exp});
}

HPoly RegularizedValue::expand() const {
  const HPoly e1(Word::letter(MonoidElement::unit()));
  std::map<int, HPoly> e1_powers;
  HPoly out;
  for (const auto& [key, c] : terms_) {
    const auto [s_exp, t_exp] = key;
    auto it = e1_powers.find(t_exp);
    if (it == e1_powers.end()) it = e1_powers.emplace(t_exp, harmonic_power(e1, static_cast<unsigned>(t_exp))).first;
    const Word e0_prefix(std::vector<MonoidElement>(static_cast<std::size_t>(s_exp), MonoidElement::zero()));
    out += prepend(e0_prefix, harmonic(c, it->second));
  }
  return out;
}

bool RegularizedValue::satisfies_invariants() const {
  for (const auto& [key, c] : terms_)
    if (c.is_zero() || !in_h0(c)) return false;
  return true;
}

RegularizedValue& RegularizedValue::operator+=(const RegularizedValue& other) {
  for (const auto& [key, c] : other.terms_) add(key.first, key.second, c);
  return *this;
}

RegularizedValue operator*(const RegularizedValue& a, const RegularizedValue& b) {
  RegularizedValue r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add(ka.first + kb.first, ka.second + kb.second, harmonic(ca, cb));
  return r;
}

RegularizedValue z_st(const HPoly& p) {
  RegularizedValue v;
  for (const auto& [s_exp, h1] : strip_e0(p))
    for (const auto& [t_exp, h0] : reg_T(h1)) v.add(s_exp, t_exp, h0);
  return v;
}

Estimate z_num(const HPoly& p, const H0Evaluator& evaluator) {
  const HPoly constant = z_st(p).coefficient(0, 0);
  Estimate acc;
  for (const auto& [w, c] : constant.terms()) {
    const double coeff = to_double(c);
    acc += coeff * evaluator(w);
    acc.error_bound += std::abs(acc.value) * 4e-16;
  }
  return acc;
}

std::string to_string(const RegularizedValue& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : v.terms()) {
    const auto [s_exp, t_exp] = key;
    std::string st;
    auto power = [](const char* name, int e) {
      return e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e);
    };
    if (s_exp > 0) st += power("S", s_exp);
    if (t_exp > 0) st += (st.empty() ? "" : "*") + power("T", t_exp);
    for (const auto& [w, coeff] : c.terms()) {
      const bool negative = coeff < 0;
      const Rational mag = negative ? Rational(-coeff) : coeff;
      out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
      first = false;
      std::string factors;
      if (!w.empty()) factors = to_string(w);
      if (!st.empty()) factors += (factors.empty() ? "" : "*") + st;
      if (factors.empty())
        out += to_string(mag);
      else if (mag == 1)
        out += factors;
      else
        out += to_string(mag) + "*" + factors;
    }
  }
  return out;
}

std::size_t reg_cache_size() { return reg_cache().size(); }
void clear_reg_cache() { reg_cache().clear(); }

}  // namespace hsw

#include "hsw/halg.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace hsw {

std::size_t Word::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [](const MonoidElement& a) { return !a.is_zero(); }));
}

Word Word::subword(std::size_t pos, std::size_t count) const {
  pos = std::min(pos, letters_.size());
  count = std::min(count, letters_.size() - pos);
  return Word(std::vector<MonoidElement>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                         letters_.begin() + static_cast<std::ptrdiff_t>(pos + count)));
}

MonoidInstance Word::instance() const {
  MonoidInstance inst = MonoidInstance::Neutral;
  for (const auto& a : letters_) inst = common_instance(inst, a.instance());
  return inst;
}

Word& Word::operator+=(const Word& tail) {
  letters_.insert(letters_.end(), tail.letters_.begin(), tail.letters_.end());
  return *this;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(), other.letters_.begin(),
                                                other.letters_.end());
}

std::size_t Word::hash() const {
  std::size_t h = letters_.size();
  for (const auto& a : letters_) h ^= a.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

Word s_word(const MonoidElement& z, std::size_t k) {
  if (k == 0) throw std::invalid_argument("s_word needs k >= 1");
  std::vector<MonoidElement> letters(k, MonoidElement::zero());
  letters.front() = z;
  return Word(std::move(letters));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  if (w.front().is_zero()) {
    for (const auto& a : w.letters()) out += "e[" + to_string(a) + "]";
    return out;
  }
  std::size_t i = 0;
  while (i < w.weight()) {
    std::size_t j = i + 1;
    while (j < w.weight() && w[j].is_zero()) ++j;
    out += "s[" + to_string(w[i]) + "," + std::to_string(j - i) + "]";
    i = j;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

HPoly::HPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Word{}, constant);
}

HPoly::HPoly(const Word& w, const Rational& coefficient) {
  if (coefficient != 0) terms_.emplace(w, coefficient);
}

Rational HPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t HPoly::max_weight() const { return terms_.empty() ? 0 : terms_.begin()->first.weight(); }

bool HPoly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.weight() == terms_.rbegin()->first.weight();
}

bool HPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

MonoidInstance HPoly::instance() const {
  MonoidInstance inst = MonoidInstance::Neutral;
  for (const auto& [w, c] : terms_) inst = common_instance(inst, w.instance());
  return inst;
}

void HPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

HPoly& HPoly::operator+=(const HPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

HPoly& HPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

HPoly HPoly::operator-() const {
  HPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

HPoly concat(const HPoly& p, const HPoly& q) {
  common_instance(p.instance(), q.instance());
  HPoly r;
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) r.add_term(u + v, a * b);
  return r;
}

HPoly prepend(const Word& prefix, const HPoly& p) {
  HPoly r;
  for (const auto& [w, c] : p.terms()) r.add_term(prefix + w, c);
  return r;
}

namespace {

struct WordPairHash {
  std::size_t operator()(const std::pair<Word, Word>& k) const noexcept {
    std::size_t h = k.first.hash();
    return h ^ (k.second.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  }
};

using HarmonicCache = std::unordered_map<std::pair<Word, Word>, HPoly, WordPairHash>;

HarmonicCache& harmonic_cache() {
  thread_local HarmonicCache cache;
  return cache;
}

// Computes the product for a canonical pair (u <= v) without the instance check.
const HPoly& harmonic_words(const Word& u, const Word& v) {
  if (v < u) return harmonic_words(v, u);
  auto& cache = harmonic_cache();
  auto key = std::make_pair(u, v);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  HPoly result;
  if (u.empty()) {
    result = HPoly(v);
  } else {
    const Word u_tail = u.subword(1);
    const Word v_tail = v.subword(1);
    HPoly inner = harmonic_words(u_tail, v);
    inner += harmonic_words(u, v_tail);
    inner -= prepend(Word::letter(MonoidElement::zero()), harmonic_words(u_tail, v_tail));
    result = prepend(Word::letter(mul(u.front(), v.front())), inner);
  }
  // element references survive rehashing, so callers may hold them across recursion
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

const HPoly& harmonic(const Word& u, const Word& v) {
  common_instance(u.instance(), v.instance());
  return harmonic_words(u, v);
}

HPoly harmonic(const HPoly& p, const HPoly& q) {
  common_instance(p.instance(), q.instance());
  HPoly r;
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) {
      const Rational ab = a * b;
      for (const auto& [w, c] : harmonic_words(u, v).terms()) r.add_term(w, ab * c);
    }
  return r;
}

HPoly harmonic_power(const HPoly& p, unsigned n) {
  HPoly r(1);
  for (unsigned i = 0; i < n; ++i) r = harmonic(r, p);
  return r;
}

std::size_t harmonic_cache_size() { return harmonic_cache().size(); }
void clear_harmonic_cache() { harmonic_cache().clear(); }

std::string to_string(const HPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += to_string(w);
    } else {
      out += to_string(mag) + "*" + to_string(w);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const HPoly& p) { return os << to_string(p); }

}  // namespace hsw

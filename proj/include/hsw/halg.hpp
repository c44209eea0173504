#pragma once

// The harmonic algebra: exact rational linear combinations of words in the
// letters e_a (a in a monoid with zero), with concatenation and the
// weight-homogeneous harmonic product
//
//   1 * w = w * 1 = w,
//   e_a u * e_b v = e_{ab} (u * e_b v + e_a u * v - e_0 (u * v)).

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hsw/monoid.hpp"
#include "hsw/rational.hpp"

namespace hsw {

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<MonoidElement> letters) : letters_(letters) {}
  explicit Word(std::vector<MonoidElement> letters) : letters_(std::move(letters)) {}

  /// The one-letter word e_a.
  static Word letter(const MonoidElement& a) { return Word({a}); }

  const std::vector<MonoidElement>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t weight() const { return letters_.size(); }
  /// Number of letters different from e_0.
  std::size_t nonzero_count() const;
  const MonoidElement& operator[](std::size_t i) const { return letters_[i]; }
  const MonoidElement& front() const { return letters_.front(); }
  const MonoidElement& back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Letters [pos, pos + count).
  Word subword(std::size_t pos, std::size_t count = static_cast<std::size_t>(-1)) const;

  MonoidInstance instance() const;

  Word& operator+=(const Word& tail);
  friend Word operator+(Word head, const Word& tail) { return head += tail; }

  bool operator==(const Word&) const = default;
  /// Graded order: shorter words first, then lexicographic on letters.
  std::strong_ordering operator<=>(const Word& other) const;

  std::size_t hash() const;

 private:
  std::vector<MonoidElement> letters_;
};

/// s_{z,k} = e_z e_0^{k-1}. Throws std::invalid_argument for k = 0.
Word s_word(const MonoidElement& z, std::size_t k);

/// `1` for the empty word; e-letters `e[0]e[1]` when the word starts with e_0,
/// otherwise blocks `s[a,k]`.
std::string to_string(const Word& w);
std::ostream& operator<<(std::ostream& os, const Word& w);

class HPoly {
 public:
  /// Heaviest words first; printing and iteration share this order.
  using TermMap = std::map<Word, Rational, std::greater<>>;

  HPoly() = default;
  HPoly(const Rational& constant);  // NOLINT: scalars embed as multiples of the empty word
  HPoly(int constant) : HPoly(Rational(constant)) {}  // NOLINT
  HPoly(const Word& w, const Rational& coefficient = 1);  // NOLINT

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& w) const;
  /// Largest word weight present; 0 for the zero polynomial.
  std::size_t max_weight() const;
  bool is_homogeneous() const;
  /// True when the polynomial is c * (empty word).
  bool is_constant() const;
  Rational constant_term() const { return coefficient(Word{}); }
  MonoidInstance instance() const;

  /// Adds c * w in place, dropping the term if it cancels.
  void add_term(const Word& w, const Rational& c);

  HPoly& operator+=(const HPoly& other);
  HPoly& operator-=(const HPoly& other);
  HPoly& operator*=(const Rational& c);
  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const Rational& c, HPoly p) { return p *= c; }
  friend HPoly operator*(HPoly p, const Rational& c) { return p *= c; }
  HPoly operator-() const;

  bool operator==(const HPoly& other) const { return terms_ == other.terms_; }

 private:
  TermMap terms_;
};

/// Bilinear extension of word concatenation.
HPoly concat(const HPoly& p, const HPoly& q);
/// e_a^n as a single word prefix applied to every term of p.
HPoly prepend(const Word& prefix, const HPoly& p);

/// The harmonic product. Throws InstanceMismatch when p and q use different monoid instances.
HPoly harmonic(const HPoly& p, const HPoly& q);
/// Harmonic product of two words (memoized per thread).
const HPoly& harmonic(const Word& u, const Word& v);
/// p^{*n}; p^{*0} = 1.
HPoly harmonic_power(const HPoly& p, unsigned n);

std::size_t harmonic_cache_size();
void clear_harmonic_cache();

std::string to_string(const HPoly& p);
std::ostream& operator<<(std::ostream& os, const HPoly& p);

}  // namespace hsw

template <>
struct std::hash<hsw::Word> {
  std::size_t operator()(const hsw::Word& w) const noexcept { return w.hash(); }
};

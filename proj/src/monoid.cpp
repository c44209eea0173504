#include "hsw/monoid.hpp"

#include <cctype>
#include <ostream>

namespace hsw {

MonoidElement MonoidElement::cyclic(std::uint64_t exponent) {
  if (exponent == 0) return unit();
  return MonoidElement(CyclicPower{exponent});
}

MonoidElement MonoidElement::rational(Rational q) {
  q.canonicalize();
  if (q == 0) return zero();
  if (q == 1) return unit();
  if (abs(q) < 1) throw std::domain_error("rational monoid element needs |q| >= 1, got " + to_string(q));
  return MonoidElement(RationalMod{q});
}

std::uint64_t MonoidElement::exponent() const {
  if (is_unit()) return 0;
  if (const auto* c = std::get_if<CyclicPower>(&rep_)) return c->exponent;
  throw std::logic_error("exponent() on a non-cyclic element");
}

Rational MonoidElement::value() const {
  if (is_zero()) return Rational(0);
  if (is_unit()) return Rational(1);
  if (const auto* r = std::get_if<RationalMod>(&rep_)) return r->value;
  throw std::logic_error("value() on a cyclic power");
}

MonoidInstance MonoidElement::instance() const {
  if (is_cyclic()) return MonoidInstance::Cyclic;
  if (is_rational()) return MonoidInstance::Rational;
  return MonoidInstance::Neutral;
}

std::strong_ordering MonoidElement::operator<=>(const MonoidElement& other) const {
  if (auto c = rep_.index() <=> other.rep_.index(); c != 0) return c;
  if (const auto* a = std::get_if<CyclicPower>(&rep_))
    return a->exponent <=> std::get<CyclicPower>(other.rep_).exponent;
  if (const auto* a = std::get_if<RationalMod>(&rep_)) {
    int c = cmp(a->value, std::get<RationalMod>(other.rep_).value);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return std::strong_ordering::equal;
}

std::size_t MonoidElement::hash() const {
  std::size_t h = rep_.index() * 0x100000001b3ull;
  if (const auto* c = std::get_if<CyclicPower>(&rep_)) h ^= c->exponent * 0x9e3779b97f4a7c15ull;
  if (const auto* r = std::get_if<RationalMod>(&rep_)) h ^= hash_value(r->value);
  return h;
}

MonoidInstance common_instance(MonoidInstance a, MonoidInstance b) {
  if (a == MonoidInstance::Neutral) return b;
  if (b == MonoidInstance::Neutral || a == b) return a;
  throw InstanceMismatch("cannot combine cyclic and rational monoid elements");
}

MonoidElement mul(const MonoidElement& a, const MonoidElement& b) {
  common_instance(a.instance(), b.instance());
  if (a.is_zero() || b.is_zero()) return MonoidElement::zero();
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.is_cyclic()) return MonoidElement::cyclic(a.exponent() + b.exponent());
  return MonoidElement::rational(a.value() * b.value());
}

MonoidElement pow(const MonoidElement& a, std::uint64_t n) {
  if (n == 0) return MonoidElement::unit();
  if (a.is_zero() || a.is_unit()) return a;
  if (a.is_cyclic()) return MonoidElement::cyclic(a.exponent() * n);
  Rational v = a.value();
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v.get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), v.get_den_mpz_t(), static_cast<unsigned long>(n));
  return MonoidElement::rational(Rational(num, den));
}

MonoidElement parse_element(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty monoid element");
  if (text.front() == 'z') {
    if (text.size() == 1) return MonoidElement::cyclic(1);
    if (text[1] != '^' || text.size() == 2) throw std::invalid_argument("malformed cyclic power: " + std::string(text));
    std::uint64_t n = 0;
    for (char c : text.substr(2)) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("malformed cyclic power: " + std::string(text));
      n = n * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return MonoidElement::cyclic(n);
  }
  return MonoidElement::rational(parse_rational(text));
}

std::string to_string(const MonoidElement& e) {
  if (e.is_zero()) return "0";
  if (e.is_unit()) return "1";
  if (e.is_cyclic()) return e.exponent() == 1 ? "z" : "z^" + std::to_string(e.exponent());
  return to_string(e.value());
}

std::ostream& operator<<(std::ostream& os, const MonoidElement& e) { return os << to_string(e); }

}  // namespace hsw

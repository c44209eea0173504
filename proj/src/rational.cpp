#include "hsw/rational.hpp"

#include <stdexcept>

namespace hsw {

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (den.empty() || den.front() == '-' || den.front() == '+' || !is_int(den))
      throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  if (!is_int(num)) throw std::invalid_argument("malformed rational: " + std::string(text));
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational q;
  q.get_num() = mpz_class(n, 10);
  q.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

std::size_t hash_value(const Rational& q) {
  auto limb = [](const mpz_class& z) -> std::size_t {
    return mpz_size(z.get_mpz_t()) ? static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) : 0;
  };
  std::size_t h = limb(q.get_num()) * 0x9e3779b97f4a7c15ull;
  h ^= limb(q.get_den()) + 0x7f4a7c15ull + (h << 6) + (h >> 2);
  h ^= static_cast<std::size_t>(sgn(q) + 1) << 1;
  h ^= mpz_size(q.get_num_mpz_t());
  return h;
}

}  // namespace hsw

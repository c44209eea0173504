#include "hsw/trig.hpp"

namespace hsw {

Word sine_chain(const MonoidElement& z, std::size_t k, std::size_t n) {
  Word w;
  for (std::size_t i = n; i >= 1; --i) w += s_word(pow(z, i), k);
  return w;
}

Series1 sine_taylor(const MonoidElement& z, int k, int order) {
  if (k < 1) throw std::invalid_argument("sine_taylor needs k >= 1");
  Series1 f(order);
  for (int n = 0; (n + 1) * k - 1 <= order; ++n)
    f[(n + 1) * k - 1] = HPoly(sine_chain(z, static_cast<std::size_t>(k), static_cast<std::size_t>(n)));
  return f;
}

Series1 reflection_exponent(const MonoidElement& z, int k, int order) {
  if (k < 1) throw std::invalid_argument("reflection_exponent needs k >= 1");
  Series1 f(order);
  for (int n = 1; n * k <= order; ++n)
    f[n * k] = HPoly(s_word(pow(z, static_cast<std::uint64_t>(n)), static_cast<std::size_t>(n * k)), Rational(1, n));
  return f;
}

Series1 sine_reflection(const MonoidElement& z, int k, int order) {
  if (k < 1) throw std::invalid_argument("sine_reflection needs k >= 1");
  Series1 f(order);
  const int inner_order = order - (k - 1);
  if (inner_order < 0) return f;
  const Series1 e = exp_star(reflection_exponent(z, k, inner_order));
  for (int n = 0; n <= inner_order; ++n) f[n + k - 1] = e[n];
  return f;
}

Series1 sine(const MonoidElement& z, int order) { return sine_taylor(z, 2, order); }

Series1 cosine(const MonoidElement& z, int order) { return derivative(sine_taylor(z, 2, order + 1)); }

HPoly coincidence_lhs(const MonoidElement& z, int k, int n) {
  return HPoly(sine_chain(z, static_cast<std::size_t>(k), static_cast<std::size_t>(n)), Rational(n));
}

HPoly coincidence_rhs(const MonoidElement& z, int k, int n) {
  HPoly acc;
  for (int i = 1; i <= n; ++i) {
    const Word head = s_word(pow(z, static_cast<std::uint64_t>(i)), static_cast<std::size_t>(i * k));
    acc += HPoly(harmonic(head, sine_chain(z, static_cast<std::size_t>(k), static_cast<std::size_t>(n - i))));
  }
  return acc;
}

namespace {

void compare_series(Report& report, const std::string& prefix, const Series1& lhs, const Series1& rhs) {
  for (int n = 0; n <= std::min(lhs.order(), rhs.order()); ++n) {
    CheckItem item;
    item.id = prefix + "[x^" + std::to_string(n) + "]";
    item.passed = lhs[n] == rhs[n];
    if (!item.passed) {
      item.lhs = to_string(lhs[n]);
      item.rhs = to_string(rhs[n]);
    }
    report.items.push_back(std::move(item));
  }
}

}  // namespace

Report verify_coincidence(const MonoidElement& z, int k, int max_n, int order) {
  Report report;
  report.theorem = "coincidence";
  compare_series(report, "series(k=" + std::to_string(k) + ")", sine_taylor(z, k, order),
                 sine_reflection(z, k, order));
  for (int n = 1; n <= max_n; ++n) {
    const HPoly lhs = coincidence_lhs(z, k, n);
    const HPoly rhs = coincidence_rhs(z, k, n);
    CheckItem item;
    item.id = "coefficient(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
    item.passed = lhs == rhs;
    if (!item.passed) {
      item.lhs = to_string(lhs);
      item.rhs = to_string(rhs);
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

Report verify_reflection_product(const MonoidElement& z, int order) {
  Report report;
  report.theorem = "reflection-product";
  const Series1 lhs = sine_reflection(mul(z, z), 2, order);
  Series1 rhs(order);
  if (order >= 1) {
    const Series1 s1 = sine_reflection(z, 1, order - 1);
    const Series1 product = mul_harmonic(s1, negate_argument(s1));
    for (int n = 0; n < order; ++n) rhs[n + 1] = product[n];
  }
  compare_series(report, "reflection", lhs, rhs);
  return report;
}

}  // namespace hsw

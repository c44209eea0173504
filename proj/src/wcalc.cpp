#include "hsw/wcalc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hsw/trig.hpp"

namespace hsw {

WPoly::WPoly(const Rational& c) {
  if (c != 0) terms_.emplace(WMonomial{}, c);
}

WPoly WPoly::generator(int n, int max_index) {
  if (n < 0) throw std::out_of_range("negative W index");
  if (n > max_index)
    throw std::out_of_range("W index " + std::to_string(n) + " exceeds the configured maximum " +
                            std::to_string(max_index));
  WPoly p;
  if (n == 0)
    p.terms_.emplace(WMonomial{}, 1);
  else
    p.terms_.emplace(WMonomial{n}, 1);
  return p;
}

Rational WPoly::coefficient(const WMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int monomial_weight(const WMonomial& m) { return 2 * std::accumulate(m.begin(), m.end(), 0); }

int WPoly::weight() const {
  int w = 0;
  for (const auto& [m, c] : terms_) w = std::max(w, monomial_weight(m));
  return w;
}

bool WPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int w = monomial_weight(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return monomial_weight(t.first) == w; });
}

void WPoly::add_term(WMonomial m, const Rational& c) {
  if (c == 0) return;
  std::sort(m.begin(), m.end());
  m.erase(std::remove(m.begin(), m.end(), 0), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

WPoly& WPoly::operator+=(const WPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

WPoly& WPoly::operator-=(const WPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

WPoly& WPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

WPoly operator*(const WPoly& a, const WPoly& b) {
  WPoly r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      WMonomial m;
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      r.add_term(std::move(m), ca * cb);
    }
  return r;
}

std::string to_string(const WPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += "W" + std::to_string(m[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
  }
  return out;
}

W1Poly operator*(const W1Poly& a, const W1Poly& b) {
  W1Poly r;
  for (const auto& [ea, ca] : a.coeffs)
    for (const auto& [eb, cb] : b.coeffs) {
      Rational& slot = r.coeffs[ea + eb];
      slot += ca * cb;
      if (slot == 0) r.coeffs.erase(ea + eb);
    }
  return r;
}

std::string to_string(const W1Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    const std::string mono = e == 0 ? "" : (e == 1 ? "W1" : "W1^" + std::to_string(e));
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
  }
  return out;
}

WPoly g_gen(int m, int n, int max_index) {
  if (m < 0 || n < 0) throw std::out_of_range("g_gen needs non-negative indices");
  return WPoly::generator(m + n, max_index) - WPoly::generator(m, max_index) * WPoly::generator(n, max_index);
}

HPoly w_element(const MonoidElement& z, int n) {
  if (n < 0) throw std::out_of_range("negative W index");
  return HPoly(sine_chain(z, 2, static_cast<std::size_t>(n)), factorial(static_cast<unsigned>(2 * n + 1)));
}

HPoly eval_w(const WPoly& p, const MonoidElement& z) {
  std::map<int, HPoly> generators;
  auto gen = [&](int n) -> const HPoly& {
    auto it = generators.find(n);
    if (it == generators.end()) it = generators.emplace(n, w_element(z, n)).first;
    return it->second;
  };
  // Monomials share prefixes in sorted order; cache partial products keyed by prefix.
  std::map<WMonomial, HPoly> prefix_products;
  prefix_products.emplace(WMonomial{}, HPoly(1));
  auto product = [&](const WMonomial& m) -> HPoly {
    WMonomial prefix;
    HPoly acc(1);
    for (int idx : m) {
      prefix.push_back(idx);
      auto it = prefix_products.find(prefix);
      if (it == prefix_products.end()) it = prefix_products.emplace(prefix, harmonic(acc, gen(idx))).first;
      acc = it->second;
    }
    return acc;
  };
  HPoly r;
  for (const auto& [m, c] : p.terms()) r += c * product(m);
  return r;
}

W1Poly reduce_ap(const WPoly& p) {
  W1Poly r;
  for (const auto& [m, c] : p.terms()) {
    const int e = std::accumulate(m.begin(), m.end(), 0);
    Rational& slot = r.coeffs[e];
    slot += c;
    if (slot == 0) r.coeffs.erase(e);
  }
  return r;
}

namespace {

// W-form coefficient of S_z at x^d: W_{(d-1)/2}/d! for odd d.
WPoly sine_coeff(int d, int max_index) {
  if (d < 0 || d % 2 == 0) return WPoly();
  return (1 / factorial(static_cast<unsigned>(d))) * WPoly::generator((d - 1) / 2, max_index);
}

// W-form coefficient of C_z at x^d: W_{d/2}/d! for even d.
WPoly cosine_coeff(int d, int max_index) {
  if (d < 0 || d % 2 != 0) return WPoly();
  return (1 / factorial(static_cast<unsigned>(d))) * WPoly::generator(d / 2, max_index);
}

}  // namespace

WPoly addition_defect_coeff(int i, int j, int max_index) {
  if (i < 0 || j < 0) throw std::out_of_range("negative degree");
  const int d = i + j;
  WPoly shifted = binomial(static_cast<unsigned>(d), static_cast<unsigned>(i)) * sine_coeff(d, max_index);
  return shifted - sine_coeff(i, max_index) * cosine_coeff(j, max_index) -
         cosine_coeff(i, max_index) * sine_coeff(j, max_index);
}

WPoly pythagoras_coeff(int N, int max_index) {
  if (N < 0) throw std::out_of_range("negative degree");
  const WPoly w1 = WPoly::generator(1, max_index);
  WPoly r;
  for (int i = 0; i <= N; ++i) {
    const Rational denom = factorial(static_cast<unsigned>(2 * i)) * factorial(static_cast<unsigned>(2 * N - 2 * i));
    r += (1 / denom) * (WPoly::generator(i, max_index) * WPoly::generator(N - i, max_index));
  }
  for (int i = 0; i < N; ++i) {
    const Rational denom =
        factorial(static_cast<unsigned>(2 * i + 1)) * factorial(static_cast<unsigned>(2 * N - 2 * i - 1));
    r -= (1 / denom) * (w1 * WPoly::generator(i, max_index) * WPoly::generator(N - i - 1, max_index));
  }
  return r;
}

WPoly pythagoras_coeff_at_degree(int degree, int max_index) {
  if (degree < 0 || degree % 2 != 0) return WPoly();
  return pythagoras_coeff(degree / 2, max_index);
}

AdditionWitness ap_witness_addition(int i, int j, int max_index) {
  if (i < 0 || j < 0) throw std::out_of_range("negative degree");
  if ((i + j) % 2 == 0)
    throw NoWitness("no generator behind x^" + std::to_string(i) + " y^" + std::to_string(j) +
                    ": even total degree");
  AdditionWitness w;
  w.scalar = 1 / (factorial(static_cast<unsigned>(i)) * factorial(static_cast<unsigned>(j)));
  if (i % 2 == 1) {
    w.m = (i - 1) / 2;
    w.n = j / 2;
  } else {
    w.m = i / 2;
    w.n = (j - 1) / 2;
  }
  if (addition_defect_coeff(i, j, max_index) != w.scalar * g_gen(w.m, w.n, max_index))
    throw std::logic_error("addition defect coefficient is not the expected multiple of g");
  return w;
}

Report verify_addition(int max_degree, int max_index) {
  Report report;
  report.theorem = "addition";
  for (int d = 0; d <= max_degree; ++d)
    for (int i = 0; i <= d; ++i) {
      const WPoly c = addition_defect_coeff(i, d - i, max_index);
      const W1Poly reduced = reduce_ap(c);
      CheckItem item;
      item.id = "defect[x^" + std::to_string(i) + " y^" + std::to_string(d - i) + "]";
      item.passed = reduced.is_zero();
      item.lhs = to_string(c);
      item.rhs = to_string(reduced);
      report.items.push_back(std::move(item));
    }
  for (int m = 0; 2 * m + 1 <= max_degree; ++m)
    for (int n = 0; 2 * (m + n) + 1 <= max_degree; ++n) {
      CheckItem item;
      item.id = "generator[g_" + std::to_string(m) + "," + std::to_string(n) + "]";
      const WPoly g = g_gen(m, n, max_index);
      const AdditionWitness odd = ap_witness_addition(2 * m + 1, 2 * n, max_index);
      const AdditionWitness even = ap_witness_addition(2 * m, 2 * n + 1, max_index);
      const Rational odd_scalar = 1 / (factorial(2 * m + 1) * factorial(2 * n));
      const Rational even_scalar = 1 / (factorial(2 * m) * factorial(2 * n + 1));
      const bool odd_ok = odd.m == m && odd.n == n && odd.scalar == odd_scalar &&
                          (1 / odd.scalar) * addition_defect_coeff(2 * m + 1, 2 * n, max_index) == g;
      const bool even_ok = even.m == m && even.n == n && even.scalar == even_scalar &&
                           (1 / even.scalar) * addition_defect_coeff(2 * m, 2 * n + 1, max_index) == g;
      item.passed = odd_ok && even_ok;
      item.lhs = to_string(g);
      item.detail = "scalars " + to_string(odd.scalar) + ", " + to_string(even.scalar);
      report.items.push_back(std::move(item));
    }
  return report;
}

Report verify_pythagoras(int max_N, int max_index) {
  Report report;
  report.theorem = "pythagoras";
  for (int N = 0; N <= max_N; ++N) {
    const WPoly c = pythagoras_coeff(N, max_index);
    const W1Poly reduced = reduce_ap(c);
    W1Poly expected;
    if (N == 0) expected.coeffs[0] = 1;
    CheckItem item;
    item.id = "P[x^" + std::to_string(2 * N) + "]";
    item.passed = reduced == expected;
    item.lhs = to_string(c);
    item.rhs = to_string(reduced);
    report.items.push_back(std::move(item));
  }
  return report;
}

Series2 addition_defect_series(const MonoidElement& z, int order) {
  const Series1 s = sine(z, order);
  const Series1 c = cosine(z, order);
  return shift_sum(s) - mul_harmonic(embed_x(s), embed_y(c)) - mul_harmonic(embed_x(c), embed_y(s));
}

Series1 pythagoras_series(const MonoidElement& z, int order) {
  const Series1 s = sine(z, order);
  const Series1 c = cosine(z, order);
  const Series1 w1 = Series1::constant(w_element(z, 1), order);
  return mul_harmonic(c, c) - mul_harmonic(w1, mul_harmonic(s, s));
}

Report verify_addition_bridge(const MonoidElement& z, int max_degree, int max_index) {
  Report report;
  report.theorem = "addition-bridge";
  const Series2 direct = addition_defect_series(z, max_degree);
  for (int d = 0; d <= max_degree; ++d)
    for (int i = 0; i <= d; ++i) {
      const HPoly via_w = eval_w(addition_defect_coeff(i, d - i, max_index), z);
      CheckItem item;
      item.id = "A[x^" + std::to_string(i) + " y^" + std::to_string(d - i) + "]";
      item.passed = via_w == direct.at(i, d - i);
      if (!item.passed) {
        item.lhs = to_string(via_w);
        item.rhs = to_string(direct.at(i, d - i));
      }
      report.items.push_back(std::move(item));
    }
  return report;
}

Report verify_pythagoras_bridge(const MonoidElement& z, int max_N, int max_index) {
  Report report;
  report.theorem = "pythagoras-bridge";
  const Series1 direct = pythagoras_series(z, 2 * max_N);
  for (int d = 0; d <= 2 * max_N; ++d) {
    const HPoly via_w = eval_w(pythagoras_coeff_at_degree(d, max_index), z);
    CheckItem item;
    item.id = "P[x^" + std::to_string(d) + "]";
    item.passed = via_w == direct[d];
    if (!item.passed) {
      item.lhs = to_string(via_w);
      item.rhs = to_string(direct[d]);
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace hsw

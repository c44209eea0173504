#include "hsw/mzveval.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>

#include "hsw/quadrature.hpp"
#include "hsw/rational.hpp"
#include "hsw/reg.hpp"

namespace hsw {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

long double inv_pow(std::size_t n, int k) {
  const long double x = 1.0L / static_cast<long double>(n);
  long double p = x;
  for (int i = 1; i < k; ++i) p *= x;
  return p;
}

// Upper bound on sum_{m <= x} m^-k as a function of L = ln x.
long double partial_sum_bound(int k, long double log_x) {
  return k == 1 ? 1.0L + log_x : static_cast<long double>(riemann_zeta(k));
}

// Bound on sum_{n > N} F(ln n) n^-k with F nondecreasing, over dyadic blocks
// (N 2^b, N 2^{b+1}] using sum_{block} n^-k <= integral of x^-k over the block.
template <class F>
long double dyadic_tail_bound(std::size_t cutoff, int k, F f) {
  const long double log_n = std::log(static_cast<long double>(cutoff));
  const long double ln2 = std::numbers::ln2_v<long double>;
  const long double shrink = (1.0L - std::pow(2.0L, 1.0L - k)) / (k - 1);
  long double total = 0.0L;
  for (int b = 0; b < 4000; ++b) {
    const long double left = log_n + b * ln2;
    const long double term = f(left + ln2) * std::exp((1.0L - k) * left) * shrink;
    total += term;
    if (b > 8 && term <= total * 1e-30L) break;
  }
  return total;
}

}  // namespace

bool MzvIndex::admissible() const {
  for (int k : ks)
    if (k < 1) return false;
  return ks.empty() || ks.back() >= 2;
}

MzvIndex word_to_mzv(const Word& w) {
  for (const auto& l : w)
    if (!l.is_zero() && !l.is_unit())
      throw UnsupportedWord("word " + to_string(w) + " uses letters other than 0 and 1");
  if (classify(w) != WordClass::InH0) throw UnsupportedWord("word " + to_string(w) + " is not in H^0");
  MzvIndex idx;
  for (const auto& l : w) {
    if (l.is_unit())
      idx.ks.push_back(1);
    else
      ++idx.ks.back();
  }
  idx.sign = idx.ks.size() % 2 == 0 ? 1 : -1;
  return idx;
}

double riemann_zeta(int k) {
  if (k < 2) throw std::domain_error("riemann_zeta needs k >= 2");
  constexpr int kHead = 10;
  constexpr int kTerms = 10;
  // Bernoulli numbers B_0..B_{2 kTerms}
  std::vector<Rational> bern(2 * kTerms + 1);
  bern[0] = 1;
  for (unsigned m = 1; m < bern.size(); ++m) {
    Rational s = 0;
    for (unsigned j = 0; j < m; ++j) s += binomial(m + 1, j) * bern[j];
    bern[m] = -s / Rational(static_cast<long>(m + 1));
  }
  long double sum = 0.0L;
  for (int n = kHead - 1; n >= 1; --n) sum += inv_pow(static_cast<std::size_t>(n), k);
  const long double n = kHead;
  sum += std::pow(n, 1.0L - k) / (k - 1) + std::pow(n, -static_cast<long double>(k)) / 2;
  long double rising = k;  // k (k+1) ... (k+2j-2)
  for (int j = 1; j <= kTerms; ++j) {
    if (j > 1) rising *= static_cast<long double>(k + 2 * j - 3) * (k + 2 * j - 2);
    const long double coeff = to_double(bern[2 * j] / factorial(2 * j));
    sum += coeff * rising * std::pow(n, static_cast<long double>(-k - 2 * j + 1));
  }
  return static_cast<double>(sum);
}

Estimate zeta(const std::vector<int>& ks, std::size_t cutoff, bool em_correct) {
  if (!MzvIndex{ks, 1}.admissible()) throw std::domain_error("inadmissible multiple zeta index");
  if (cutoff == 0) throw std::invalid_argument("zeta cutoff must be positive");
  const std::size_t r = ks.size();
  if (r == 0) return {1.0, 0.0};

  // level[n] = sum over 0 < n_1 < ... < n_j <= n, built one depth at a time in place
  std::vector<long double> level(cutoff + 1, 1.0L);
  long double outer_weight = 1.0L;
  for (std::size_t j = 0; j < r; ++j) {
    if (j + 1 == r) outer_weight = level[cutoff];
    long double carry = level[0];
    level[0] = 0.0L;
    for (std::size_t n = 1; n <= cutoff; ++n) {
      const long double old = level[n];
      level[n] = level[n - 1] + carry * inv_pow(n, ks[j]);
      carry = old;
    }
  }
  long double value = level[cutoff];

  const int k = ks.back();
  const long double nn = static_cast<long double>(cutoff);
  const long double log_n = std::log(nn);
  auto inner_bound = [&](std::size_t depth, long double log_x) {
    long double b = 1.0L;
    for (std::size_t i = 0; i < depth; ++i) b *= partial_sum_bound(ks[i], log_x);
    return b;
  };

  long double bound = 0.0L;
  if (em_correct) {
    value += outer_weight * (std::pow(nn, 1.0L - k) / (k - 1) - std::pow(nn, -static_cast<long double>(k)) / 2 +
                             k * std::pow(nn, -1.0L - k) / 12);
    bound += 2.0L * outer_weight * k * (k + 1.0L) * (k + 2.0L) * std::pow(nn, -3.0L - k) / 720;
    if (r >= 2) {
      // growth of the outer weight past the cutoff
      const int kp = ks[r - 2];
      bound += dyadic_tail_bound(cutoff, k, [&](long double log_x) {
        const long double step = kp == 1 ? log_x - log_n : std::pow(nn, 1.0L - kp) / (kp - 1);
        return inner_bound(r - 2, log_x) * step;
      });
    }
  } else {
    bound += dyadic_tail_bound(cutoff, k, [&](long double log_x) { return inner_bound(r - 1, log_x); });
  }
  bound += (static_cast<long double>(r) * nn + 16.0L) * LDBL_EPSILON * value;
  bound += DBL_EPSILON * value;
  return {static_cast<double>(value), static_cast<double>(bound)};
}

Estimate zeta(const MzvIndex& idx, std::size_t cutoff, bool em_correct) {
  return static_cast<double>(idx.sign) * zeta(idx.ks, cutoff, em_correct);
}

namespace {

constexpr int kGaussPoints = 12;
constexpr int kGradedLevels = 60;
constexpr int kMaxSplits = 256;

const quad::GaussRule& gauss_rule() {
  static const quad::GaussRule rule = quad::gauss_legendre(kGaussPoints);
  return rule;
}

double nested_integral(const std::vector<double>& letters, int splits) {
  const auto& rule = gauss_rule();
  const auto panels = quad::graded_panels(kGradedLevels, splits);
  const Eigen::VectorXd t = quad::mesh_nodes(rule, panels);
  Eigen::VectorXd f = Eigen::VectorXd::Ones(t.size());
  for (std::size_t i = letters.size(); i-- > 0;) {
    const Eigen::VectorXd g = (f.array() / (t.array() - letters[i])).matrix();
    auto cum = quad::integrate_from_top(rule, panels, g);
    if (i == 0) return cum.at_bottom;
    f = std::move(cum.at_nodes);
  }
  return 1.0;
}

}  // namespace

Estimate iterint_num(const Word& w, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  if (w.empty()) return {1.0, 0.0};
  if (w.weight() > kMaxQuadratureWeight)
    throw UnsupportedWord("quadrature supports weight <= 4, got " + to_string(w));
  if (classify(w) != WordClass::InH0) throw UnsupportedWord("word " + to_string(w) + " is not in H^0");

  std::vector<double> letters;
  for (const auto& l : w) {
    if (l.is_unit()) throw UnsupportedWord("quadrature cannot integrate through the pole of e[1] in " + to_string(w));
    if (l.is_zero())
      letters.push_back(0.0);
    else if (l.instance() == MonoidInstance::Rational)
      letters.push_back(to_double(l.value()));
    else
      throw UnsupportedWord("quadrature needs real rational letters, got " + to_string(w));
  }

  // contribution of [0, 2^-levels], bounded through |F_i| <= product of single-letter integrals
  const double delta = std::ldexp(1.0, -kGradedLevels);
  const double log_span = -std::log(delta) + static_cast<double>(letters.size());
  double truncation = delta / std::abs(letters[0] - (letters[0] > 0 ? 1.0 : 0.0));
  for (std::size_t i = 1; i < letters.size(); ++i) {
    const double z = letters[i];
    truncation *= z == 0.0 ? log_span : std::max(1.0, 1.0 / std::abs(z - (z > 0 ? 1.0 : 0.0)));
  }

  double previous = nested_integral(letters, 1);
  for (int splits = 2; splits <= kMaxSplits; splits *= 2) {
    const double current = nested_integral(letters, splits);
    const double change = std::abs(current - previous);
    if (change <= tol) {
      const double rounding = 64.0 * DBL_EPSILON * static_cast<double>(letters.size()) * (1.0 + std::abs(current));
      return {current, change + truncation + rounding};
    }
    previous = current;
  }
  throw ConvergenceError("quadrature did not reach tolerance " + fmt(tol) + " for " + to_string(w));
}

struct NumericEvaluator::Cache {
  std::mutex mutex;
  std::map<Word, Estimate> values;
};

NumericEvaluator::NumericEvaluator(EvaluatorOptions options)
    : options_(options), cache_(std::make_shared<Cache>()) {}

Estimate NumericEvaluator::operator()(const Word& w) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->values.find(w); it != cache_->values.end()) return it->second;
  }
  bool binary = true;
  for (const auto& l : w) binary = binary && (l.is_zero() || l.is_unit());
  const Estimate e = binary ? zeta(word_to_mzv(w), options_.mzv_cutoff, options_.em_correct)
                            : iterint_num(w, options_.quad_tolerance);
  std::lock_guard lock(cache_->mutex);
  cache_->values.emplace(w, e);
  return e;
}

H0Evaluator NumericEvaluator::as_function() const {
  return [self = *this](const Word& w) { return self(w); };
}

std::size_t NumericEvaluator::cache_size() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->values.size();
}

Report check_assumptions(int n_max, int k_max, double tol, const NumericEvaluator& evaluator) {
  Report report{"assumptions", {}};
  const auto eval = evaluator.as_function();
  const Word e1 = Word::letter(MonoidElement::unit());

  for (int n = 0; n <= n_max; ++n) {
    Word w;
    for (int i = 0; i < n; ++i) w += s_word(MonoidElement::unit(), 2);
    const Estimate z = z_num(HPoly(w), eval);
    const double expected =
        (n % 2 == 0 ? 1.0 : -1.0) * std::pow(std::numbers::pi, 2 * n) / to_double(factorial(2 * n + 1));
    const double diff = std::abs(z.value - expected);
    report.items.push_back({"i.n=" + std::to_string(n), diff < tol, fmt(z.value), fmt(expected),
                            "residual " + fmt(diff) + ", bound " + fmt(z.error_bound)});
  }

  const Estimate z11 = z_num(HPoly(e1), eval);
  report.items.push_back({"ii", z11.value == 0.0 && z11.error_bound == 0.0, fmt(z11.value), "0",
                          "regularized constant term of s[1,1]"});

  for (int k = 2; k <= k_max; ++k) {
    const Estimate z = z_num(HPoly(s_word(MonoidElement::unit(), static_cast<unsigned>(k))), eval);
    const double expected = -riemann_zeta(k);
    const double diff = std::abs(z.value - expected);
    report.items.push_back({"iii.k=" + std::to_string(k), diff < tol, fmt(z.value), fmt(expected),
                            "residual " + fmt(diff) + ", bound " + fmt(z.error_bound)});
  }
  return report;
}

}  // namespace hsw

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance 3 7        run the listed criteria
//
// Exit status is 0 when every selected criterion passes within its time limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hsw/mzveval.hpp"
#include "hsw/reg.hpp"
#include "hsw/relations.hpp"
#include "hsw/trig.hpp"
#include "hsw/verify.hpp"
#include "hsw/wcalc.hpp"

using namespace hsw;

namespace {

constexpr double kPi = std::numbers::pi;

const MonoidElement kZero = MonoidElement::zero();
const MonoidElement kOne = MonoidElement::unit();
const MonoidElement kZ = MonoidElement::cyclic(1);
const MonoidElement kZ2 = MonoidElement::cyclic(2);

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> notes;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

void absorb(Outcome& o, const Report& r) {
  if (r.passed()) return;
  o.passed = false;
  const auto f = *r.first_failure();
  o.notes.push_back(r.theorem + " " + f.id + ": " + f.lhs + " vs " + f.rhs + " " + f.detail);
}

std::size_t item_count(const std::vector<Report>& rs) {
  std::size_t n = 0;
  for (const auto& r : rs) n += r.items.size();
  return n;
}

// Closed-form single zeta values.
double zeta_closed_form(int k) {
  switch (k) {
    case 2: return kPi * kPi / 6;
    case 3: return 1.2020569031595942853997;
    case 4: return std::pow(kPi, 4) / 90;
    case 5: return 1.0369277551433699263314;
    case 6: return std::pow(kPi, 6) / 945;
    default: throw std::out_of_range("no closed form stored");
  }
}

RandomPolyGen make_gen(std::vector<MonoidElement> alphabet, std::size_t max_weight, std::size_t max_terms,
                       std::uint64_t seed) {
  RandomPolyOptions opts;
  opts.alphabet = std::move(alphabet);
  opts.max_weight = max_weight;
  opts.max_terms = max_terms;
  return RandomPolyGen(opts, seed);
}

Outcome algebra_laws() {
  Outcome o;
  int pairs = 0;
  int triples = 0;
  std::uint64_t seed = 2024;
  for (const auto& alphabet : {std::vector{kZero, kOne}, std::vector{kZero, kOne, kZ, kZ2}}) {
    // pairs: each polynomial of weight <= 6
    auto gen = make_gen(alphabet, 6, 3, seed++);
    for (int i = 0; i < 100; ++i, ++pairs) {
      const HPoly p = gen.poly();
      const HPoly q = gen.poly();
      const HPoly pq = harmonic(p, q);
      if (pq != harmonic(q, p)) {
        o.passed = false;
        o.notes.push_back("commutativity fails for " + to_string(p) + " , " + to_string(q));
      }
      if (harmonic(HPoly(1), p) != p || harmonic(p, HPoly(1)) != p) {
        o.passed = false;
        o.notes.push_back("unit law fails for " + to_string(p));
      }
      for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms())
          for (const auto& [w, c] : harmonic(u, v).terms())
            if (w.weight() != u.weight() + v.weight()) {
              o.passed = false;
              o.notes.push_back("weight not additive in " + to_string(u) + " * " + to_string(v));
            }
    }
    // triples: total weight <= 6
    auto tgen = make_gen(alphabet, 2, 3, seed++);
    for (int i = 0; i < 100; ++i, ++triples) {
      const HPoly p = tgen.poly();
      const HPoly q = tgen.poly();
      const HPoly r = tgen.poly();
      if (harmonic(harmonic(p, q), r) != harmonic(p, harmonic(q, r))) {
        o.passed = false;
        o.notes.push_back("associativity fails for " + to_string(p) + " , " + to_string(q) + " , " + to_string(r));
      }
    }
  }
  o.detail = std::to_string(pairs) + " pairs, " + std::to_string(triples) + " triples over {0,1} and {0,1,z,z^2}";
  return o;
}

Outcome coincidence() {
  Outcome o;
  std::vector<Report> rs;
  for (int k = 1; k <= 3; ++k) rs.push_back(verify_coincidence(kZ, k, 5, 12));
  for (const auto& r : rs) absorb(o, r);
  o.detail = "k = 1, 2, 3 at order 12, coefficient identity for n <= 5, " + std::to_string(item_count(rs)) + " checks";
  return o;
}

Outcome addition_formula() {
  Outcome o;
  const Report r = verify_addition(9);
  absorb(o, r);
  o.detail = "defects with i + j <= 9 and generators with m + n <= 4, " + std::to_string(r.items.size()) + " checks";
  return o;
}

Outcome pythagoras() {
  Outcome o;
  const std::vector<Report> rs{verify_pythagoras(5), verify_pythagoras_bridge(kZ, 5)};
  for (const auto& r : rs) absorb(o, r);
  o.detail = "N <= 5 in the quotient plus direct series comparison, " + std::to_string(item_count(rs)) + " checks";
  return o;
}

Outcome regularization() {
  Outcome o;
  const std::vector<Report> rs{verify_regularization(50, 5, 71, {kZero, kOne}),
                               verify_regularization(50, 5, 72, {kZero, kOne, kZ})};
  for (const auto& r : rs) absorb(o, r);
  o.detail = "100 random inputs of weight <= 5, " + std::to_string(item_count(rs)) + " checks";
  return o;
}

Outcome assumption_numerics() {
  Outcome o;
  const NumericEvaluator ev;
  const auto eval = ev.as_function();
  std::ostringstream detail;
  std::ostringstream corrected;
  bool corrected_ok = true;
  for (int n = 0; n <= 3; ++n) {
    const Estimate z = z_num(w_element(kOne, n), eval);
    const double target = std::pow(kPi, 2 * n);
    const double diff = std::abs(z.value - target);
    const bool ok = diff < 1e-8;
    o.passed = o.passed && ok;
    detail << "|Z(w_" << n << ") - pi^" << 2 * n << "| = " << sci(diff) << (ok ? "" : " (fail)") << "; ";
    const double signed_diff = std::abs(z.value - (n % 2 ? -target : target));
    corrected_ok = corrected_ok && signed_diff < 1e-8;
    corrected << "n=" << n << ": Z(w_" << n << ") = " << z.value << ", |Z - (-1)^n pi^" << 2 * n
              << "| = " << sci(signed_diff) << "; ";
  }
  for (int k = 2; k <= 6; ++k) {
    const Estimate z = z_num(HPoly(s_word(kOne, static_cast<std::size_t>(k))), eval);
    const double diff = std::abs(z.value + zeta_closed_form(k));
    const bool ok = diff < 1e-9;
    o.passed = o.passed && ok;
    detail << "|Z(s_1," << k << ") + zeta(" << k << ")| = " << sci(diff) << (ok ? "" : " (fail)") << "; ";
  }
  const Estimate z11 = z_num(HPoly(s_word(kOne, 1)), eval);
  const bool exact_zero = z11.value == 0.0 && z11.error_bound == 0.0;
  o.passed = o.passed && exact_zero;
  detail << "Z(s_1,1) = " << z11.value << (exact_zero ? " exactly" : " (fail)");
  o.detail = detail.str();
  o.notes.push_back("with the sign (-1)^n, " + std::string(corrected_ok ? "all within 1e-8" : "some outside 1e-8") +
                    ": " + corrected.str());
  return o;
}

Outcome classical_recovery() {
  Outcome o;
  const NumericEvaluator ev;
  const auto eval = ev.as_function();
  double sine_err = 0;
  const Series1 s = sine(kOne, 9);
  for (int n = 0; n <= 4; ++n) {
    const double expected = (n % 2 ? -1.0 : 1.0) * std::pow(kPi, 2 * n) / to_double(factorial(2 * n + 1));
    sine_err = std::max(sine_err, std::abs(z_num(s[2 * n + 1], eval).value - expected));
  }

  double addition_res = 0;
  const Series2 a = addition_defect_series(kOne, 9);
  for (int i = 0; i <= 9; ++i)
    for (int j = 0; i + j <= 9; ++j) addition_res = std::max(addition_res, std::abs(z_num(a.at(i, j), eval).value));

  double pyth_res = 0;
  const Series1 p = pythagoras_series(kOne, 8);
  for (int d = 0; d <= 8; ++d)
    pyth_res = std::max(pyth_res, std::abs(z_num(p[d], eval).value - (d == 0 ? 1.0 : 0.0)));

  double relation_res = 0;
  double named_res = 1.0;
  for (int w = 4; w <= 8; w += 2)
    for (const auto& r : mzv_relations(w, ev)) {
      relation_res = std::max(relation_res, r.residual);
      if (to_string(r) == "4*z(2,2) - 3*z(4) = 0") named_res = r.residual;
    }

  o.passed = sine_err < 1e-8 && addition_res < 1e-8 && pyth_res < 1e-8 && relation_res < 1e-8 && named_res < 1e-9;
  o.detail = "sine coefficients " + sci(sine_err) + ", addition " + sci(addition_res) + ", Pythagoras " +
             sci(pyth_res) + ", relations " + sci(relation_res) + ", 4z(2,2) - 3z(4) " + sci(named_res);
  return o;
}

Outcome general_letters() {
  Outcome o;
  const std::vector<MonoidElement> heads{MonoidElement::rational(2), MonoidElement::rational(3),
                                         MonoidElement::rational(Rational(5, 2))};
  std::vector<Word> words;
  for (const auto& a : heads) {
    words.push_back(Word{a});
    for (const auto& b : heads) words.push_back(Word{a, b});
    words.push_back(Word{a, kZero});
  }
  const NumericEvaluator ev;
  const auto eval = ev.as_function();
  double worst = 0;
  int pairs = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j, ++pairs) {
      const double lhs = ev(words[i]).value * ev(words[j]).value;
      const double rhs = z_num(harmonic(HPoly(words[i]), HPoly(words[j])), eval).value;
      const double diff = std::abs(lhs - rhs);
      if (diff > worst) worst = diff;
      if (!(diff < 1e-5)) {
        o.passed = false;
        o.notes.push_back(to_string(words[i]) + " * " + to_string(words[j]) + ": residual " + sci(diff));
      }
    }
  o.detail = std::to_string(pairs) + " pairs over {2, 3, 5/2}, worst residual " + sci(worst);
  return o;
}

Outcome reflection_product() {
  Outcome o;
  const Report r = verify_reflection_product(kZ, 8);
  absorb(o, r);
  o.detail = "order 8, " + std::to_string(r.items.size()) + " coefficients";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "harmonic product laws", 30, algebra_laws},
      {2, "Taylor and reflection sine coincide", 60, coincidence},
      {3, "addition formula in the quotient", 30, addition_formula},
      {4, "Pythagorean identity in the quotient", 60, pythagoras},
      {5, "regularization round trip and homomorphism", 60, regularization},
      {6, "numeric assumptions on Z", 10, assumption_numerics},
      {7, "classical sine, addition and Pythagoras recovered numerically", 60, classical_recovery},
      {8, "numeric homomorphism for real letters", 120, general_letters},
      {9, "reflection product", 30, reflection_product},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    try {
      const int id = std::stoi(argv[i]);
      if (id < 1 || id > static_cast<int>(all.size())) throw std::out_of_range("criterion");
      selected.push_back(id);
    } catch (const std::exception&) {
      std::cerr << "usage: acceptance [criterion 1-" << all.size() << "]...\n";
      return 2;
    }
  }
  if (selected.empty())
    for (const auto& c : all) selected.push_back(c.id);

  bool all_passed = true;
  for (int id : selected) {
    const Criterion& c = all[static_cast<std::size_t>(id - 1)];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.time_limit_s;
    const bool passed = o.passed && in_time;
    all_passed = all_passed && passed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", seconds, c.time_limit_s);
    std::cout << (passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << o.detail << ") ["
              << timing << (in_time ? "" : ", over time") << "]\n";
    for (const auto& note : o.notes) std::cout << "    note: " << note << '\n';
  }
  return all_passed ? 0 : 1;
}

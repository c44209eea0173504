// hsw: command-line front end for the harmonic algebra engine.
//
//   hsw verify {coincidence|reflection|addition|pythagoras|regularization|harmonic-hom} [flags]
//   hsw relations --weight W
//   hsw eval EXPR --mode {symbolic|zst|znum}
//
// Every verb accepts --format {text|json}; json output is one record per line.
// Exit status: 0 success, 1 failed check or numeric failure, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hsw/expr.hpp"
#include "hsw/mzveval.hpp"
#include "hsw/reg.hpp"
#include "hsw/relations.hpp"
#include "hsw/trig.hpp"
#include "hsw/verify.hpp"
#include "hsw/wcalc.hpp"

using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxOrder = 24;

struct Settings {
  std::string format = "text";

  std::string theorem;
  int k = 0;
  int order = hsw::kDefaultSeriesOrder;
  int max_n = 5;
  int max_degree = 9;
  int max_N = 5;
  std::string z = "z";
  int samples = 0;
  int max_weight = 0;
  std::uint64_t seed = 1;

  int weight = 0;

  std::string expr;
  std::string mode = "symbolic";

  std::size_t mzv_n = hsw::kDefaultMzvCutoff;
  double tol = hsw::kDefaultQuadTolerance;
};

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

class Printer {
 public:
  explicit Printer(bool json_mode) : json_(json_mode) {}

  void item(const std::string& theorem, const hsw::CheckItem& c) const {
    if (json_) {
      json rec{{"record", "item"}, {"theorem", theorem}, {"id", c.id}, {"status", c.passed ? "pass" : "fail"}};
      if (!c.lhs.empty()) rec["lhs"] = c.lhs;
      if (!c.rhs.empty()) rec["rhs"] = c.rhs;
      if (!c.detail.empty()) rec["detail"] = c.detail;
      std::cout << rec.dump() << '\n';
      return;
    }
    std::cout << (c.passed ? "PASS " : "FAIL ") << theorem << ' ' << c.id;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ')';
    std::cout << '\n';
    if (!c.passed) {
      if (!c.lhs.empty()) std::cout << "  lhs: " << c.lhs << '\n';
      if (!c.rhs.empty()) std::cout << "  rhs: " << c.rhs << '\n';
    }
  }

  void summary(const std::string& theorem, const json& params, std::size_t passed, std::size_t total,
               double seconds) const {
    const bool ok = passed == total;
    if (json_) {
      json rec{{"record", "summary"}, {"theorem", theorem},       {"parameters", params},
               {"status", ok ? "pass" : "fail"}, {"passed", passed}, {"total", total},
               {"wall_time_s", seconds}};
      std::cout << rec.dump() << '\n';
      return;
    }
    std::string p;
    for (const auto& [key, value] : params.items()) p += (p.empty() ? "" : " ") + key + "=" + value.dump();
    std::cout << theorem << ": " << (ok ? "PASS" : "FAIL") << ' ' << passed << '/' << total << " items (" << p
              << ") in " << fmt("%.3f", seconds) << " s\n";
  }

  void error(const std::string& message) const {
    if (json_)
      std::cout << json{{"record", "error"}, {"message", message}}.dump() << '\n';
    else
      std::cerr << "error: " << message << '\n';
  }

  bool json_mode() const { return json_; }

 private:
  bool json_;
};

hsw::EvaluatorOptions evaluator_options(const Settings& s) {
  hsw::EvaluatorOptions opts;
  opts.mzv_cutoff = s.mzv_n;
  opts.quad_tolerance = s.tol;
  return opts;
}

int run_verify(const Settings& s, const Printer& out) {
  using Clock = std::chrono::steady_clock;
  const hsw::MonoidElement z = hsw::parse_element(s.z);
  const auto start = Clock::now();
  std::vector<hsw::Report> reports;
  json params;

  if (s.theorem == "coincidence") {
    params = {{"k", s.k}, {"order", s.order}, {"max_n", s.max_n}, {"z", s.z}};
    std::vector<int> ks = s.k == 0 ? std::vector<int>{1, 2, 3} : std::vector<int>{s.k};
    for (int k : ks) reports.push_back(hsw::verify_coincidence(z, k, s.max_n, s.order));
  } else if (s.theorem == "reflection") {
    params = {{"order", s.order}, {"z", s.z}};
    reports.push_back(hsw::verify_reflection_product(z, s.order));
  } else if (s.theorem == "addition") {
    params = {{"max_degree", s.max_degree}, {"z", s.z}};
    reports.push_back(hsw::verify_addition(s.max_degree));
    reports.push_back(hsw::verify_addition_bridge(z, s.max_degree));
  } else if (s.theorem == "pythagoras") {
    params = {{"max_N", s.max_N}, {"z", s.z}};
    reports.push_back(hsw::verify_pythagoras(s.max_N));
    reports.push_back(hsw::verify_pythagoras_bridge(z, s.max_N));
  } else if (s.theorem == "regularization") {
    const int samples = s.samples > 0 ? s.samples : 100;
    const int max_weight = s.max_weight > 0 ? s.max_weight : 5;
    params = {{"samples", samples}, {"max_weight", max_weight}, {"seed", s.seed}, {"z", s.z}};
    std::vector<hsw::MonoidElement> alphabet{hsw::MonoidElement::zero(), hsw::MonoidElement::unit()};
    if (!z.is_unit() && !z.is_zero()) {
      alphabet.push_back(z);
      alphabet.push_back(hsw::mul(z, z));
    }
    reports.push_back(hsw::verify_regularization(samples, static_cast<std::size_t>(max_weight), s.seed, alphabet));
  } else {
    const int samples = s.samples > 0 ? s.samples : 20;
    const int max_weight = s.max_weight > 0 ? s.max_weight : 6;
    params = {{"samples", samples}, {"max_weight", max_weight}, {"seed", s.seed}, {"mzv_n", s.mzv_n}};
    reports.push_back(hsw::verify_harmonic_hom(samples, static_cast<std::size_t>(max_weight),
                                               hsw::NumericEvaluator(evaluator_options(s)), s.seed));
  }

  std::size_t passed = 0;
  std::size_t total = 0;
  for (const auto& r : reports)
    for (const auto& item : r.items) {
      out.item(r.theorem, item);
      passed += item.passed ? 1 : 0;
      ++total;
    }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out.summary(s.theorem, params, passed, total, seconds);
  return passed == total ? 0 : kExitFail;
}

int run_relations(const Settings& s, const Printer& out) {
  const auto relations = hsw::mzv_relations(s.weight, hsw::NumericEvaluator(evaluator_options(s)));
  bool ok = true;
  for (const auto& r : relations) {
    ok = ok && r.residual <= r.bound;
    if (out.json_mode()) {
      json terms = json::array();
      for (const auto& t : r.terms) terms.push_back({{"coefficient", hsw::to_string(t.coefficient)}, {"index", t.index}});
      std::cout << json{{"weight", r.weight},       {"relation", hsw::to_string(r)}, {"terms", terms},
                        {"residual", r.residual}, {"bound", r.bound},              {"sources", r.sources}}
                       .dump()
                << '\n';
    } else {
      std::string sources;
      for (const auto& src : r.sources) sources += (sources.empty() ? "" : ", ") + src;
      std::cout << hsw::to_string(r) << "  residual " << fmt("%.3e", r.residual) << "  bound "
                << fmt("%.3e", r.bound) << "  from " << sources << '\n';
    }
  }
  return ok ? 0 : kExitFail;
}

int run_eval(const Settings& s, const Printer& out) {
  const hsw::HPoly p = hsw::parse_poly(s.expr);
  if (s.mode == "znum") {
    const hsw::NumericEvaluator evaluator(evaluator_options(s));
    const hsw::Estimate e = hsw::z_num(p, evaluator.as_function());
    if (out.json_mode())
      std::cout << json{{"expr", s.expr}, {"mode", s.mode}, {"value", e.value}, {"bound", e.error_bound}}.dump()
                << '\n';
    else
      std::cout << fmt("%.15g", e.value) << " ± " << fmt("%.3g", e.error_bound) << '\n';
    return 0;
  }
  const std::string result = s.mode == "zst" ? hsw::to_string(hsw::z_st(p)) : hsw::to_string(p);
  if (out.json_mode())
    std::cout << json{{"expr", s.expr}, {"mode", s.mode}, {"result", result}}.dump() << '\n';
  else
    std::cout << result << '\n';
  return 0;
}

// Environment defaults that fail validation are otherwise skipped silently.
bool check_environment() {
  const std::vector<std::pair<const char*, CLI::Validator>> vars = {
      {"HSW_ORDER", CLI::Range(1, kMaxOrder)},
      {"HSW_MZV_N", CLI::Range(std::size_t{1}, std::size_t{100'000'000})},
      {"HSW_TOL", CLI::PositiveNumber},
  };
  for (const auto& [name, validator] : vars) {
    const char* raw = std::getenv(name);
    if (raw == nullptr) continue;
    std::string value = raw;
    const std::string err = validator(value);
    if (!err.empty()) {
      std::cerr << name << "=" << raw << ": " << err << "\n";
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  CLI::App app{"Exact harmonic algebra: formal trigonometry, regularization and multiple zeta values"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto add_numeric = [&](CLI::App* cmd) {
    cmd->add_option("--mzv-n", s.mzv_n, "Truncation point of multiple zeta sums")
        ->envname("HSW_MZV_N")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100'000'000}));
    cmd->add_option("--tol", s.tol, "Quadrature tolerance")->envname("HSW_TOL")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "Check a theorem exactly or numerically");
  verify->add_option("theorem", s.theorem, "Theorem to check")
      ->required()
      ->check(CLI::IsMember(
          {"coincidence", "reflection", "addition", "pythagoras", "regularization", "harmonic-hom"}));
  verify->add_option("--k", s.k, "Sine index k (0 checks 1, 2 and 3)")->check(CLI::Range(0, 8));
  verify->add_option("--order", s.order, "Series truncation order")
      ->envname("HSW_ORDER")
      ->check(CLI::Range(1, kMaxOrder));
  verify->add_option("--max-n", s.max_n, "Largest n of the per-coefficient identity")->check(CLI::Range(0, 12));
  verify->add_option("--max-degree", s.max_degree, "Largest total degree for the addition formula")
      ->check(CLI::Range(0, 15));
  verify->add_option("--max-N", s.max_N, "Largest N for the Pythagorean identity")->check(CLI::Range(0, 7));
  verify->add_option("--z", s.z, "Monoid element, e.g. z, z^2, 1");
  verify->add_option("--samples", s.samples, "Random samples")->check(CLI::Range(1, 100000));
  verify->add_option("--max-weight", s.max_weight, "Largest random word weight")->check(CLI::Range(1, 8));
  verify->add_option("--seed", s.seed, "Random seed");
  add_numeric(verify);

  auto* relations = app.add_subcommand("relations", "Multiple zeta relations from the addition and Pythagoras coefficients");
  relations->add_option("--weight", s.weight, "Even weight")->required();
  add_numeric(relations);

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", s.expr, "Polynomial, e.g. \"s[1,2]*s[1,2]\"")->required();
  eval->add_option("--mode", s.mode, "symbolic, zst or znum")->check(CLI::IsMember({"symbolic", "zst", "znum"}));
  add_numeric(eval);

  if (!check_environment()) return kExitUsage;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const Printer out(s.format == "json");
  try {
    if (verify->parsed()) return run_verify(s, out);
    if (relations->parsed()) return run_relations(s, out);
    return run_eval(s, out);
  } catch (const hsw::ParseError& e) {
    out.error(e.what());
    return kExitUsage;
  } catch (const hsw::ConvergenceError& e) {
    out.error(e.what());
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    out.error(e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    out.error(e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    out.error(e.what());
    return kExitFail;
  }
}

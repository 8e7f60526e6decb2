#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthochart/errors.hpp"
#include "orthochart/groebner.hpp"
#include "orthochart/local_model.hpp"
#include "orthochart/poly_text.hpp"
#include "orthochart/prime_field.hpp"
#include "orthochart/report.hpp"
#include "orthochart/verifier.hpp"

using namespace orthochart;

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kTimeout = 3, kIo = 4 };

struct Config {
  int d = 0;
  int l = 0;
  std::string fiber = "arithmetic";
  std::string ideal;
  std::string input;
  std::string order = "grlex";
  std::uint32_t modulus = kDefaultModulus;
  double timeout_seconds = 600;
  std::string output = "-";
  std::string format = "text";
  std::string check = "all";
  std::string mutation;
  std::string charts = "(6,2),(5,3),(6,3),(5,2)";
  std::string cross_check;
  int full_x_max_d = 6;
  unsigned threads = 1;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::pair<int, int>> parse_chart_list(const std::string& text) {
  std::vector<int> nums;
  const std::regex number("\\d+");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it) {
    nums.push_back(std::stoi(it->str()));
  }
  const std::regex allowed("[0-9,;() \t]*");
  if (!std::regex_match(text, allowed) || nums.size() % 2 != 0) {
    throw UsageError("chart list must be pairs d,l such as '(6,2),(5,3)', got '" + text + "'");
  }
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < nums.size(); i += 2) out.emplace_back(nums[i], nums[i + 1]);
  return out;
}

// Rounded up: a zero limit would mean unlimited.
std::chrono::milliseconds time_limit(const Config& cfg) {
  return std::chrono::milliseconds(static_cast<long long>(std::ceil(cfg.timeout_seconds * 1000)));
}

VerifierOptions verifier_options(const Config& cfg) {
  VerifierOptions opt;
  opt.groebner.time_limit = time_limit(cfg);
  opt.full_x_max_d = cfg.full_x_max_d;
  opt.threads = cfg.threads;
  if (!cfg.cross_check.empty()) opt.cross_check_charts = parse_chart_list(cfg.cross_check);
  return opt;
}

template <class Fn>
auto with_field(std::uint32_t modulus, Fn&& fn) {
  if (modulus == 0) return fn(RationalField{});
  return fn(PrimeField(modulus));
}

template <class F>
nlohmann::json poly_list(const std::vector<Polynomial<F>>& ps) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

template <class F>
int run_build(const Config& cfg, const F& field) {
  const ChartPresentation chart(cfg.d, cfg.l);
  const LocalModel<F> model(chart, field);
  FiberKind kind = FiberKind::arithmetic;
  if (cfg.fiber == "special") kind = FiberKind::special;
  if (cfg.fiber == "generic") kind = FiberKind::generic;
  const auto fiber = [&](const Ideal<F>& I) { return poly_list(model.specialize_fiber(I, kind).generators()); };

  nlohmann::json ideals;
  if (model.has_full_ring()) {
    ideals["naive"] = fiber(model.naive_ideal());
    ideals["add"] = fiber(model.additional_ideal());
    ideals["full"] = fiber(model.full_ideal());
    ideals["intermediate"] = chart.same_parity() ? fiber(model.intermediate_ideal()) : nlohmann::json();
  } else {
    for (const char* k : {"naive", "add", "full", "intermediate"}) ideals[k] = nullptr;
  }
  ideals["reduced"] = fiber(model.reduced_ideal());
  for (const auto& c : model.components().components) {
    ideals["components"][c.label] = {{"generators", poly_list(c.ideal.generators())},
                                     {"regular_variable", c.regular_variable}};
  }
  nlohmann::json out = {{"d", chart.d()},
                        {"l", chart.l()},
                        {"case", to_string(chart.parity())},
                        {"Z", chart.Z()},
                        {"Zc", chart.Zc()},
                        {"fiber", cfg.fiber},
                        {"variables", chart.full_variables()},
                        {"reduced_variables", chart.reduced_variables()},
                        {"ideals", ideals}};
  if (!model.has_full_ring()) out["note"] = "full chart ideals need more ring variables than supported";
  if (!cfg.ideal.empty()) {
    const bool top = cfg.ideal != "components" && ideals.contains(cfg.ideal) && !ideals[cfg.ideal].is_null();
    if (!top && !ideals["components"].contains(cfg.ideal)) {
      throw UsageError("no ideal '" + cfg.ideal + "' for chart " + chart.id());
    }
  }

  std::string body;
  if (cfg.format == "json") {
    body = out.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "# chart " << chart.id() << " " << to_string(chart.parity()) << " fiber " << cfg.fiber << "\n";
    for (const char* name : {"naive", "add", "full", "intermediate", "reduced"}) {
      if (ideals[name].is_null() || (!cfg.ideal.empty() && cfg.ideal != name)) continue;
      os << "# " << name << "\n";
      for (const auto& p : ideals[name]) os << p.template get<std::string>() << "\n";
    }
    for (const auto& [label, comp] : ideals["components"].items()) {
      if (!cfg.ideal.empty() && cfg.ideal != label) continue;
      os << "# component " << label << "\n";
      for (const auto& p : comp["generators"]) os << p.template get<std::string>() << "\n";
    }
    body = os.str();
  }
  emit_report(body, cfg.output);
  return kPass;
}

template <class F>
int run_gb(const Config& cfg, const F& field) {
  std::ifstream in(cfg.input);
  if (!in) throw UsageError("cannot read input file '" + cfg.input + "'");
  std::vector<ParsedPolynomial> parsed;
  for (const auto& line : read_polynomial_lines(in)) parsed.push_back(parse_polynomial_text(line));
  const MonomialOrder order = MonomialOrder::parse(cfg.order);
  const RingPtr<F> ring = make_ring(field, VariableTable(canonical_variable_order(parsed)), order);
  std::vector<Polynomial<F>> gens;
  for (const auto& p : parsed) gens.push_back(materialize(p, ring));
  GroebnerOptions opt;
  opt.time_limit = time_limit(cfg);
  const auto gb = buchberger(ring, gens, opt);

  std::string body;
  if (cfg.format == "json") {
    const nlohmann::json out = {{"order", order.name()},
                                {"modulus", cfg.modulus},
                                {"variables", ring->variables().names()},
                                {"basis", poly_list(gb.basis())}};
    body = out.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "# reduced Groebner basis, order " << order.name() << ", " << field.name() << "\n";
    for (const auto& g : gb.basis()) os << to_string(g) << "\n";
    body = os.str();
  }
  emit_report(body, cfg.output);
  return kPass;
}

int finish(const SuiteReport& report, const Config& cfg) {
  emit_report(cfg.format == "json" ? report_json(report).dump(2) + "\n" : report_text(report), cfg.output);
  if (report.passed()) return kPass;
  if (report.any_timeout()) return kTimeout;
  return kCheckFailed;
}

int run_verify(const Config& cfg) {
  const auto opt = verifier_options(cfg);
  if (cfg.check == "all") {
    if (!cfg.mutation.empty()) throw UsageError("--mutation needs a single --check");
    return finish(run_suite({{cfg.d, cfg.l}}, cfg.modulus, opt), cfg);
  }
  const auto& names = check_names();
  if (std::find(names.begin(), names.end(), cfg.check) == names.end()) {
    throw UsageError("unknown check '" + cfg.check + "'");
  }
  const Mutation m = cfg.mutation.empty() ? Mutation::none : parse_mutation(cfg.mutation);
  return finish(run_check(cfg.d, cfg.l, cfg.check, cfg.modulus, opt, m), cfg);
}

int run_suite_command(const Config& cfg) {
  return finish(run_suite(parse_chart_list(cfg.charts), cfg.modulus, verifier_options(cfg)), cfg);
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  if (const char* env = std::getenv("ORTHOCHART_TIMEOUT")) {
    try {
      cfg.timeout_seconds = std::stod(env);
      if (!(cfg.timeout_seconds > 0)) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cerr << "error: ORTHOCHART_TIMEOUT must be a positive number of seconds\n";
      return kUsage;
    }
  }

  CLI::App app{"Affine charts of orthogonal local models: ideals, Groebner bases and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--modulus", cfg.modulus, "coefficient field: odd prime p for GF(p), 0 for the rationals");
  app.add_option("--timeout", cfg.timeout_seconds, "seconds allowed per Groebner basis (env ORTHOCHART_TIMEOUT)")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", cfg.output, "output path, '-' for stdout");
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* build = app.add_subcommand("build", "print the ideals of a chart");
  build->add_option("--d", cfg.d, "matrix size d")->required();
  build->add_option("--l", cfg.l, "lattice index l")->required();
  build->add_option("--fiber", cfg.fiber, "special, generic or arithmetic")
      ->check(CLI::IsMember({"special", "generic", "arithmetic"}));
  build->add_option("--ideal", cfg.ideal, "text output only: naive, add, full, intermediate, reduced or a component label");

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of polynomials read from a file");
  gb->add_option("--input", cfg.input, "one polynomial per line, '#' comments")->required();
  gb->add_option("--order", cfg.order, "grlex, lex or block(k)");

  auto* verify = app.add_subcommand("verify", "run one check (or all) on a chart");
  verify->add_option("--d", cfg.d, "matrix size d")->required();
  verify->add_option("--l", cfg.l, "lattice index l")->required();
  verify->add_option("--check", cfg.check, "check name or 'all'");
  verify->add_option("--full-max-d", cfg.full_x_max_d, "largest d for checks on the full chart ring");
  verify->add_option("--mutation", cfg.mutation, "damage the input ideals first, e.g. drop-component");

  auto* suite = app.add_subcommand("suite", "run every check on a list of charts");
  suite->add_option("--charts", cfg.charts, "charts as '(d,l),(d,l),...'");
  suite->add_option("--cross-check", cfg.cross_check, "charts to re-run over the rationals");
  suite->add_option("--full-max-d", cfg.full_x_max_d, "largest d for checks on the full chart ring");
  suite->add_option("--threads", cfg.threads, "charts verified concurrently")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (cfg.modulus != 0) PrimeField validate(cfg.modulus);
    if (*build) return with_field(cfg.modulus, [&](const auto& f) { return run_build(cfg, f); });
    if (*gb) return with_field(cfg.modulus, [&](const auto& f) { return run_gb(cfg, f); });
    if (*verify) return run_verify(cfg);
    if (*suite) return run_suite_command(cfg);
  } catch (const Timeout& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return kTimeout;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

#include "orthochart/verifier.hpp"

#include <map>

#include "orthochart/prime_field.hpp"
#include "orthochart/rational.hpp"

namespace orthochart {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::timeout: return "timeout";
    case Status::not_applicable: return "not-applicable";
  }
  return "?";
}

namespace {

const std::vector<std::pair<Mutation, std::string>>& mutation_table() {
  static const std::vector<std::pair<Mutation, std::string>> table{
      {Mutation::none, "none"},
      {Mutation::drop_minors, "drop-minors"},
      {Mutation::drop_trace_A, "drop-trace-A"},
      {Mutation::drop_block_relation, "drop-block-relation"},
      {Mutation::drop_isotropy, "drop-isotropy"},
      {Mutation::drop_cross_minors, "drop-cross-minors"},
      {Mutation::drop_row_elimination, "drop-row-elimination"},
      {Mutation::drop_B_minors, "drop-B-minors"},
      {Mutation::drop_trace_generator, "drop-trace-generator"},
      {Mutation::pi_times_trace, "pi-times-trace"},
      {Mutation::drop_component, "drop-component"},
      {Mutation::perturb_phi, "perturb-phi"},
  };
  return table;
}

template <class F>
ChartReport run_chart(int d, int l, F field, const VerifierOptions& options) {
  return Verifier<F>(ChartPresentation(d, l), std::move(field), options).run_all();
}

ChartReport run_chart_over(int d, int l, std::uint32_t modulus, const VerifierOptions& options) {
  if (modulus == 0) return run_chart(d, l, RationalField{}, options);
  return run_chart(d, l, PrimeField(modulus), options);
}

// Compares statuses check by check against the rational run.
CheckResult cross_field(const ChartReport& modular, const ChartReport& rational) {
  CheckResult res{"cross-field", Status::pass, nlohmann::json::object(), 0.0};
  std::map<std::string, const CheckResult*> q;
  for (const auto& c : rational.checks) q[c.name] = &c;
  nlohmann::json disagreements = nlohmann::json::array();
  nlohmann::json skipped = nlohmann::json::array();
  for (const auto& c : modular.checks) {
    const CheckResult* other = q.count(c.name) ? q[c.name] : nullptr;
    if (!other) continue;
    if (other->status == Status::timeout && c.status != Status::timeout) {
      skipped.push_back(c.name);
      continue;
    }
    if (other->status != c.status) {
      disagreements.push_back({{"check", c.name},
                               {"modular", {{"status", to_string(c.status)}, {"witness", c.witness}}},
                               {"rational", {{"status", to_string(other->status)}, {"witness", other->witness}}}});
    }
  }
  res.witness["compared"] = modular.checks.size();
  if (!skipped.empty()) res.witness["rational_over_budget"] = skipped;
  if (!disagreements.empty()) {
    res.status = Status::fail;
    res.witness["disagreements"] = disagreements;
  }
  return res;
}

}  // namespace

std::string to_string(Mutation m) {
  for (const auto& [k, name] : mutation_table()) {
    if (k == m) return name;
  }
  return "?";
}

Mutation parse_mutation(const std::string& name) {
  for (const auto& [k, n] : mutation_table()) {
    if (n == name) return k;
  }
  throw InvalidInput("unknown mutation '" + name + "'");
}

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names{"A-relations",  "B1JB2-symmetric", "S0-relation",   "X2-in-Iprime",
                                              "antisym",      "minors-reduce",   "trace-in-ideal"};
  return names;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> all = lemma_names();
    for (const char* n : {"dimensions", "flatness", "reduction", "special-fiber"}) all.emplace_back(n);
    std::sort(all.begin(), all.end());
    return all;
  }();
  return names;
}

bool ChartReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == Status::pass || c.status == Status::not_applicable;
  });
}

bool SuiteReport::empty() const {
  return std::all_of(charts.begin(), charts.end(), [](const ChartReport& c) { return c.checks.empty(); });
}

bool SuiteReport::passed() const {
  if (empty()) return false;
  return std::all_of(charts.begin(), charts.end(), [](const ChartReport& c) { return c.passed(); });
}

bool SuiteReport::any_timeout() const {
  for (const auto& c : charts) {
    for (const auto& k : c.checks) {
      if (k.status == Status::timeout) return true;
    }
  }
  return false;
}

namespace {

EngineInfo engine_info(std::uint32_t modulus, const VerifierOptions& options) {
  return {modulus, "grlex", static_cast<long long>(options.groebner.time_limit.count()), options.groebner.max_pairs};
}

}  // namespace

SuiteReport run_suite(const std::vector<std::pair<int, int>>& charts, std::uint32_t modulus,
                      const VerifierOptions& options) {
  if (modulus != 0) PrimeField validate(modulus);
  std::vector<std::pair<int, int>> sorted = charts;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& [d, l] : sorted) ChartPresentation validate(d, l);

  auto one = [&](std::pair<int, int> c) {
    ChartReport report = run_chart_over(c.first, c.second, modulus, options);
    const bool cross = modulus != 0 && std::find(options.cross_check_charts.begin(), options.cross_check_charts.end(),
                                                 c) != options.cross_check_charts.end();
    if (cross) {
      const auto start = std::chrono::steady_clock::now();
      CheckResult res = cross_field(report, run_chart_over(c.first, c.second, 0, options));
      res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report.checks.push_back(std::move(res));
      std::sort(report.checks.begin(), report.checks.end(),
                [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    }
    return report;
  };

  SuiteReport suite{engine_info(modulus, options), {}};
  if (options.threads > 1) {
    std::vector<std::future<ChartReport>> jobs;
    for (const auto& c : sorted) jobs.push_back(std::async(std::launch::async, one, c));
    for (auto& j : jobs) suite.charts.push_back(j.get());
  } else {
    for (const auto& c : sorted) suite.charts.push_back(one(c));
  }
  return suite;
}

SuiteReport run_check(int d, int l, const std::string& check, std::uint32_t modulus, const VerifierOptions& options,
                      Mutation mutation) {
  const ChartPresentation chart(d, l);
  SuiteReport suite{engine_info(modulus, options), {}};
  ChartReport report{d, l, to_string(chart.parity()), {}};
  if (modulus == 0) {
    report.checks.push_back(Verifier<RationalField>(chart, RationalField{}, options).verify_check(check, mutation));
  } else {
    report.checks.push_back(Verifier<PrimeField>(chart, PrimeField(modulus), options).verify_check(check, mutation));
  }
  suite.charts.push_back(std::move(report));
  return suite;
}

}  // namespace orthochart

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Limits are fixed here so that a run is comparable across machines.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orthochart/prime_field.hpp"
#include "orthochart/rational.hpp"
#include "orthochart/verifier.hpp"
#include "random_instances.hpp"

using namespace orthochart;

namespace {

constexpr std::uint32_t kModulus = 32003;
constexpr auto kReductionLimit = std::chrono::seconds(600);  // per chart
constexpr auto kCheckLimit = std::chrono::seconds(600);      // per Groebner basis
constexpr int kInstances = 1000;
constexpr std::uint64_t kInstanceSeed = 20241;
constexpr auto kInstanceBudget = std::chrono::milliseconds(5000);  // per Groebner basis
constexpr double kSuiteSeconds = 60.0;

using Chart = std::pair<int, int>;
const std::vector<Chart> kDimensionCharts = {{6, 2}, {8, 4}, {5, 3}, {7, 3}, {6, 3}, {5, 2}};
const std::vector<std::pair<Chart, int>> kComponentCounts = {
    {{6, 2}, 3}, {{6, 4}, 3}, {{8, 4}, 2}, {{7, 3}, 2}, {{5, 3}, 3}, {{6, 3}, 2}, {{5, 2}, 3}};
const std::vector<std::pair<std::string, Mutation>> kLemmaProbes = {
    {"A-relations", Mutation::drop_trace_A},       {"B1JB2-symmetric", Mutation::drop_cross_minors},
    {"S0-relation", Mutation::drop_isotropy},      {"X2-in-Iprime", Mutation::drop_minors},
    {"antisym", Mutation::drop_block_relation},    {"minors-reduce", Mutation::drop_B_minors},
    {"trace-in-ideal", Mutation::drop_block_relation}};

std::string chart_id(const Chart& c) { return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")"; }

VerifierOptions options(std::chrono::milliseconds limit) {
  VerifierOptions opt;
  opt.groebner.time_limit = limit;
  return opt;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(what + (ok ? "" : " [failed]"));
  }
};

Outcome reduction_charts() {
  Outcome out;
  for (const Chart& c : {Chart{6, 2}, Chart{5, 3}}) {
    const Verifier<PrimeField> v(ChartPresentation(c.first, c.second), PrimeField(kModulus), options(kReductionLimit));
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = v.verify_reduction();
    const double s = seconds_since(t0);
    bool parts = true;
    for (const char* k : {"a", "b", "c", "d"}) parts = parts && r.witness.contains(k);
    std::ostringstream os;
    os << chart_id(c) << " " << to_string(r.status) << " " << s << "s";
    out.require(r.status == Status::pass && parts && s < 600.0, os.str());
  }
  return out;
}

Outcome lemma_suite() {
  Outcome out;
  const Verifier<PrimeField> v(ChartPresentation(6, 2), PrimeField(kModulus), options(kCheckLimit));
  int passed = 0, caught = 0;
  for (const auto& [name, mutation] : kLemmaProbes) {
    const bool ok = v.verify_lemma(name).status == Status::pass;
    const bool fails = v.verify_lemma(name, mutation).status == Status::fail;
    passed += ok;
    caught += fails;
    if (!ok || !fails) out.require(false, name);
  }
  out.require(passed == 7, std::to_string(passed) + "/7 pass");
  out.require(caught == 7, std::to_string(caught) + "/7 mutations fail");
  return out;
}

template <class Fn>
Outcome per_chart(const std::vector<Chart>& charts, Fn&& fn) {
  Outcome out;
  for (const Chart& c : charts) {
    const auto [ok, note] = fn(c);
    out.require(ok, chart_id(c) + " " + note);
  }
  return out;
}

Outcome dimensions() {
  return per_chart(kDimensionCharts, [](const Chart& c) {
    const Verifier<PrimeField> v(ChartPresentation(c.first, c.second), PrimeField(kModulus), options(kCheckLimit));
    const auto r = v.verify_dimensions();
    const int want = c.first - 2;
    const bool ok = r.status == Status::pass && r.witness["special"] == want && r.witness["generic"] == want;
    return std::pair{ok, r.witness["special"].dump() + "/" + r.witness["generic"].dump()};
  });
}

Outcome flatness() {
  return per_chart(kDimensionCharts, [](const Chart& c) {
    const Verifier<RationalField> v(ChartPresentation(c.first, c.second), RationalField{}, options(kCheckLimit));
    const auto r = v.verify_flatness();
    return std::pair{r.status == Status::pass, to_string(r.status)};
  });
}

Outcome components() {
  Outcome out;
  for (const auto& [c, count] : kComponentCounts) {
    const Verifier<PrimeField> v(ChartPresentation(c.first, c.second), PrimeField(kModulus), options(kCheckLimit));
    const auto r = v.verify_special_fiber();
    const auto& w = r.witness;
    bool ok = r.status == Status::pass && w["components"] == count && w["reduced_decomposition"] == true &&
              w["incomparable"] == true;
    for (const auto& [label, dim] : w["dimensions"].items()) ok = ok && dim == c.first - 2;
    for (const auto& [label, p] : w["pure_power_free"].items()) ok = ok && p["holds"] == true;
    out.require(ok, chart_id(c) + " " + w["components"].dump() + " components");
  }
  return out;
}

Outcome property_suite() {
  Outcome out;
  orthochart::GroebnerOptions budget;
  budget.time_limit = kInstanceBudget;
  std::mt19937_64 rng(kInstanceSeed);
  int bad = 0, over = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < kInstances; ++i) {
    const auto r = randomized::run_instance(rng, budget);
    if (!r.ok()) {
      ++bad;
      std::fprintf(stderr, "instance %d: %s (%s)\n", i, r.failure.c_str(), r.instance.c_str());
    }
    if (r.over_budget) {
      ++over;
      std::fprintf(stderr, "instance %d over budget in %s (%s)\n", i, r.stage.c_str(), r.instance.c_str());
    }
  }
  const double s = seconds_since(t0);
  out.require(bad == 0, std::to_string(bad) + " violations");
  out.require(over == 0, std::to_string(over) + " over budget");
  std::ostringstream os;
  os << s << "s for " << kInstances;
  out.require(s < kSuiteSeconds, os.str());
  return out;
}

// Statuses of every check behind criteria 1-5, keyed by name.
template <class F>
std::map<std::string, Status> statuses(const Chart& c, F field) {
  const Verifier<F> v(ChartPresentation(c.first, c.second), std::move(field), options(kCheckLimit));
  std::map<std::string, Status> out;
  for (const auto& r : v.run_all().checks) out[r.name] = r.status;
  return out;
}

Outcome cross_field() {
  return per_chart({{6, 2}, {5, 2}}, [](const Chart& c) {
    const auto p = statuses(c, PrimeField(kModulus));
    const auto q = statuses(c, RationalField{});
    int passes = 0;
    for (const auto& [name, s] : p) passes += s == Status::pass;
    return std::pair{p == q && passes > 0, std::to_string(passes) + " passes, statuses " + (p == q ? "equal" : "differ")};
  });
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"reduction (6,2) (5,3) at p=32003, < 600 s each", reduction_charts},
      {"seven lemmas on (6,2), each caught by a mutation", lemma_suite},
      {"fiber dimensions d-2 on six charts", dimensions},
      {"(I'' : pi) == I'' over Q on six charts", flatness},
      {"special fiber components on seven charts", components},
      {"1000 random engine instances, seed 20241, < 60 s", property_suite},
      {"Q and p=32003 statuses agree on (6,2) (5,2)", cross_field},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::string notes;
    for (const auto& n : o.notes) notes += (notes.empty() ? "" : "; ") + n;
    std::printf("CRITERION %zu %s: %s [%.2fs] (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                seconds_since(t0), notes.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  std::printf("ACCEPTANCE: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}

// One line per acceptance criterion: [PASS] or [FAIL], with wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "epdl/axioms.hpp"
#include "epdl/check.hpp"
#include "epdl/contextual.hpp"
#include "epdl/direct.hpp"
#include "epdl/ets.hpp"
#include "epdl/fixtures.hpp"
#include "epdl/parser.hpp"
#include "epdl/planner.hpp"
#include "epdl/qbf.hpp"
#include "../support/oracles.hpp"

using namespace epdl;

namespace {

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (problem.empty() && secs > limit_s)
    problem = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s";
  const bool ok = problem.empty();
  if (!ok) ++failures;
  std::printf("[%s] %2d %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, title, secs,
              ok ? "" : ": ", problem.c_str());
  std::fflush(stdout);
}

// Evaluates `formula` at `point` with every engine that accepts it and
// returns an error if any disagrees with `expected`.
std::string expect(const UncertaintyMap& m, const char* point, const char* formula, bool expected) {
  const Formula f = parse_formula(formula);
  const StateId s = m.model().state_id(point);
  for (Engine e : {Engine::direct, Engine::contextual, Engine::ets}) {
    if (e == Engine::contextual && !f.star_free()) continue;
    if (check(m, s, f, e) != expected)
      return std::string(engine_name(e)) + " gives " + (expected ? "false" : "true") + " for " + formula;
  }
  return "";
}

std::string plan_text(const std::optional<Plan>& p) {
  if (!p) return "none";
  std::string out = "[";
  for (const auto& a : *p) out += (out.size() > 1 ? " " : "") + a;
  return out + "]";
}

PlanningProblem problem(const char* model, const char* goal) {
  const auto m = fixture(model);
  return make_problem(m, parse_formula(goal), m.model().actions());
}

}  // namespace

int main() {
  criterion(1, "spy map golden set", 1.0, [] {
    const auto spy = fixture("spy");
    for (auto r : {expect(spy, "s3", "[r](Safe & ~K Safe)", true),
                   expect(spy, "s3", "K [r][u](Safe & K Safe)", true)})
      if (!r.empty()) return r;
    const auto p = problem("spy", "Safe");
    const auto plan = find_plan(p);
    if (plan != Plan{"r", "u"}) return "find_plan gives " + plan_text(plan);
    if (brute_force_plan(p, 2) != Plan{"r", "u"}) return std::string("brute force disagrees");
    if (!plan_exists(p) || !verify_plan(p, *plan)) return std::string("existence/verification fails");
    return std::string();
  });

  criterion(2, "context dependency example", 1.0, [] {
    return expect(fixture("context"), "s1", "<b>K p & <a><a>~K p", true);
  });

  criterion(3, "example 1: composed vs stepwise strong modality", 1.0, [] {
    const auto m = fixture("example1");
    for (auto r : {expect(m, "s1", "[[a;b]]p", true), expect(m, "s1", "[[a]][[b]]p", false)})
      if (!r.empty()) return r;
    if (verify_plan(problem("example1", "p"), {"a", "b"})) return std::string("verify_plan([a,b]) is true");
    return std::string();
  });

  criterion(4, "example 2: K<B*>p without a conformant plan", 1.0, [] {
    const auto m = fixture("example2");
    if (!check(m, 0, parse_formula("K <(a+b)*>p"), Engine::ets)) return std::string("K<B*>p is false");
    const auto p = problem("example2", "p");
    if (plan_exists(p)) return std::string("plan_exists is true");
    if (const auto plan = find_plan(p)) return "find_plan gives " + plan_text(plan);
    return std::string();
  });

  criterion(5, "example 3: the K in theta matters", 1.0, [] {
    const auto m = fixture("example3");
    for (auto r : {expect(m, "s1", "<((?K<a>T;a)+(?K<b>T;b))*>K p", false),
                   expect(m, "s1", "<((?K<a>T;a)+(?K<b>T;b))*>p", true)})
      if (!r.empty()) return r;
    return std::string();
  });

  criterion(6, "example 4: two plans for K p, one for K p & ~K q", 1.0, [] {
    const auto kp = problem("example4", "K p");
    const auto kpq = problem("example4", "K p & ~K q");
    if (!verify_plan(kp, {"a"}) || !verify_plan(kp, {"b"})) return std::string("goal K p: a plan fails");
    if (!verify_plan(kpq, {"a"})) return std::string("goal K p & ~K q: [a] fails");
    if (verify_plan(kpq, {"b"})) return std::string("goal K p & ~K q: [b] verifies");
    const auto plan = find_plan(kp);
    if (!plan || plan->size() != 1) return "find_plan gives " + plan_text(plan);
    return std::string();
  });

  criterion(7, "contextual = direct on 500 random star-free cases", 60.0, [] {
    std::mt19937_64 rng(7001);
    FormulaOptions opt;
    opt.depth = 4;
    std::size_t outcomes[2] = {0, 0};
    for (int i = 0; i < 500; ++i) {
      const std::size_t actions = 1 + i % 2;
      const auto m = random_model(1 + i % 6, actions, 2, 0.2 + 0.05 * (i % 5), rng());
      opt.actions = {"a", "b"};
      opt.actions.resize(actions);
      const Formula f = random_formula(rng, opt);
      for (StateId s : m.uncertainty().members()) {
        const bool v = sat(m, s, f);
        if (check_contextual(m, s, f) != v)
          return "disagreement on " + to_string(f) + "\n" + save_model(m);
        ++outcomes[v];
      }
    }
    if (outcomes[0] == 0 || outcomes[1] == 0) return std::string("degenerate sample");
    return std::string();
  });

  criterion(8, "ETS = direct on 200 random full-EPDL cases", 60.0, [] {
    std::mt19937_64 rng(8001);
    FormulaOptions opt;
    opt.depth = 4;
    opt.star_depth = 2;
    std::size_t outcomes[2] = {0, 0}, starred = 0;
    for (int i = 0; i < 200; ++i) {
      const std::size_t actions = 1 + i % 3;
      const auto m = random_model(1 + i % 5, actions, 2, 0.2 + 0.05 * (i % 5), rng());
      opt.actions = {"a", "b", "c"};
      opt.actions.resize(actions);
      const Formula f = random_formula(rng, opt);
      starred += !f.star_free();
      for (StateId s : m.uncertainty().members()) {
        const bool v = sat(m, s, f);
        if (check_full(m, s, f) != v)
          return "disagreement on " + to_string(f) + "\n" + save_model(m);
        ++outcomes[v];
      }
    }
    if (outcomes[0] == 0 || outcomes[1] == 0 || starred < 20)
      return "degenerate sample: " + std::to_string(starred) + " starred formulas";
    return std::string();
  });

  criterion(9, "plan_exists = brute force on 300 random problems; savitch agrees", 120.0, [] {
    std::mt19937_64 rng(9001);
    FormulaOptions opt;
    opt.depth = 2;
    opt.programs = false;
    std::size_t with_plan = 0;
    for (std::uint64_t i = 0; i < 300; ++i) {
      const std::size_t states = 1 + i % 5, actions = 1 + (i / 5) % 3;
      const auto m = random_model(states, actions, 2, 0.25 + 0.1 * static_cast<double>(i % 4), rng());
      const auto p = make_problem(m, random_formula(rng, opt), m.model().actions());
      const bool exists = plan_exists(p);
      const std::size_t cap = guard_reachable_beliefs(m.model(), m.uncertainty(), p.actions).size();
      const bool brute = brute_force_plan(p, cap).has_value();
      const bool savitch = savitch_reach(m.model(), m.uncertainty(), p.actions, p.goal);
      if (exists != brute || exists != savitch)
        return "problem " + std::to_string(i) + " goal " + to_string(p.goal) + ": theta " +
               std::to_string(exists) + ", brute " + std::to_string(brute) + ", savitch " +
               std::to_string(savitch);
      with_plan += exists;
    }
    if (with_plan == 0 || with_plan == 300) return std::string("degenerate sample");
    return std::string();
  });

  criterion(10, "QBF reduction: exhaustive n=2 sweep and 100 random n=3", 120.0, [] {
    std::vector<std::vector<int>> clauses;
    const int lits[] = {1, -1, 2, -2};
    for (int a : lits) clauses.push_back({a});
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) clauses.push_back({lits[i], lits[j]});
    std::vector<Qbf> all{{2, {}}};
    for (const auto& c : clauses) all.push_back({2, {c}});
    for (const auto& c : clauses)
      for (const auto& d : clauses) all.push_back({2, {c, d}});
    std::mt19937_64 rng(10001);
    for (int i = 0; i < 100; ++i) {
      Qbf q{3, {}};
      for (std::size_t c = 1 + rng() % 4; c > 0; --c) {
        std::vector<int> clause;
        for (std::size_t l = 1 + rng() % 3; l > 0; --l) {
          const int v = static_cast<int>(1 + rng() % 3);
          clause.push_back(rng() % 2 ? v : -v);
        }
        q.clauses.push_back(clause);
      }
      all.push_back(q);
    }
    for (const auto& q : all) {
      const bool truth = oracle::qbf_truth(q);
      if (eval_qbf(q) != truth || reduction_check(q) != truth)
        return "disagreement on " + to_string(build_qbf_formula(q));
    }
    return std::string();
  });

  criterion(11, "soundness suite: 1000 instances per schema; OBS fails on the spy map", 60.0, [] {
    const auto report = soundness_suite(11001, 1000);
    for (const auto& r : report.results)
      if (r.failed != 0 || r.passed != 1000)
        return r.schema + ": " + std::to_string(r.failed) + " counterexamples";
    const auto spy = fixture("spy");
    const auto narrowed = spy.with_uncertainty(make_belief(spy.model(), {"s4", "s5"}));
    if (!check_validity(parse_formula("K <r>T | K ~<r>T"), {narrowed}))
      return std::string("no counterexample to OBS");
    return std::string();
  });

  criterion(12, "belief shape along all alternation paths, n <= 4", 10.0, [] {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto m = build_qbf_model(n);
      const auto& k = m.model();
      // Every path: at step i pick a_i or na_i.
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Belief u = m.uncertainty();
        Belief expected = make_belief(k, {"x0"});
        for (std::size_t i = 1; i <= n; ++i) {
          const bool pos = (mask >> (i - 1)) & 1u;
          u = cnu(k, u, {(pos ? "a" : "na") + std::to_string(i)});
          expected.set(k.state_id((pos ? "x" : "nx") + std::to_string(i)));
          if (u != expected) return "n=" + std::to_string(n) + ": got " + belief_to_string(k, u);
        }
      }
    }
    return std::string();
  });

  return failures == 0 ? 0 : 1;
}

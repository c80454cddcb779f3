#include <doctest.h>

#include "epdl/axioms.hpp"
#include "epdl/errors.hpp"
#include "epdl/ets.hpp"
#include "epdl/fixtures.hpp"
#include "epdl/parser.hpp"
#include "epdl/planner.hpp"

using namespace epdl;

namespace {

PlanningProblem problem(const char* model, const char* goal, std::vector<Action> b) {
  return make_problem(fixture(model), parse_formula(goal), std::move(b));
}

// Random problem with an epistemic goal; the planning tests and the
// acceptance run use the same recipe.
PlanningProblem random_problem(std::mt19937_64& rng, std::uint64_t i) {
  const std::size_t states = 1 + i % 5;
  const std::size_t actions = 1 + (i / 5) % 3;
  const auto m = random_model(states, actions, 2, 0.25 + 0.1 * static_cast<double>(i % 4), rng());
  FormulaOptions opt;
  opt.depth = 2;
  opt.programs = false;
  std::vector<Action> b = m.model().actions();
  return make_problem(m, random_formula(rng, opt), b);
}

}  // namespace

TEST_SUITE("planner") {

TEST_CASE("plan verification") {
  const auto spy = problem("spy", "Safe", {"r", "u"});
  CHECK(verify_plan(spy, {"r", "u"}));
  CHECK_FALSE(verify_plan(spy, {"r"}));
  CHECK_FALSE(verify_plan(spy, {"u"}));
  CHECK_THROWS_AS(verify_plan(spy, {"x"}), ContractError);

  const auto e4 = problem("example4", "K p & ~K q", {"a", "b"});
  CHECK(verify_plan(e4, {"a"}));
  CHECK_FALSE(verify_plan(e4, {"b"}));
  const auto e4k = problem("example4", "K p", {"a", "b"});
  CHECK(verify_plan(e4k, {"a"}));
  CHECK(verify_plan(e4k, {"b"}));

  const auto e1 = problem("example1", "p", {"a", "b"});
  CHECK_FALSE(verify_plan(e1, {"a", "b"}));
}

TEST_CASE("plan existence and extraction") {
  const auto spy = problem("spy", "Safe", {"r", "u"});
  CHECK(plan_exists(spy));
  CHECK(find_plan(spy) == Plan{"r", "u"});
  CHECK(brute_force_plan(spy, 2) == Plan{"r", "u"});

  const auto e2 = problem("example2", "p", {"a", "b"});
  CHECK_FALSE(plan_exists(e2));
  CHECK_FALSE(find_plan(e2).has_value());
  CHECK_FALSE(brute_force_plan(e2, 6).has_value());

  const auto e3 = problem("example3", "p", {"a", "b"});
  CHECK_FALSE(plan_exists(e3));
  CHECK_FALSE(find_plan(e3).has_value());

  const auto e4 = problem("example4", "K p", {"a", "b"});
  CHECK(find_plan(e4) == Plan{"a"});

  const auto trivial = problem("example2", "T", {"a", "b"});
  CHECK(plan_exists(trivial));
  CHECK(find_plan(trivial) == Plan{});
  CHECK(brute_force_plan(trivial, 3) == Plan{});
  CHECK_THROWS_AS(problem("spy", "Safe", {}), ContractError);
}

TEST_CASE("goals with programs use deepening") {
  const auto spy = problem("spy", "<u>T | Safe", {"r", "u"});
  const auto plan = find_plan(spy);
  REQUIRE(plan);
  CHECK(verify_plan(spy, *plan));
  const auto with_box = problem("spy", "[u]Safe", {"r", "u"});
  const auto p2 = find_plan(with_box);
  REQUIRE(p2);
  CHECK(verify_plan(with_box, *p2));
  CHECK(p2 == brute_force_plan(with_box, 8));
}

TEST_CASE("savitch search") {
  for (const char* name : {"spy", "example2", "example3", "example4"}) {
    const auto m = fixture(name);
    const char* goal = std::string(name) == "spy" ? "Safe" : "p";
    const auto p = make_problem(m, parse_formula(goal), m.model().actions());
    CHECK(savitch_reach(m.model(), m.uncertainty(), p.actions, p.goal) == plan_exists(p));
  }
  const auto spy = fixture("spy");
  CHECK(savitch_reach(spy.model(), spy.uncertainty(), {"r"}, top()));
  CHECK_THROWS_AS(savitch_reach(spy.model(), spy.uncertainty(), {"r"}, parse_formula("[r]p")),
                  ContractError);
}

TEST_CASE("random problems: existence, extraction and the oracles agree") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t i = 0; i < 120; ++i) {
    const PlanningProblem p = random_problem(rng, i);
    const auto& m = p.map.model();
    INFO(to_string(p.goal));
    const bool exists = plan_exists(p);
    const std::size_t cap = guard_reachable_beliefs(m, p.map.uncertainty(), p.actions).size();
    const auto brute = brute_force_plan(p, cap);
    const auto found = find_plan(p);
    CHECK(exists == brute.has_value());
    CHECK(exists == found.has_value());
    CHECK(exists == savitch_reach(m, p.map.uncertainty(), p.actions, p.goal));
    if (found) {
      CHECK(verify_plan(p, *found));
      CHECK(found->size() <= brute->size());
      CHECK(found == brute);
    }
    // The plan property is the same at every point of U.
    const Formula guarded = build_theta(p.actions, p.goal);
    for (StateId s : p.map.uncertainty().members())
      CHECK(check_full(p.map, s, guarded) == exists);
  }
}

}

#pragma once

// Conformant planning: does some action sequence over B, executable from
// every world the agent considers possible, make the agent know the goal?

#include <optional>
#include <vector>

#include "epdl/model.hpp"
#include "epdl/syntax.hpp"

namespace epdl {

struct PlanningProblem {
  UncertaintyMap map;
  Formula goal;
  std::vector<Action> actions;  // sorted, unique, nonempty
};

/// Sorts and dedupes `actions`; throws ContractError if none remain.
PlanningProblem make_problem(UncertaintyMap map, Formula goal, std::vector<Action> actions);

using Plan = ActionSequence;

/// K [[a1]]...[[an]] goal at a point of U, via the ETS engine. Throws
/// ContractError for a step outside B.
bool verify_plan(const PlanningProblem& p, const Plan& plan);

/// The theta formula over B and the goal, via the ETS engine.
bool plan_exists(const PlanningProblem& p);

/// Shortest plan, ties broken by action-name order. Program-free goals use
/// breadth-first search over guarded belief updates; other goals fall back
/// to iterative deepening over verify_plan.
std::optional<Plan> find_plan(const PlanningProblem& p);

/// First plan of length <= max_len in length-lex order, verified with the
/// direct engine. Prefixes that are not executable everywhere are skipped,
/// as are prefixes reaching a belief already expanded at no greater depth;
/// neither changes which plan comes first.
std::optional<Plan> brute_force_plan(const PlanningProblem& p, std::size_t max_len);

/// Beliefs reachable from `u0` through guarded updates over `b`, `u0` first.
std::vector<Belief> guard_reachable_beliefs(const KripkeModel& m, const Belief& u0,
                                            const std::vector<Action>& b);

/// Midpoint (Savitch) reachability from `u0` to a belief where the agent
/// knows `goal`, without building the belief graph. Recursion depth is at
/// most the number of states; segments of up to four steps are searched
/// directly. `goal` must be program-free; models are limited to 30 states.
bool savitch_reach(const KripkeModel& m, const Belief& u0, const std::vector<Action>& b,
                   const Formula& goal);

/// Does the agent know `goal` when its uncertainty set is `belief`?
bool knows_at(const KripkeModel& m, const Belief& belief, const Formula& goal);

}  // namespace epdl

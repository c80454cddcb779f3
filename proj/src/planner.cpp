#include "epdl/planner.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <unordered_map>

#include "epdl/direct.hpp"
#include "epdl/errors.hpp"
#include "epdl/ets.hpp"

namespace epdl {

PlanningProblem make_problem(UncertaintyMap map, Formula goal, std::vector<Action> actions) {
  std::sort(actions.begin(), actions.end());
  actions.erase(std::unique(actions.begin(), actions.end()), actions.end());
  if (actions.empty()) throw ContractError("action set must be nonempty");
  return PlanningProblem{std::move(map), std::move(goal), std::move(actions)};
}

namespace {

StateId some_point(const UncertaintyMap& m) { return m.uncertainty().members().front(); }

void check_steps(const PlanningProblem& p, const Plan& plan) {
  for (const auto& a : plan)
    if (!std::binary_search(p.actions.begin(), p.actions.end(), a))
      throw ContractError("plan step '" + a + "' is not in the action set");
}

using LeafTest = std::function<bool(const Plan&)>;
using PrefixTest = std::function<bool(const Plan&, const Belief&)>;

// Iterative deepening in length-lex order. A prefix is expanded only if
// `executable` accepts it and its belief was not already expanded at a depth
// no greater than the current one during this round: whether a suffix
// completes a plan depends only on the belief the prefix reaches.
std::optional<Plan> deepening_search(const PlanningProblem& p, std::size_t max_len,
                                     const PrefixTest& executable, const LeafTest& leaf) {
  const KripkeModel& m = p.map.model();
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::unordered_map<Belief, std::size_t, StateSetHash> seen;
    Plan path;
    std::optional<Plan> found;
    std::function<void(const Belief&)> dfs = [&](const Belief& cur) {
      if (path.size() == len) {
        if (leaf(path)) found = path;
        return;
      }
      auto [it, inserted] = seen.emplace(cur, path.size());
      if (!inserted) {
        if (it->second <= path.size()) return;
        it->second = path.size();
      }
      for (const auto& a : p.actions) {
        path.push_back(a);
        const Belief next = update_belief(m, cur, a);
        if (executable(path, cur)) dfs(next);
        path.pop_back();
        if (found) return;
      }
    };
    dfs(p.map.uncertainty());
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

bool knows_at(const KripkeModel& m, const Belief& belief, const Formula& goal) {
  if (belief.none()) throw ContractError("belief must be nonempty");
  DirectSemantics engine(m);
  const Formula k = know(goal);
  return engine.holds(belief, belief.members().front(), k);
}

bool verify_plan(const PlanningProblem& p, const Plan& plan) {
  check_steps(p, plan);
  return check_full(p.map, some_point(p.map), build_plan_formula(plan, p.goal));
}

bool plan_exists(const PlanningProblem& p) {
  return check_full(p.map, some_point(p.map), build_theta(p.actions, p.goal));
}

std::vector<Belief> guard_reachable_beliefs(const KripkeModel& m, const Belief& u0,
                                            const std::vector<Action>& b) {
  std::vector<Belief> out{u0};
  std::unordered_map<Belief, std::size_t, StateSetHash> seen{{u0, 0}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& a : b) {
      if (!executable_everywhere(m, out[i], a)) continue;
      Belief next = update_belief(m, out[i], a);
      if (seen.emplace(next, out.size()).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::optional<Plan> find_plan(const PlanningProblem& p) {
  const KripkeModel& m = p.map.model();
  if (!program_free(p.goal)) {
    const std::size_t cap = guard_reachable_beliefs(m, p.map.uncertainty(), p.actions).size();
    return deepening_search(
        p, cap,
        [&](const Plan& path, const Belief& before) {
          return executable_everywhere(m, before, path.back());
        },
        [&](const Plan& plan) { return verify_plan(p, plan); });
  }

  struct Node {
    Belief belief;
    std::size_t parent;
    Action via;
  };
  std::vector<Node> nodes{{p.map.uncertainty(), 0, {}}};
  std::unordered_map<Belief, std::size_t, StateSetHash> seen{{p.map.uncertainty(), 0}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (knows_at(m, nodes[i].belief, p.goal)) {
      Plan plan;
      for (std::size_t j = i; j != 0; j = nodes[j].parent) plan.push_back(nodes[j].via);
      std::reverse(plan.begin(), plan.end());
      return plan;
    }
    for (const auto& a : p.actions) {
      if (!executable_everywhere(m, nodes[i].belief, a)) continue;
      Belief next = update_belief(m, nodes[i].belief, a);
      if (seen.emplace(next, nodes.size()).second) nodes.push_back({std::move(next), i, a});
    }
  }
  return std::nullopt;
}

std::optional<Plan> brute_force_plan(const PlanningProblem& p, std::size_t max_len) {
  const StateId u = some_point(p.map);
  return deepening_search(
      p, max_len,
      [&](const Plan& path, const Belief&) {
        return sat(p.map, u, build_plan_formula(path, top()));
      },
      [&](const Plan& plan) { return sat(p.map, u, build_plan_formula(plan, p.goal)); });
}

namespace {

class SavitchSearch {
 public:
  SavitchSearch(const KripkeModel& m, const std::vector<Action>& b) : n_(m.size()) {
    for (const auto& a : b) {
      std::vector<std::uint64_t> succ(n_, 0);
      if (const BitMatrix* r = m.relation(a))
        for (StateId s = 0; s < n_; ++s)
          if (!r->row(s).words().empty()) succ[s] = r->row(s).words()[0];
      for (auto mask : succ) image_ |= mask;
      succ_.push_back(std::move(succ));
    }
  }

  // Guarded update, or 0 when some world has no successor.
  std::uint64_t step(std::uint64_t belief, std::size_t a) const {
    std::uint64_t out = 0;
    for (std::uint64_t rest = belief; rest != 0; rest &= rest - 1) {
      const std::uint64_t s = succ_[a][static_cast<std::size_t>(__builtin_ctzll(rest))];
      if (s == 0) return 0;
      out |= s;
    }
    return out;
  }

  // Reachable in at most `steps` guarded updates, by plain depth-first search.
  bool reach_direct(std::uint64_t from, std::uint64_t to, std::size_t steps) const {
    if (from == to) return true;
    if (steps == 0) return false;
    for (std::size_t a = 0; a < succ_.size(); ++a) {
      const std::uint64_t next = step(from, a);
      if (next != 0 && reach_direct(next, to, steps - 1)) return true;
    }
    return false;
  }

  // Reachable in at most 2^k guarded updates. Answers are memoised per
  // (from, to, k).
  bool reach(std::uint64_t from, std::uint64_t to, std::size_t k, std::uint64_t start) {
    if (from == to) return true;
    if (k <= kDirectLevels) return reach_direct(from, to, std::size_t{1} << k);
    const Key key{from, to, k};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool found = reach(from, start, k - 1, start) && reach(start, to, k - 1, start);
    for (std::uint64_t mid = image_; !found && mid != 0; mid = (mid - 1) & image_)
      found = mid != start && reach(from, mid, k - 1, start) && reach(mid, to, k - 1, start);
    memo_.emplace(key, found);
    return found;
  }

  std::uint64_t image() const { return image_; }

  static constexpr std::size_t kDirectLevels = 2;

 private:
  struct Key {
    std::uint64_t from, to;
    std::size_t k;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& x) const {
      return std::hash<std::uint64_t>{}(x.from * 0x9e3779b97f4a7c15ULL ^ x.to) ^ x.k;
    }
  };

  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> succ_;
  std::uint64_t image_ = 0;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

Belief from_mask(std::size_t n, std::uint64_t mask) {
  Belief b(n);
  for (; mask != 0; mask &= mask - 1) b.set(static_cast<std::size_t>(__builtin_ctzll(mask)));
  return b;
}

}  // namespace

bool savitch_reach(const KripkeModel& m, const Belief& u0, const std::vector<Action>& b,
                   const Formula& goal) {
  if (!program_free(goal)) throw ContractError("savitch_reach needs a program-free goal");
  if (m.size() > 30) throw ContractError("savitch_reach is limited to 30 states");
  if (u0.none()) throw ContractError("initial belief must be nonempty");
  if (knows_at(m, u0, goal)) return true;

  SavitchSearch search(m, b);
  const std::uint64_t start = u0.words()[0];
  // Every belief after one or more steps is a nonempty subset of the image
  // set, so 2^k >= that count bounds the length of a repetition-free path.
  const std::size_t candidates = std::size_t{1} << std::popcount(search.image());
  std::size_t k = 0;
  while ((std::size_t{1} << k) < candidates) ++k;

  const std::uint64_t img = search.image();
  for (std::uint64_t target = img; target != 0; target = (target - 1) & img) {
    if (target == start) continue;
    if (!knows_at(m, from_mask(m.size(), target), goal)) continue;
    if (search.reach(start, target, k, start)) return true;
  }
  return false;
}

}  // namespace epdl

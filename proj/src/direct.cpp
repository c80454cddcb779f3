#include "epdl/direct.hpp"

#include <deque>
#include <unordered_set>

#include "epdl/errors.hpp"

namespace epdl {

bool DirectSemantics::holds(const Belief& belief, StateId world, const Formula& f) {
  if (!belief.test(world)) throw ContractError("world is not in the uncertainty set");
  return eval(PointedState{belief, world}, f);
}

bool DirectSemantics::eval(const PointedState& at, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::top:
      return true;
    case FormulaKind::prop:
      return model_.holds(f.name(), at.world);
    case FormulaKind::negation:
      return !eval(at, f.operand());
    case FormulaKind::conjunction:
      return eval(at, f.left()) && eval(at, f.right());
    default:
      break;
  }

  const Key key{at, f.id()};
  if (auto it = truth_.find(key); it != truth_.end()) return it->second;

  bool result = true;
  if (f.kind() == FormulaKind::knowledge) {
    at.belief.for_each([&](StateId u) {
      if (result && !eval(PointedState{at.belief, u}, f.operand())) result = false;
    });
  } else {
    for (const auto& next : successors(at, f.program())) {
      if (!eval(next, f.operand())) {
        result = false;
        break;
      }
    }
  }
  truth_.emplace(key, result);
  return result;
}

std::vector<PointedState> DirectSemantics::successors(const PointedState& from,
                                                      const Program& p) {
  const Key key{from, p.id()};
  if (auto it = succ_.find(key); it != succ_.end()) return it->second;

  std::vector<PointedState> out;
  switch (p.kind()) {
    case ProgramKind::action: {
      const BitMatrix* r = model_.relation(p.name());
      if (r && r->row(from.world).any()) {
        const Belief next = update_belief(model_, from.belief, p.name());
        r->row(from.world).for_each([&](StateId t) { out.push_back({next, t}); });
      }
      break;
    }
    case ProgramKind::test:
      if (eval(from, p.formula())) out.push_back(from);
      break;
    case ProgramKind::sequence: {
      std::unordered_set<PointedState, PointedStateHash> seen;
      for (const auto& mid : successors(from, p.left()))
        for (const auto& end : successors(mid, p.right()))
          if (seen.insert(end).second) out.push_back(end);
      break;
    }
    case ProgramKind::choice: {
      std::unordered_set<PointedState, PointedStateHash> seen;
      for (const auto& end : successors(from, p.left()))
        if (seen.insert(end).second) out.push_back(end);
      for (const auto& end : successors(from, p.right()))
        if (seen.insert(end).second) out.push_back(end);
      break;
    }
    case ProgramKind::iteration: {
      // Least fixpoint: everything reachable by zero or more body steps.
      std::unordered_set<PointedState, PointedStateHash> seen{from};
      std::deque<PointedState> frontier{from};
      out.push_back(from);
      while (!frontier.empty()) {
        const PointedState cur = frontier.front();
        frontier.pop_front();
        for (const auto& next : successors(cur, p.body())) {
          if (seen.insert(next).second) {
            out.push_back(next);
            frontier.push_back(next);
          }
        }
      }
      break;
    }
  }
  succ_.emplace(key, out);
  return out;
}

bool sat(const UncertaintyMap& m, StateId s, const Formula& f) {
  if (s >= m.size() || !m.uncertainty().test(s))
    throw ContractError("point is not in the uncertainty set");
  DirectSemantics engine(m.model());
  return engine.holds(m.uncertainty(), s, f);
}

std::vector<Belief> reachable_beliefs(const KripkeModel& m, const Belief& start) {
  std::vector<Belief> out{start};
  std::unordered_set<Belief, StateSetHash> seen{start};
  const auto actions = m.actions();
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& a : actions) {
      Belief next = update_belief(m, out[i], a);
      if (next.any() && seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

PointedMapRelation program_rel(const UncertaintyMap& m, const Program& p) {
  PointedMapRelation rel;
  DirectSemantics engine(m.model());
  for (const auto& belief : reachable_beliefs(m.model(), m.uncertainty())) {
    belief.for_each([&](StateId s) {
      const PointedState from{belief, s};
      for (const auto& to : engine.successors(from, p)) rel.emplace(from, to);
    });
  }
  return rel;
}

}  // namespace epdl

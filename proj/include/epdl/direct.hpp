#pragma once

// Reference semantics on pointed uncertainty maps, by literal recursion:
// K quantifies over the current uncertainty set, an action moves the world
// along its edge and replaces the uncertainty set by its update. This is the
// ground truth the contextual and ETS engines are checked against.

#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "epdl/model.hpp"
#include "epdl/syntax.hpp"

namespace epdl {

/// The denotation of a program restricted to pointed maps over one model.
using PointedMapRelation = std::set<std::pair<PointedState, PointedState>>;

/// Memoising evaluator bound to one Kripke model. Memo tables are keyed by
/// formula node identity, so formulas passed in must outlive the evaluator.
class DirectSemantics {
 public:
  explicit DirectSemantics(const KripkeModel& model) : model_(model) {}

  /// (<model, belief>, world) |= f. The world must lie in the belief.
  bool holds(const Belief& belief, StateId world, const Formula& f);

  /// Every pointed map reachable from `from` through `p`.
  std::vector<PointedState> successors(const PointedState& from, const Program& p);

 private:
  struct Key {
    PointedState at;
    const void* node;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return PointedStateHash{}(k.at) ^ (std::hash<const void*>{}(k.node) << 1);
    }
  };

  bool eval(const PointedState& at, const Formula& f);

  const KripkeModel& model_;
  std::unordered_map<Key, bool, KeyHash> truth_;
  std::unordered_map<Key, std::vector<PointedState>, KeyHash> succ_;
};

/// M, s |= f. Throws ContractError when s is not in U.
bool sat(const UncertaintyMap& m, StateId s, const Formula& f);

/// [[p]] over all pointed maps (Γ, s) with Γ reachable from U by updates.
PointedMapRelation program_rel(const UncertaintyMap& m, const Program& p);

/// All beliefs reachable from `start` by single-action updates over every
/// action of the model, including `start`; empty results are dropped.
std::vector<Belief> reachable_beliefs(const KripkeModel& m, const Belief& start);

}  // namespace epdl

#pragma once

// Epistemic temporal structures over a Kripke model.
//
// A state is a world paired with a belief containing it. Action edges move
// the world along the base relation and replace the belief by its update;
// two states are epistemically related iff they share a belief. Only the
// beliefs reachable from the initial one are built unless `full` is asked
// for.

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "epdl/bits.hpp"
#include "epdl/model.hpp"
#include "epdl/syntax.hpp"

namespace epdl {

struct EtsState {
  StateId world = 0;
  std::size_t belief = 0;  // index into EtsModel::beliefs()
};

class EtsModel {
 public:
  std::size_t size() const { return states_.size(); }
  const std::vector<EtsState>& states() const { return states_; }
  const std::vector<Belief>& beliefs() const { return beliefs_; }
  const KripkeModel& base() const { return *base_; }

  std::optional<std::size_t> find(StateId world, const Belief& belief) const;

  /// nullptr if the action has no edges in this structure.
  const BitMatrix* relation(const Action& a) const;
  const std::map<Action, BitMatrix>& relations() const { return relations_; }

  /// ETS states whose belief is beliefs()[id].
  const StateSet& belief_class(std::size_t id) const { return classes_[id]; }
  StateSet truth_set(const std::string& p) const;

  /// "world@{b1,b2}"
  std::string state_name(std::size_t x) const;

 private:
  friend class EtsBuilder;

  const KripkeModel* base_ = nullptr;
  std::vector<EtsState> states_;
  std::vector<Belief> beliefs_;
  std::unordered_map<Belief, std::size_t, StateSetHash> belief_index_;
  std::vector<std::size_t> first_state_;  // per belief, index of its first ETS state
  std::vector<StateSet> classes_;
  std::map<Action, BitMatrix> relations_;
  std::map<std::string, StateSet> valuation_;
};

/// The bullet structure over beliefs reachable from `u0` by every model
/// action (empty updates dropped). With `full`, every nonempty subset of the
/// states is a belief. The model must outlive the result.
EtsModel build_bullet(const KripkeModel& m, const Belief& u0, bool full = false);

/// The guarded structure: only actions in `b`, and an a-edge leaves a belief
/// only when every world in it has an a-successor. Throws ContractError if
/// `b` is empty.
EtsModel build_circ(const KripkeModel& m, const Belief& u0, const std::vector<Action>& b);

/// Global labeling: membership of `x` in the set of states satisfying `f`.
bool ets_check(const EtsModel& e, std::size_t x, const Formula& f);

/// The relation a program denotes over the ETS states.
BitMatrix ets_relation(const EtsModel& e, const Program& p);

/// Every ETS state satisfying `f`.
StateSet ets_label(const EtsModel& e, const Formula& f);

/// M, s |= f through build_bullet; s must lie in U (ContractError otherwise).
bool check_full(const UncertaintyMap& m, StateId s, const Formula& f);

/// The structure as a model file; the initial belief class becomes U.
std::string dump_ets(const EtsModel& e);

}  // namespace epdl

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "epdl/bits.hpp"
#include "epdl/syntax.hpp"

namespace epdl {

using StateId = std::size_t;
/// An uncertainty set U (or any belief Γ): states the agent cannot tell apart.
/// The empty set only appears as the result of an update with no successor.
using Belief = StateSet;

/// Finite multimodal Kripke model with dense adjacency matrices.
///
/// Actions without a matrix denote the empty relation.
class KripkeModel {
 public:
  explicit KripkeModel(std::vector<std::string> state_names);

  std::size_t size() const { return names_.size(); }
  const std::string& state_name(StateId s) const { return names_.at(s); }
  const std::vector<std::string>& state_names() const { return names_; }
  std::optional<StateId> find_state(std::string_view name) const;
  /// Throws ModelError naming the state if it is not declared.
  StateId state_id(std::string_view name) const;

  void add_edge(const Action& a, StateId from, StateId to);
  void remove_edge(const Action& a, StateId from, StateId to);
  void set_true(const std::string& p, StateId s);
  /// Ensures `a` is listed even when it has no edges.
  void declare_action(const Action& a);

  /// nullptr for actions with no edges declared.
  const BitMatrix* relation(const Action& a) const;
  bool holds(const std::string& p, StateId s) const;
  /// Empty set for unknown propositions.
  StateSet truth_set(const std::string& p) const;

  std::vector<Action> actions() const;
  std::vector<std::string> propositions() const;
  const std::map<Action, BitMatrix>& relations() const { return relations_; }
  const std::map<std::string, StateSet>& valuation() const { return valuation_; }

  Belief empty_belief() const { return Belief(size()); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, StateId> index_;
  std::map<Action, BitMatrix> relations_;
  std::map<std::string, StateSet> valuation_;
};

/// A Kripke model together with a nonempty uncertainty set.
class UncertaintyMap {
 public:
  /// Throws ModelError if `uncertainty` is empty or sized for another model.
  UncertaintyMap(KripkeModel model, Belief uncertainty);

  const KripkeModel& model() const { return model_; }
  const Belief& uncertainty() const { return uncertainty_; }
  std::size_t size() const { return model_.size(); }

  /// The same Kripke model with another uncertainty set.
  UncertaintyMap with_uncertainty(Belief uncertainty) const;

 private:
  KripkeModel model_;
  Belief uncertainty_;
};

/// A world paired with the belief it is evaluated under: the pointed map
/// (<N, belief>, world) over a fixed Kripke model N.
struct PointedState {
  Belief belief;
  StateId world = 0;

  friend bool operator==(const PointedState&, const PointedState&) = default;
  friend auto operator<=>(const PointedState&, const PointedState&) = default;
};

struct PointedStateHash {
  std::size_t operator()(const PointedState& p) const {
    return p.belief.hash() * 31 + p.world;
  }
};

/// U|^a = { r' | exists r in U. r ->a r' }; empty for unknown actions.
Belief update_belief(const KripkeModel& m, const Belief& u, const Action& a);
/// Left fold of update_belief; the empty sequence returns `u`.
Belief update_belief_seq(const KripkeModel& m, const Belief& u, const ActionSequence& seq);

/// Every world in `u` has an a-successor (the guard K<a>T).
bool executable_everywhere(const KripkeModel& m, const Belief& u, const Action& a);

/// Builds a belief from state names; throws ModelError for unknown names.
Belief make_belief(const KripkeModel& m, const std::vector<std::string>& names);
std::string belief_to_string(const KripkeModel& m, const Belief& b);

/// Reads the JSON model format:
///   { "states": [...], "valuation": {state: [props]},
///     "relations": {action: [[from, to], ...]}, "uncertainty": [...] }
UncertaintyMap load_model(std::string_view text);
UncertaintyMap load_model_file(const std::string& path);
std::string save_model(const UncertaintyMap& m);

}  // namespace epdl

#pragma once

// Randomised soundness checks for the axiom system: random uncertainty maps,
// random schema instances, and a counterexample search.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "epdl/model.hpp"
#include "epdl/syntax.hpp"

namespace epdl {

/// States s1..sn, actions a, b, c, ..., propositions p, q, r, t, p5, ...
/// Each edge and each (state, proposition) pair is present with probability
/// `edge_density` resp. 1/2; U is a uniformly random nonempty subset.
UncertaintyMap random_model(std::size_t n_states, std::size_t n_actions, std::size_t n_props,
                            double edge_density, std::uint64_t seed);

struct FormulaOptions {
  std::size_t depth = 3;
  std::vector<std::string> props{"p", "q"};
  std::vector<Action> actions{"a", "b"};
  bool programs = true;
  /// Maximum nesting of * inside programs; 0 keeps formulas star-free.
  std::size_t star_depth = 0;
};

Formula random_formula(std::mt19937_64& rng, const FormulaOptions& opt);
Program random_program(std::mt19937_64& rng, const FormulaOptions& opt, std::size_t depth);

/// Soundness schemas: TAUT DISTK DIST_a T 4 5 PR_a NM_a.
std::vector<std::string> sela_schemas();

/// Further validities checked by the suite: SEQ CHOICE TEST (program
/// reductions), STRONG_a (K[[a]]f <-> <?K<a>T;a>Kf) and GUARDED_PLAN (its n-step
/// form).
std::vector<std::string> derived_schemas();

/// Substitutes `p`, `q` (and for TAUT a third letter `r`) and the action into
/// the named schema. Also accepts OBS_a, the observability axiom that does
/// not hold here. Throws ContractError for unknown names.
Formula instantiate_schema(const std::string& name, const Formula& p, const Formula& q,
                           const Formula& r, const Action& a, std::mt19937_64& rng);

struct Counterexample {
  UncertaintyMap map;
  StateId point;
  Formula formula;
};

/// First point of some model's U where `f` fails (direct engine), after
/// greedily deleting edges, states, and uncertainty that keep it failing.
std::optional<Counterexample> check_validity(const Formula& f,
                                             const std::vector<UncertaintyMap>& models);

/// Smaller model on which `f` still fails at the point.
Counterexample minimize(const Counterexample& c);

struct SchemaResult {
  std::string schema;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<Counterexample> counterexample;
};

struct SuiteReport {
  std::vector<SchemaResult> results;
  bool clean() const;
};

/// `trials` random instances per schema, each on its own random model.
/// With `schema` set, only that one (which may be OBS_a) is run.
SuiteReport soundness_suite(std::uint64_t seed, std::size_t trials,
                            const std::optional<std::string>& schema = std::nullopt);

}  // namespace epdl

#pragma once

// Context-dependent model checking for the star-free fragment.
//
// The model stays fixed; the action context σ travels with the evaluation and
// K looks at U|^σ. A diamond <π>φ is decided by enumerating candidate
// computation sequences over Sig(π) in length-then-lexicographic order up to
// length |π|, keeping those in L(π), and composing their relation matrices.

#include <optional>
#include <span>

#include "epdl/bits.hpp"
#include "epdl/model.hpp"
#include "epdl/syntax.hpp"

namespace epdl {

/// U|^σ by repeated row-vector times adjacency-matrix products.
Belief cnu(const KripkeModel& m, const Belief& u, const ActionSequence& sigma);

/// Matrix of the context relation ->ω_σ.
BitMatrix pw(const UncertaintyMap& m, const ComputationSequence& w, const ActionSequence& sigma);

/// M, s ||-_σ f. Throws StarFreeError if f contains a star.
bool mc(const UncertaintyMap& m, StateId s, const ActionSequence& sigma, const Formula& f);

/// M, s ||- f, i.e. context ε; s must lie in U (ContractError otherwise).
bool check_contextual(const UncertaintyMap& m, StateId s, const Formula& f);

/// Successor of `w` in length-then-lexicographic order over `sig`: the last
/// position is incremented like a base-|sig| digit, and on overflow of every
/// position the length grows by one with all letters reset to sig[0].
/// Returns nothing if the successor would be longer than `max_length`.
std::optional<ComputationSequence> next_sequence(const ComputationSequence& w,
                                                 std::span<const SequenceItem> sig,
                                                 std::size_t max_length = static_cast<std::size_t>(-1));

}  // namespace epdl

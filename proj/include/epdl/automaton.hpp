#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "epdl/bits.hpp"
#include "epdl/syntax.hpp"

namespace epdl {

/// NFA over the alphabet Sig(p) recognising the computation sequences L(p).
///
/// Built inductively (Thompson style) and then epsilon-free: every stored
/// state set is already epsilon-closed. Test letters are opaque and compare
/// by structural formula equality.
class ProgramAutomaton {
 public:
  explicit ProgramAutomaton(const Program& p);

  const std::vector<SequenceItem>& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return closure_.size(); }

  std::optional<std::size_t> letter_index(const SequenceItem& item) const;

  StateSet start() const { return closure_[initial_]; }
  StateSet step(const StateSet& current, std::size_t letter) const;
  bool accepting(const StateSet& current) const { return current.test(final_); }

  bool accepts(std::span<const SequenceItem> word) const;
  bool accepts_indices(std::span<const std::size_t> word) const;

 private:
  struct Fragment {
    std::size_t entry;
    std::size_t exit;
  };

  std::size_t add_state();
  Fragment build(const Program& p);

  std::vector<SequenceItem> alphabet_;
  std::vector<std::vector<std::size_t>> epsilon_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> moves_;  // (letter, target)
  std::vector<StateSet> closure_;
  std::size_t initial_ = 0;
  std::size_t final_ = 0;
};

/// w in L(p).
bool memb_check(const ComputationSequence& w, const Program& p);

}  // namespace epdl

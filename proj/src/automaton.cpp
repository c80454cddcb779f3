#include "epdl/automaton.hpp"

#include <algorithm>

namespace epdl {

ProgramAutomaton::ProgramAutomaton(const Program& p) : alphabet_(language_alphabet(p)) {
  const Fragment f = build(p);
  initial_ = f.entry;
  final_ = f.exit;

  const std::size_t n = epsilon_.size();
  closure_.assign(n, StateSet(n));
  for (std::size_t q = 0; q < n; ++q) {
    std::vector<std::size_t> stack{q};
    closure_[q].set(q);
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      for (std::size_t next : epsilon_[cur]) {
        if (!closure_[q].test(next)) {
          closure_[q].set(next);
          stack.push_back(next);
        }
      }
    }
  }
}

std::size_t ProgramAutomaton::add_state() {
  epsilon_.emplace_back();
  moves_.emplace_back();
  return epsilon_.size() - 1;
}

ProgramAutomaton::Fragment ProgramAutomaton::build(const Program& p) {
  switch (p.kind()) {
    case ProgramKind::action:
    case ProgramKind::test: {
      const SequenceItem item = p.kind() == ProgramKind::action
                                    ? SequenceItem::action(p.name())
                                    : SequenceItem::check(p.formula());
      const std::size_t letter = *letter_index(item);
      const std::size_t in = add_state();
      const std::size_t out = add_state();
      moves_[in].emplace_back(letter, out);
      return {in, out};
    }
    case ProgramKind::sequence: {
      const Fragment a = build(p.left());
      const Fragment b = build(p.right());
      epsilon_[a.exit].push_back(b.entry);
      return {a.entry, b.exit};
    }
    case ProgramKind::choice: {
      const Fragment a = build(p.left());
      const Fragment b = build(p.right());
      const std::size_t in = add_state();
      const std::size_t out = add_state();
      epsilon_[in].push_back(a.entry);
      epsilon_[in].push_back(b.entry);
      epsilon_[a.exit].push_back(out);
      epsilon_[b.exit].push_back(out);
      return {in, out};
    }
    case ProgramKind::iteration: {
      const Fragment a = build(p.body());
      const std::size_t in = add_state();
      const std::size_t out = add_state();
      epsilon_[in].push_back(a.entry);
      epsilon_[in].push_back(out);
      epsilon_[a.exit].push_back(a.entry);
      epsilon_[a.exit].push_back(out);
      return {in, out};
    }
  }
  return {0, 0};
}

std::optional<std::size_t> ProgramAutomaton::letter_index(const SequenceItem& item) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), item);
  if (it == alphabet_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet_.begin());
}

StateSet ProgramAutomaton::step(const StateSet& current, std::size_t letter) const {
  StateSet next(closure_.size());
  current.for_each([&](std::size_t q) {
    for (const auto& [l, target] : moves_[q])
      if (l == letter) next |= closure_[target];
  });
  return next;
}

bool ProgramAutomaton::accepts(std::span<const SequenceItem> word) const {
  StateSet cur = start();
  for (const auto& item : word) {
    const auto letter = letter_index(item);
    if (!letter) return false;
    cur = step(cur, *letter);
    if (cur.none()) return false;
  }
  return accepting(cur);
}

bool ProgramAutomaton::accepts_indices(std::span<const std::size_t> word) const {
  StateSet cur = start();
  for (std::size_t letter : word) {
    cur = step(cur, letter);
    if (cur.none()) return false;
  }
  return accepting(cur);
}

bool memb_check(const ComputationSequence& w, const Program& p) {
  return ProgramAutomaton(p).accepts(w);
}

}  // namespace epdl

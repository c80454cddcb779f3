#include "epdl/contextual.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <unordered_map>

#include "epdl/automaton.hpp"
#include "epdl/errors.hpp"
#include "epdl/kernels.hpp"

namespace epdl {

namespace {

/// Moves `w` to the first sequence, in length-then-lex order, that differs
/// from it at or before `pos`. Everything after `pos` resets to letter 0; an
/// overflow past position 0 grows the length by one.
void advance_at(std::vector<std::size_t>& w, std::size_t pos, std::size_t base) {
  std::fill(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end(), 0);
  std::size_t j = pos;
  while (true) {
    if (++w[j] < base) return;
    w[j] = 0;
    if (j == 0) {
      w.assign(w.size() + 1, 0);
      return;
    }
    --j;
  }
}

class ContextualChecker {
 public:
  ContextualChecker(const UncertaintyMap& m, std::size_t depth_limit)
      : map_(m), depth_limit_(depth_limit) {}

  bool mc(StateId s, const ActionSequence& ctx, const Formula& f) {
    DepthGuard guard(*this);
    switch (f.kind()) {
      case FormulaKind::top:
        return true;
      case FormulaKind::prop:
        return map_.model().holds(f.name(), s);
      case FormulaKind::negation:
        return !mc(s, ctx, f.operand());
      case FormulaKind::conjunction:
        return mc(s, ctx, f.left()) && mc(s, ctx, f.right());
      case FormulaKind::knowledge: {
        const Belief current = cnu(map_.model(), map_.uncertainty(), ctx);
        bool all = true;
        current.for_each([&](StateId v) {
          if (all && !mc(v, ctx, f.operand())) all = false;
        });
        return all;
      }
      case FormulaKind::box:
        return !exists_witness(s, ctx, f.program(), f.operand(), false);
    }
    return false;
  }

  BitMatrix pw(std::span<const SequenceItem> w, const ActionSequence& ctx) {
    const std::size_t n = map_.size();
    const KripkeModel& model = map_.model();
    BitMatrix acc = BitMatrix::identity(n);
    ActionSequence local = ctx;
    for (const auto& item : w) {
      if (item.is_test()) {
        StateSet live(n);
        for (std::size_t i = 0; i < n; ++i) live |= acc.row(i);
        StateSet keep(n);
        live.for_each([&](StateId t) {
          if (mc(t, local, item.test_formula())) keep.set(t);
        });
        acc.mask_columns(keep);
      } else {
        const BitMatrix* r = model.relation(item.action_name());
        acc = r ? kernels::multiply(acc, *r) : BitMatrix(n, n);
        local.push_back(item.action_name());
      }
    }
    return acc;
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(ContextualChecker& c) : checker(c) {
      if (++checker.depth_ > checker.depth_limit_)
        throw std::logic_error("contextual recursion deeper than the formula size");
    }
    ~DepthGuard() { --checker.depth_; }
    ContextualChecker& checker;
  };

  const ProgramAutomaton& automaton(const Program& p) {
    auto it = automata_.find(p.id());
    if (it == automata_.end())
      it = automata_.emplace(p.id(), std::make_unique<ProgramAutomaton>(p)).first;
    return *it->second;
  }

  // Is there ω in L(p) and t with s ->ω_ctx t and mc(t, ctx·r(ω), body) == want?
  bool exists_witness(StateId s, const ActionSequence& ctx, const Program& p,
                      const Formula& body, bool want) {
    const ProgramAutomaton& aut = automaton(p);
    const auto& sig = aut.alphabet();
    const std::size_t bound = p.size();
    std::vector<std::size_t> w{0};
    ComputationSequence omega;
    while (w.size() <= bound) {
      StateSet cur = aut.start();
      std::size_t dead = w.size();
      for (std::size_t j = 0; j < w.size(); ++j) {
        cur = aut.step(cur, w[j]);
        if (cur.none()) {
          dead = j;
          break;
        }
      }
      if (dead < w.size()) {
        // No extension of this prefix is in L(p); skip all of them at this length.
        advance_at(w, dead, sig.size());
        continue;
      }
      if (aut.accepting(cur)) {
        omega.clear();
        for (std::size_t letter : w) omega.push_back(sig[letter]);
        const BitMatrix rel = pw(omega, ctx);
        if (rel.row(s).any()) {
          ActionSequence next_ctx = ctx;
          for (const auto& item : omega)
            if (item.is_action()) next_ctx.push_back(item.action_name());
          bool found = false;
          rel.row(s).for_each([&](StateId t) {
            if (!found && mc(t, next_ctx, body) == want) found = true;
          });
          if (found) return true;
        }
      }
      advance_at(w, w.size() - 1, sig.size());
    }
    return false;
  }

  const UncertaintyMap& map_;
  std::size_t depth_limit_;
  std::size_t depth_ = 0;
  std::unordered_map<const void*, std::unique_ptr<ProgramAutomaton>> automata_;
};

}  // namespace

Belief cnu(const KripkeModel& m, const Belief& u, const ActionSequence& sigma) {
  Belief a = u;
  for (const auto& act_name : sigma) {
    const BitMatrix* r = m.relation(act_name);
    a = r ? kernels::image(a, *r) : Belief(m.size());
  }
  return a;
}

BitMatrix pw(const UncertaintyMap& m, const ComputationSequence& w, const ActionSequence& sigma) {
  std::size_t limit = 1;
  for (const auto& item : w) {
    if (item.is_test()) {
      if (!item.test_formula().star_free()) throw StarFreeError();
      limit += item.test_formula().size();
    }
  }
  ContextualChecker checker(m, limit);
  return checker.pw(w, sigma);
}

bool mc(const UncertaintyMap& m, StateId s, const ActionSequence& sigma, const Formula& f) {
  if (!f.star_free()) throw StarFreeError();
  if (s >= m.size()) throw ContractError("state out of range");
  ContextualChecker checker(m, f.size());
  return checker.mc(s, sigma, f);
}

bool check_contextual(const UncertaintyMap& m, StateId s, const Formula& f) {
  if (s >= m.size() || !m.uncertainty().test(s))
    throw ContractError("point is not in the uncertainty set");
  return mc(m, s, {}, f);
}

std::optional<ComputationSequence> next_sequence(const ComputationSequence& w,
                                                 std::span<const SequenceItem> sig,
                                                 std::size_t max_length) {
  if (sig.empty()) return std::nullopt;
  std::vector<std::size_t> digits;
  digits.reserve(w.size());
  for (const auto& item : w) {
    auto it = std::find(sig.begin(), sig.end(), item);
    if (it == sig.end()) throw ContractError("sequence letter outside the alphabet");
    digits.push_back(static_cast<std::size_t>(it - sig.begin()));
  }
  if (digits.empty()) {
    digits.push_back(0);
  } else {
    advance_at(digits, digits.size() - 1, sig.size());
  }
  if (digits.size() > max_length) return std::nullopt;
  ComputationSequence out;
  for (std::size_t d : digits) out.push_back(sig[d]);
  return out;
}

}  // namespace epdl

#include "epdl/ets.hpp"

#include <json.hpp>

#include "epdl/errors.hpp"
#include "epdl/kernels.hpp"

namespace epdl {

std::optional<std::size_t> EtsModel::find(StateId world, const Belief& belief) const {
  auto it = belief_index_.find(belief);
  if (it == belief_index_.end() || world >= belief.universe() || !belief.test(world))
    return std::nullopt;
  std::size_t x = first_state_[it->second];
  while (states_[x].world != world) ++x;
  return x;
}

const BitMatrix* EtsModel::relation(const Action& a) const {
  auto it = relations_.find(a);
  return it == relations_.end() ? nullptr : &it->second;
}

StateSet EtsModel::truth_set(const std::string& p) const {
  auto it = valuation_.find(p);
  return it == valuation_.end() ? StateSet(size()) : it->second;
}

std::string EtsModel::state_name(std::size_t x) const {
  const EtsState& st = states_[x];
  return base_->state_name(st.world) + "@" + belief_to_string(*base_, beliefs_[st.belief]);
}

class EtsBuilder {
 public:
  EtsBuilder(const KripkeModel& m, std::vector<Action> actions, bool guarded)
      : m_(m), actions_(std::move(actions)), guarded_(guarded) {
    e_.base_ = &m;
  }

  std::size_t intern(const Belief& b) {
    auto [it, inserted] = e_.belief_index_.emplace(b, e_.beliefs_.size());
    if (inserted) e_.beliefs_.push_back(b);
    return it->second;
  }

  EtsModel build(const Belief& u0, bool full) {
    if (u0.none()) throw ContractError("initial belief must be nonempty");
    intern(u0);
    if (full) {
      const std::size_t n = m_.size();
      if (n >= 24) throw ContractError("full construction is limited to small models");
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Belief b(n);
        for (std::size_t i = 0; i < n; ++i)
          if ((mask >> i) & 1u) b.set(i);
        intern(b);
      }
    }

    // Belief-level transitions, discovered breadth first.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> moves;  // (action, target)
    for (std::size_t g = 0; g < e_.beliefs_.size(); ++g) {
      moves.emplace_back();
      for (std::size_t ai = 0; ai < actions_.size(); ++ai) {
        const Belief cur = e_.beliefs_[g];
        if (guarded_ && !executable_everywhere(m_, cur, actions_[ai])) continue;
        const Belief next = update_belief(m_, cur, actions_[ai]);
        if (next.none()) continue;
        moves[g].emplace_back(ai, intern(next));
      }
    }

    for (std::size_t g = 0; g < e_.beliefs_.size(); ++g) {
      e_.first_state_.push_back(e_.states_.size());
      e_.beliefs_[g].for_each([&](StateId s) { e_.states_.push_back({s, g}); });
    }
    const std::size_t n = e_.states_.size();

    e_.classes_.assign(e_.beliefs_.size(), StateSet(n));
    for (std::size_t x = 0; x < n; ++x) e_.classes_[e_.states_[x].belief].set(x);

    for (const auto& [p, set] : m_.valuation()) {
      StateSet label(n);
      for (std::size_t x = 0; x < n; ++x)
        if (set.test(e_.states_[x].world)) label.set(x);
      e_.valuation_.emplace(p, std::move(label));
    }

    for (std::size_t g = 0; g < moves.size(); ++g) {
      for (const auto& [ai, h] : moves[g]) {
        const BitMatrix& r = *m_.relation(actions_[ai]);
        auto [it, _] = e_.relations_.try_emplace(actions_[ai], n, n);
        BitMatrix& out = it->second;
        const Belief& target = e_.beliefs_[h];
        std::size_t x = e_.first_state_[g];
        e_.beliefs_[g].for_each([&](StateId s) {
          r.row(s).for_each([&](StateId t) { out.set(x, *e_.find(t, target)); });
          ++x;
        });
      }
    }
    return std::move(e_);
  }

 private:
  const KripkeModel& m_;
  std::vector<Action> actions_;
  bool guarded_;
  EtsModel e_;
};

EtsModel build_bullet(const KripkeModel& m, const Belief& u0, bool full) {
  return EtsBuilder(m, m.actions(), false).build(u0, full);
}

EtsModel build_circ(const KripkeModel& m, const Belief& u0, const std::vector<Action>& b) {
  if (b.empty()) throw ContractError("action set must be nonempty");
  return EtsBuilder(m, b, true).build(u0, false);
}

namespace {

class Labeler {
 public:
  explicit Labeler(const EtsModel& e) : e_(e) {}

  const StateSet& label(const Formula& f) {
    if (auto it = formulas_.find(f.id()); it != formulas_.end()) return it->second;
    const std::size_t n = e_.size();
    StateSet out(n);
    switch (f.kind()) {
      case FormulaKind::top:
        out = StateSet::full(n);
        break;
      case FormulaKind::prop:
        out = e_.truth_set(f.name());
        break;
      case FormulaKind::negation:
        out = label(f.operand()).complement();
        break;
      case FormulaKind::conjunction:
        out = label(f.left()) & label(f.right());
        break;
      case FormulaKind::knowledge: {
        const StateSet inner = label(f.operand());
        for (std::size_t g = 0; g < e_.beliefs().size(); ++g)
          if (e_.belief_class(g).is_subset_of(inner)) out |= e_.belief_class(g);
        break;
      }
      case FormulaKind::box:
        out = kernels::preimage(relation(f.program()), label(f.operand()).complement())
                  .complement();
        break;
    }
    return formulas_.emplace(f.id(), std::move(out)).first->second;
  }

  const BitMatrix& relation(const Program& p) {
    if (auto it = programs_.find(p.id()); it != programs_.end()) return it->second;
    const std::size_t n = e_.size();
    BitMatrix out(n, n);
    switch (p.kind()) {
      case ProgramKind::action:
        if (const BitMatrix* r = e_.relation(p.name())) out = *r;
        break;
      case ProgramKind::test:
        out = BitMatrix::diagonal(label(p.formula()));
        break;
      case ProgramKind::sequence:
        out = kernels::multiply(relation(p.left()), relation(p.right()));
        break;
      case ProgramKind::choice:
        out = relation(p.left());
        out |= relation(p.right());
        break;
      case ProgramKind::iteration:
        out = kernels::star(relation(p.body()));
        break;
    }
    return programs_.emplace(p.id(), std::move(out)).first->second;
  }

 private:
  const EtsModel& e_;
  std::unordered_map<const void*, StateSet> formulas_;
  std::unordered_map<const void*, BitMatrix> programs_;
};

}  // namespace

BitMatrix ets_relation(const EtsModel& e, const Program& p) {
  Labeler l(e);
  return l.relation(p);
}

StateSet ets_label(const EtsModel& e, const Formula& f) {
  Labeler l(e);
  return l.label(f);
}

bool ets_check(const EtsModel& e, std::size_t x, const Formula& f) {
  if (x >= e.size()) throw ContractError("ETS state out of range");
  return ets_label(e, f).test(x);
}

bool check_full(const UncertaintyMap& m, StateId s, const Formula& f) {
  if (s >= m.size() || !m.uncertainty().test(s))
    throw ContractError("point is not in the uncertainty set");
  const EtsModel e = build_bullet(m.model(), m.uncertainty());
  return ets_check(e, *e.find(s, m.uncertainty()), f);
}

std::string dump_ets(const EtsModel& e) {
  using nlohmann::json;
  json doc;
  json names = json::array();
  for (std::size_t x = 0; x < e.size(); ++x) names.push_back(e.state_name(x));
  doc["states"] = names;
  json val = json::object();
  for (std::size_t x = 0; x < e.size(); ++x) {
    json props = json::array();
    for (const auto& [p, set] : e.base().valuation())
      if (set.test(e.states()[x].world)) props.push_back(p);
    if (!props.empty()) val[e.state_name(x)] = props;
  }
  doc["valuation"] = val;
  json rel = json::object();
  for (const auto& [a, mat] : e.relations()) {
    json edges = json::array();
    for (std::size_t x = 0; x < e.size(); ++x)
      mat.row(x).for_each([&](std::size_t y) {
        edges.push_back({e.state_name(x), e.state_name(y)});
      });
    rel[a] = edges;
  }
  doc["relations"] = rel;
  json u = json::array();
  e.belief_class(0).for_each([&](std::size_t x) { u.push_back(e.state_name(x)); });
  doc["uncertainty"] = u;
  return doc.dump(2);
}

}  // namespace epdl

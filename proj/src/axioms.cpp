#include "epdl/axioms.hpp"

#include <algorithm>

#include "epdl/direct.hpp"
#include "epdl/errors.hpp"

namespace epdl {

UncertaintyMap random_model(std::size_t n_states, std::size_t n_actions, std::size_t n_props,
                            double edge_density, std::uint64_t seed) {
  if (n_states == 0) throw ContractError("random model needs at least one state");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(std::clamp(edge_density, 0.0, 1.0));
  std::bernoulli_distribution coin(0.5);

  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n_states; ++i) names.push_back("s" + std::to_string(i));
  KripkeModel m(std::move(names));

  static const char* const kProps[] = {"p", "q", "r", "t"};
  for (std::size_t k = 0; k < n_props; ++k) {
    const std::string p = k < 4 ? kProps[k] : "p" + std::to_string(k + 1);
    for (StateId s = 0; s < n_states; ++s)
      if (coin(rng)) m.set_true(p, s);
  }
  for (std::size_t k = 0; k < n_actions; ++k) {
    const Action a(1, static_cast<char>('a' + k));
    m.declare_action(a);
    for (StateId s = 0; s < n_states; ++s)
      for (StateId t = 0; t < n_states; ++t)
        if (edge(rng)) m.add_edge(a, s, t);
  }

  Belief u(n_states);
  while (u.none())
    for (StateId s = 0; s < n_states; ++s)
      if (coin(rng)) u.set(s);
  return UncertaintyMap(std::move(m), std::move(u));
}

namespace {

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::size_t roll(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Formula atom(std::mt19937_64& rng, const FormulaOptions& opt) {
  if (opt.props.empty() || roll(rng, 6) == 0) return top();
  return prop(pick(rng, opt.props));
}

}  // namespace

Program random_program(std::mt19937_64& rng, const FormulaOptions& opt, std::size_t depth) {
  if (depth == 0 || opt.actions.empty()) {
    if (opt.actions.empty()) return test(atom(rng, opt));
    return act(pick(rng, opt.actions));
  }
  switch (roll(rng, opt.star_depth > 0 ? 6 : 5)) {
    case 0:
      return act(pick(rng, opt.actions));
    case 1: {
      FormulaOptions inner = opt;
      inner.depth = depth - 1;
      return test(random_formula(rng, inner));
    }
    case 2:
      return seq(random_program(rng, opt, depth - 1), random_program(rng, opt, depth - 1));
    case 3:
      return choice(random_program(rng, opt, depth - 1), random_program(rng, opt, depth - 1));
    case 4:
      return act(pick(rng, opt.actions));
    default: {
      FormulaOptions inner = opt;
      inner.star_depth = opt.star_depth - 1;
      return star(random_program(rng, inner, depth - 1));
    }
  }
}

Formula random_formula(std::mt19937_64& rng, const FormulaOptions& opt) {
  if (opt.depth == 0) return atom(rng, opt);
  FormulaOptions sub = opt;
  sub.depth = opt.depth - 1;
  switch (roll(rng, opt.programs ? 6 : 5)) {
    case 0:
      return atom(rng, opt);
    case 1:
      return neg(random_formula(rng, sub));
    case 2:
      return conj(random_formula(rng, sub), random_formula(rng, sub));
    case 3:
      return know(random_formula(rng, sub));
    case 4:
      return disj(random_formula(rng, sub), random_formula(rng, sub));
    default: {
      const Program pi = random_program(rng, sub, std::min<std::size_t>(opt.depth, 2));
      return box(pi, random_formula(rng, sub));
    }
  }
}

std::vector<std::string> sela_schemas() {
  return {"TAUT", "DISTK", "DIST_a", "T", "4", "5", "PR_a", "NM_a"};
}

std::vector<std::string> derived_schemas() { return {"SEQ", "CHOICE", "TEST", "STRONG_a", "GUARDED_PLAN"}; }

Formula instantiate_schema(const std::string& name, const Formula& p, const Formula& q,
                           const Formula& r, const Action& a, std::mt19937_64& rng) {
  const Program pa = act(a);
  if (name == "TAUT") {
    switch (roll(rng, 6)) {
      case 0:
        return implies(p, implies(q, p));
      case 1:
        return implies(implies(p, implies(q, r)), implies(implies(p, q), implies(p, r)));
      case 2:
        return implies(implies(neg(p), neg(q)), implies(q, p));
      case 3:
        return disj(p, neg(p));
      case 4:
        return implies(conj(p, q), p);
      default:
        return iff(neg(conj(p, q)), disj(neg(p), neg(q)));
    }
  }
  if (name == "DISTK") return implies(know(implies(p, q)), implies(know(p), know(q)));
  if (name == "DIST_a") return implies(box(pa, implies(p, q)), implies(box(pa, p), box(pa, q)));
  if (name == "T") return implies(know(p), p);
  if (name == "4") return implies(know(p), know(know(p)));
  if (name == "5") return implies(neg(know(p)), know(neg(know(p))));
  if (name == "PR_a") return implies(know(box(pa, p)), box(pa, know(p)));
  if (name == "NM_a") return implies(diamond(pa, know(p)), know(box(pa, p)));
  if (name == "OBS_a") return disj(know(diamond(pa, top())), know(neg(diamond(pa, top()))));

  FormulaOptions po;
  po.props = {"p", "q"};
  po.actions = {a, a == "a" ? "b" : "a"};
  if (name == "SEQ") {
    const Program x = random_program(rng, po, 2), y = random_program(rng, po, 2);
    return iff(diamond(seq(x, y), p), diamond(x, diamond(y, p)));
  }
  if (name == "CHOICE") {
    const Program x = random_program(rng, po, 2), y = random_program(rng, po, 2);
    return iff(box(choice(x, y), p), conj(box(x, p), box(y, p)));
  }
  if (name == "TEST") return iff(box(test(q), p), implies(q, p));
  if (name == "STRONG_a") return iff(know(strong(pa, p)), build_guarded_plan_formula({a}, p));
  if (name == "GUARDED_PLAN") {
    ActionSequence plan;
    for (std::size_t i = roll(rng, 4); i > 0; --i) plan.push_back(pick(rng, po.actions));
    return iff(build_plan_formula(plan, p), build_guarded_plan_formula(plan, p));
  }
  throw ContractError("unknown schema '" + name + "'");
}

namespace {

bool fails(const UncertaintyMap& m, StateId s, const Formula& f) { return !sat(m, s, f); }

// The same model without state `drop`; ids above it shift down by one.
UncertaintyMap without_state(const UncertaintyMap& um, StateId drop) {
  const KripkeModel& m = um.model();
  std::vector<std::string> names;
  for (StateId s = 0; s < m.size(); ++s)
    if (s != drop) names.push_back(m.state_name(s));
  KripkeModel out(std::move(names));
  const auto map = [drop](StateId s) { return s > drop ? s - 1 : s; };
  for (const auto& [p, set] : m.valuation())
    set.for_each([&](StateId s) {
      if (s != drop) out.set_true(p, map(s));
    });
  for (const auto& [a, mat] : m.relations()) {
    out.declare_action(a);
    for (StateId s = 0; s < m.size(); ++s)
      mat.row(s).for_each([&](StateId t) {
        if (s != drop && t != drop) out.add_edge(a, map(s), map(t));
      });
  }
  Belief u(out.size());
  um.uncertainty().for_each([&](StateId s) {
    if (s != drop) u.set(map(s));
  });
  return UncertaintyMap(std::move(out), std::move(u));
}

}  // namespace

Counterexample minimize(const Counterexample& c) {
  Counterexample best = c;
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId s = 0; s < best.map.size() && best.map.size() > 1; ++s) {
      if (s == best.point) continue;
      UncertaintyMap smaller = without_state(best.map, s);
      const StateId point = best.point > s ? best.point - 1 : best.point;
      if (fails(smaller, point, best.formula)) {
        best = Counterexample{std::move(smaller), point, best.formula};
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (StateId s : best.map.uncertainty().members()) {
      if (s == best.point) continue;
      Belief u = best.map.uncertainty();
      u.reset(s);
      UncertaintyMap smaller = best.map.with_uncertainty(std::move(u));
      if (fails(smaller, best.point, best.formula)) {
        best.map = std::move(smaller);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (const auto& [a, mat] : best.map.model().relations()) {
      for (StateId s = 0; !changed && s < mat.rows(); ++s) {
        for (StateId t : mat.row(s).members()) {
          KripkeModel m = best.map.model();
          m.remove_edge(a, s, t);
          UncertaintyMap smaller(std::move(m), best.map.uncertainty());
          if (fails(smaller, best.point, best.formula)) {
            best.map = std::move(smaller);
            changed = true;
            break;
          }
        }
      }
      if (changed) break;
    }
  }
  return best;
}

std::optional<Counterexample> check_validity(const Formula& f,
                                             const std::vector<UncertaintyMap>& models) {
  for (const auto& m : models) {
    DirectSemantics engine(m.model());
    for (StateId s : m.uncertainty().members())
      if (!engine.holds(m.uncertainty(), s, f)) return minimize(Counterexample{m, s, f});
  }
  return std::nullopt;
}

bool SuiteReport::clean() const {
  return std::all_of(results.begin(), results.end(),
                     [](const SchemaResult& r) { return r.failed == 0; });
}

SuiteReport soundness_suite(std::uint64_t seed, std::size_t trials,
                            const std::optional<std::string>& schema) {
  SuiteReport report;
  if (trials == 0) return report;
  std::vector<std::string> names;
  if (schema) {
    names.push_back(*schema);
  } else {
    names = sela_schemas();
    for (auto& n : derived_schemas()) names.push_back(std::move(n));
  }

  std::mt19937_64 rng(seed);
  for (const auto& name : names) {
    SchemaResult result;
    result.schema = name;
    for (std::size_t i = 0; i < trials; ++i) {
      const std::size_t states = 1 + roll(rng, 5);
      const std::size_t actions = 1 + roll(rng, 2);
      const double density = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
      const UncertaintyMap m = random_model(states, actions, 2, density, rng());

      FormulaOptions opt;
      opt.depth = roll(rng, 4);
      opt.actions.resize(actions);
      const Formula p = random_formula(rng, opt);
      const Formula q = random_formula(rng, opt);
      const Formula r = random_formula(rng, opt);
      const Formula f = instantiate_schema(name, p, q, r, pick(rng, opt.actions), rng);

      if (auto cex = check_validity(f, {m})) {
        ++result.failed;
        if (!result.counterexample) result.counterexample = std::move(cex);
      } else {
        ++result.passed;
      }
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace epdl

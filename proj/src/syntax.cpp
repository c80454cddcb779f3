#include "epdl/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <unordered_set>

#include "epdl/errors.hpp"

namespace epdl {

namespace detail {

struct FormulaNode {
  FormulaKind kind;
  std::string name;
  Formula a;
  Formula b;
  Program program;
  std::size_t size = 1;
  bool star_free = true;
  std::size_t hash = 0;
};

struct ProgramNode {
  ProgramKind kind;
  std::string name;
  Formula formula;
  Program a;
  Program b;
  std::size_t size = 1;
  bool star_free = true;
  std::size_t hash = 0;
};

}  // namespace detail

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

struct FormulaAccess {
  static Formula make(detail::FormulaNode node) {
    return Formula(std::make_shared<const detail::FormulaNode>(std::move(node)));
  }
  static Program make(detail::ProgramNode node) {
    return Program(std::make_shared<const detail::ProgramNode>(std::move(node)));
  }
  static const detail::FormulaNode& node(const Formula& f) { return *f.node_; }
  static const detail::ProgramNode& node(const Program& p) { return *p.node_; }
};

// ---- Formula ----------------------------------------------------------------

FormulaKind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::operand() const { return node_->a; }
const Formula& Formula::left() const { return node_->a; }
const Formula& Formula::right() const { return node_->b; }
const Program& Formula::program() const { return node_->program; }
std::size_t Formula::size() const { return node_->size; }
bool Formula::star_free() const { return node_->star_free; }
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.size != b.size) return false;
  switch (a.kind) {
    case FormulaKind::top:
      return true;
    case FormulaKind::prop:
      return a.name == b.name;
    case FormulaKind::negation:
    case FormulaKind::knowledge:
      return a.a == b.a;
    case FormulaKind::conjunction:
      return a.a == b.a && a.b == b.b;
    case FormulaKind::box:
      return a.program == b.program && a.a == b.a;
  }
  return false;
}

// ---- Program ----------------------------------------------------------------

ProgramKind Program::kind() const { return node_->kind; }
const std::string& Program::name() const { return node_->name; }
const Formula& Program::formula() const { return node_->formula; }
const Program& Program::left() const { return node_->a; }
const Program& Program::right() const { return node_->b; }
const Program& Program::body() const { return node_->a; }
std::size_t Program::size() const { return node_->size; }
bool Program::star_free() const { return node_->star_free; }
std::size_t Program::hash() const { return node_->hash; }

bool operator==(const Program& x, const Program& y) {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.size != b.size) return false;
  switch (a.kind) {
    case ProgramKind::action:
      return a.name == b.name;
    case ProgramKind::test:
      return a.formula == b.formula;
    case ProgramKind::sequence:
    case ProgramKind::choice:
      return a.a == b.a && a.b == b.b;
    case ProgramKind::iteration:
      return a.a == b.a;
  }
  return false;
}

// ---- builders ---------------------------------------------------------------

Formula top() {
  static const Formula t = [] {
    detail::FormulaNode n{FormulaKind::top, {}, {}, {}, {}};
    n.hash = mix(0x51, 0);
    return FormulaAccess::make(std::move(n));
  }();
  return t;
}

Formula prop(std::string name) {
  detail::FormulaNode n{FormulaKind::prop, std::move(name), {}, {}, {}};
  n.hash = mix(0x52, std::hash<std::string>{}(n.name));
  return FormulaAccess::make(std::move(n));
}

Formula neg(Formula f) {
  detail::FormulaNode n{FormulaKind::negation, {}, std::move(f), {}, {}};
  n.size = 1 + n.a.size();
  n.star_free = n.a.star_free();
  n.hash = mix(0x53, n.a.hash());
  return FormulaAccess::make(std::move(n));
}

Formula conj(Formula a, Formula b) {
  detail::FormulaNode n{FormulaKind::conjunction, {}, std::move(a), std::move(b), {}};
  n.size = 1 + n.a.size() + n.b.size();
  n.star_free = n.a.star_free() && n.b.star_free();
  n.hash = mix(mix(0x54, n.a.hash()), n.b.hash());
  return FormulaAccess::make(std::move(n));
}

Formula know(Formula f) {
  detail::FormulaNode n{FormulaKind::knowledge, {}, std::move(f), {}, {}};
  n.size = 1 + n.a.size();
  n.star_free = n.a.star_free();
  n.hash = mix(0x55, n.a.hash());
  return FormulaAccess::make(std::move(n));
}

Formula box(Program p, Formula f) {
  detail::FormulaNode n{FormulaKind::box, {}, std::move(f), {}, std::move(p)};
  n.size = n.program.size() + n.a.size();
  n.star_free = n.program.star_free() && n.a.star_free();
  n.hash = mix(mix(0x56, n.program.hash()), n.a.hash());
  return FormulaAccess::make(std::move(n));
}

Formula bottom() { return neg(top()); }
Formula disj(Formula a, Formula b) { return neg(conj(neg(std::move(a)), neg(std::move(b)))); }
Formula implies(Formula a, Formula b) { return disj(neg(std::move(a)), std::move(b)); }
Formula iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }
Formula diamond(Program p, Formula f) { return neg(box(std::move(p), neg(std::move(f)))); }
Formula know_hat(Formula f) { return neg(know(neg(std::move(f)))); }
Formula strong(Program p, Formula f) { return conj(box(p, f), diamond(p, f)); }

Program act(std::string name) {
  detail::ProgramNode n{ProgramKind::action, std::move(name), {}, {}, {}};
  n.hash = mix(0x61, std::hash<std::string>{}(n.name));
  return FormulaAccess::make(std::move(n));
}

Program test(Formula f) {
  detail::ProgramNode n{ProgramKind::test, {}, std::move(f), {}, {}};
  n.size = 1 + n.formula.size();
  n.star_free = n.formula.star_free();
  n.hash = mix(0x62, n.formula.hash());
  return FormulaAccess::make(std::move(n));
}

Program seq(Program a, Program b) {
  detail::ProgramNode n{ProgramKind::sequence, {}, {}, std::move(a), std::move(b)};
  n.size = 1 + n.a.size() + n.b.size();
  n.star_free = n.a.star_free() && n.b.star_free();
  n.hash = mix(mix(0x63, n.a.hash()), n.b.hash());
  return FormulaAccess::make(std::move(n));
}

Program choice(Program a, Program b) {
  detail::ProgramNode n{ProgramKind::choice, {}, {}, std::move(a), std::move(b)};
  n.size = 1 + n.a.size() + n.b.size();
  n.star_free = n.a.star_free() && n.b.star_free();
  n.hash = mix(mix(0x64, n.a.hash()), n.b.hash());
  return FormulaAccess::make(std::move(n));
}

Program star(Program p) {
  detail::ProgramNode n{ProgramKind::iteration, {}, {}, std::move(p), {}};
  n.size = 1 + n.a.size();
  n.star_free = false;
  n.hash = mix(0x65, n.a.hash());
  return FormulaAccess::make(std::move(n));
}

Program sum(const std::vector<Program>& summands) {
  if (summands.empty()) throw ContractError("sum of zero programs");
  Program out = summands.front();
  for (std::size_t i = 1; i < summands.size(); ++i) out = choice(out, summands[i]);
  return out;
}

// ---- structural utilities ---------------------------------------------------

namespace {

void collect_subformulas(const Formula& f, std::vector<Formula>& out,
                         std::unordered_set<Formula, FormulaHash>& seen);

void collect_program_tests(const Program& p, std::vector<Formula>& out,
                           std::unordered_set<Formula, FormulaHash>& seen) {
  switch (p.kind()) {
    case ProgramKind::action:
      return;
    case ProgramKind::test:
      collect_subformulas(p.formula(), out, seen);
      return;
    case ProgramKind::sequence:
    case ProgramKind::choice:
      collect_program_tests(p.left(), out, seen);
      collect_program_tests(p.right(), out, seen);
      return;
    case ProgramKind::iteration:
      collect_program_tests(p.body(), out, seen);
      return;
  }
}

void collect_subformulas(const Formula& f, std::vector<Formula>& out,
                         std::unordered_set<Formula, FormulaHash>& seen) {
  if (!seen.insert(f).second) return;
  out.push_back(f);
  switch (f.kind()) {
    case FormulaKind::top:
    case FormulaKind::prop:
      return;
    case FormulaKind::negation:
    case FormulaKind::knowledge:
      collect_subformulas(f.operand(), out, seen);
      return;
    case FormulaKind::conjunction:
      collect_subformulas(f.left(), out, seen);
      collect_subformulas(f.right(), out, seen);
      return;
    case FormulaKind::box:
      collect_program_tests(f.program(), out, seen);
      collect_subformulas(f.operand(), out, seen);
      return;
  }
}

void collect_alphabet(const Program& p, std::vector<SequenceItem>& out) {
  switch (p.kind()) {
    case ProgramKind::action: {
      auto item = SequenceItem::action(p.name());
      if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
      return;
    }
    case ProgramKind::test: {
      auto item = SequenceItem::check(p.formula());
      if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
      return;
    }
    case ProgramKind::sequence:
    case ProgramKind::choice:
      collect_alphabet(p.left(), out);
      collect_alphabet(p.right(), out);
      return;
    case ProgramKind::iteration:
      collect_alphabet(p.body(), out);
      return;
  }
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  collect_subformulas(f, out, seen);
  return out;
}

std::vector<SequenceItem> language_alphabet(const Program& p) {
  std::vector<SequenceItem> out;
  collect_alphabet(p, out);
  return out;
}

ComputationSequence strip_tests(const ComputationSequence& w) {
  ComputationSequence out;
  for (const auto& item : w)
    if (item.is_action()) out.push_back(item);
  return out;
}

ActionSequence actions_of(const ComputationSequence& w) {
  ActionSequence out;
  for (const auto& item : w)
    if (item.is_action()) out.push_back(item.action_name());
  return out;
}

Formula build_theta(std::vector<Action> actions, const Formula& goal) {
  if (actions.empty()) throw ContractError("build_theta: empty action set");
  std::sort(actions.begin(), actions.end());
  actions.erase(std::unique(actions.begin(), actions.end()), actions.end());
  std::vector<Program> guarded;
  guarded.reserve(actions.size());
  for (const auto& a : actions)
    guarded.push_back(seq(test(know(diamond(act(a), top()))), act(a)));
  return diamond(star(sum(guarded)), know(goal));
}

Formula build_plan_formula(const ActionSequence& plan, const Formula& goal) {
  Formula body = goal;
  for (auto it = plan.rbegin(); it != plan.rend(); ++it) body = strong(act(*it), body);
  return know(body);
}

Formula build_guarded_plan_formula(const ActionSequence& plan, const Formula& goal) {
  if (plan.empty()) return know(goal);
  Program p = seq(test(know(diamond(act(plan[0]), top()))), act(plan[0]));
  for (std::size_t i = 1; i < plan.size(); ++i)
    p = seq(p, seq(test(know(diamond(act(plan[i]), top()))), act(plan[i])));
  return diamond(p, know(goal));
}

bool program_free(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::top:
    case FormulaKind::prop:
      return true;
    case FormulaKind::negation:
    case FormulaKind::knowledge:
      return program_free(f.operand());
    case FormulaKind::conjunction:
      return program_free(f.left()) && program_free(f.right());
    case FormulaKind::box:
      return false;
  }
  return false;
}

// ---- printing ---------------------------------------------------------------
//
// Output always reparses to the same tree: binary nodes are parenthesised, and
// only patterns that the parser expands back identically are abbreviated.

namespace {

void print(const Formula& f, std::string& out);
void print(const Program& p, std::string& out);

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::top:
      out += 'T';
      return;
    case FormulaKind::prop:
      out += f.name();
      return;
    case FormulaKind::negation: {
      const Formula& g = f.operand();
      if (g.kind() == FormulaKind::top) {
        out += 'F';
        return;
      }
      if (g.kind() == FormulaKind::box && g.operand().kind() == FormulaKind::negation) {
        out += '<';
        print(g.program(), out);
        out += '>';
        print(g.operand().operand(), out);
        return;
      }
      if (g.kind() == FormulaKind::knowledge &&
          g.operand().kind() == FormulaKind::negation) {
        out += "Kh ";
        print(g.operand().operand(), out);
        return;
      }
      if (g.kind() == FormulaKind::conjunction &&
          g.left().kind() == FormulaKind::negation &&
          g.right().kind() == FormulaKind::negation) {
        out += '(';
        print(g.left().operand(), out);
        out += " | ";
        print(g.right().operand(), out);
        out += ')';
        return;
      }
      out += '~';
      print(g, out);
      return;
    }
    case FormulaKind::conjunction:
      out += '(';
      print(f.left(), out);
      out += " & ";
      print(f.right(), out);
      out += ')';
      return;
    case FormulaKind::knowledge:
      out += "K ";
      print(f.operand(), out);
      return;
    case FormulaKind::box:
      out += '[';
      print(f.program(), out);
      out += ']';
      print(f.operand(), out);
      return;
  }
}

void print(const Program& p, std::string& out) {
  switch (p.kind()) {
    case ProgramKind::action:
      out += p.name();
      return;
    case ProgramKind::test:
      out += '?';
      print(p.formula(), out);
      return;
    case ProgramKind::sequence:
      out += '(';
      print(p.left(), out);
      out += " ; ";
      print(p.right(), out);
      out += ')';
      return;
    case ProgramKind::choice:
      out += '(';
      print(p.left(), out);
      out += " + ";
      print(p.right(), out);
      out += ')';
      return;
    case ProgramKind::iteration:
      if (p.body().kind() == ProgramKind::test) {
        out += '(';
        print(p.body(), out);
        out += ')';
      } else {
        print(p.body(), out);
      }
      out += '*';
      return;
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::string to_string(const Program& p) {
  std::string out;
  print(p, out);
  return out;
}

std::string to_string(const SequenceItem& item) {
  if (item.is_action()) return item.action_name();
  return "?" + to_string(item.test_formula());
}

std::string to_string(const ComputationSequence& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += to_string(w[i]);
  }
  return out + "]";
}

}  // namespace epdl

#pragma once

// Epistemic PDL abstract syntax.
//
// Formulas and programs are immutable, reference-counted trees. Only the six
// primitive formula constructors and five program constructors exist as
// nodes; every derived connective is expanded by its builder.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace epdl {

using Action = std::string;
using ActionSequence = std::vector<Action>;

enum class FormulaKind : unsigned char { top, prop, negation, conjunction, knowledge, box };
enum class ProgramKind : unsigned char { action, test, sequence, choice, iteration };

namespace detail {
struct FormulaNode;
struct ProgramNode;
}  // namespace detail

class Program;

class Formula {
 public:
  /// Empty handle; only the builders below produce usable formulas.
  Formula() = default;

  FormulaKind kind() const;
  /// Proposition name (prop only).
  const std::string& name() const;
  /// Sole child of negation / knowledge, or the body of a box.
  const Formula& operand() const;
  const Formula& left() const;
  const Formula& right() const;
  const Program& program() const;

  std::size_t size() const;
  bool star_free() const;
  std::size_t hash() const;
  /// Identity of the shared node; stable for the lifetime of the tree.
  const void* id() const { return node_.get(); }
  bool empty() const { return node_ == nullptr; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  friend struct FormulaAccess;
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::FormulaNode> node_;
};

class Program {
 public:
  Program() = default;

  ProgramKind kind() const;
  /// Action symbol (action only).
  const std::string& name() const;
  /// Tested formula (test only).
  const Formula& formula() const;
  const Program& left() const;
  const Program& right() const;
  /// Iterated body (iteration only).
  const Program& body() const;

  std::size_t size() const;
  bool star_free() const;
  std::size_t hash() const;
  const void* id() const { return node_.get(); }
  bool empty() const { return node_ == nullptr; }

  friend bool operator==(const Program& a, const Program& b);

 private:
  friend struct FormulaAccess;
  explicit Program(std::shared_ptr<const detail::ProgramNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::ProgramNode> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// ---- formula builders -------------------------------------------------------

Formula top();
Formula prop(std::string name);
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula know(Formula f);
Formula box(Program p, Formula f);

Formula bottom();                        // ~T
Formula disj(Formula a, Formula b);      // ~(~a & ~b)
Formula implies(Formula a, Formula b);   // ~a | b
Formula iff(Formula a, Formula b);       // (a -> b) & (b -> a)
Formula diamond(Program p, Formula f);   // ~[p]~f
Formula know_hat(Formula f);             // ~K~f
/// Executable-and-safe modality: [p]f & <p>f.
Formula strong(Program p, Formula f);

// ---- program builders -------------------------------------------------------

Program act(std::string name);
Program test(Formula f);
Program seq(Program a, Program b);
Program choice(Program a, Program b);
Program star(Program p);
/// Left-nested choice over a nonempty list.
Program sum(const std::vector<Program>& summands);

// ---- computation sequences --------------------------------------------------

/// One letter of a computation sequence: an action or a whole test formula.
class SequenceItem {
 public:
  static SequenceItem action(Action a) { return SequenceItem(std::move(a)); }
  static SequenceItem check(Formula f) { return SequenceItem(std::move(f)); }

  bool is_action() const { return std::holds_alternative<Action>(value_); }
  bool is_test() const { return !is_action(); }
  const Action& action_name() const { return std::get<Action>(value_); }
  const Formula& test_formula() const { return std::get<Formula>(value_); }

  friend bool operator==(const SequenceItem&, const SequenceItem&) = default;

 private:
  explicit SequenceItem(Action a) : value_(std::move(a)) {}
  explicit SequenceItem(Formula f) : value_(std::move(f)) {}

  std::variant<Action, Formula> value_;
};

using ComputationSequence = std::vector<SequenceItem>;

// ---- structural utilities ---------------------------------------------------

inline std::size_t formula_size(const Formula& f) { return f.size(); }
inline std::size_t program_size(const Program& p) { return p.size(); }

/// Subformula closure including formulas inside tests; first-visit order,
/// no structural duplicates.
std::vector<Formula> subformulas(const Formula& f);

/// Sig: every action and test of `p` once, in left-to-right first appearance.
std::vector<SequenceItem> language_alphabet(const Program& p);

/// r(w): the actions of `w` with tests removed.
ComputationSequence strip_tests(const ComputationSequence& w);
ActionSequence actions_of(const ComputationSequence& w);

/// <((?K<a1>T;a1) + ... + (?K<an>T;an))*> K goal, summands sorted by name.
Formula build_theta(std::vector<Action> actions, const Formula& goal);

/// K [[a1]] [[a2]] ... [[an]] goal; K goal for the empty sequence.
Formula build_plan_formula(const ActionSequence& plan, const Formula& goal);

/// <?K<a1>T;a1; ... ;?K<an>T;an> K goal (the guarded form of a plan).
Formula build_guarded_plan_formula(const ActionSequence& plan, const Formula& goal);

/// True iff no box / program occurs anywhere in `f`.
bool program_free(const Formula& f);

// ---- printing ---------------------------------------------------------------

std::string to_string(const Formula& f);
std::string to_string(const Program& p);
std::string to_string(const SequenceItem& item);
std::string to_string(const ComputationSequence& w);

}  // namespace epdl

template <>
struct std::hash<epdl::Formula> {
  std::size_t operator()(const epdl::Formula& f) const { return f.hash(); }
};

#pragma once

// QBF to star-free model checking. Variable i is existential when i is odd
// and universal when even; the matrix is in CNF.
//
// The model M_n has states x0, x1..xn, nx1..nxn with p_i true at x_i and
// q_i at nx_i. Action a_i (na_i) loops everywhere and also moves from either
// level-(i-1) state to x_i (nx_i). Choosing a_i or na_i fixes x_i, and
// Kh p_i / Kh q_i then read the choice back off the belief.

#include <string_view>
#include <vector>

#include "epdl/model.hpp"
#include "epdl/syntax.hpp"

namespace epdl {

struct Qbf {
  std::size_t variables = 0;
  /// Signed 1-based variable indices; -i is the negated literal.
  std::vector<std::vector<int>> clauses;
};

/// Throws ContractError unless every clause is nonempty and every literal
/// names a variable in 1..variables.
void validate(const Qbf& q);

/// Throws ContractError for n = 0.
UncertaintyMap build_qbf_model(std::size_t n);

/// QT_1 ... QT_n psi. An empty clause list gives psi = T.
Formula build_qbf_formula(const Qbf& q);

/// Exhaustive evaluation of the quantifier game.
bool eval_qbf(const Qbf& q);

/// M_n, x0 ||- theta via the contextual engine.
bool reduction_check(const Qbf& q);

/// "p cnf n m" followed by m zero-terminated clauses; `c` lines are
/// comments. Quantifier lines are rejected since the prefix is fixed.
Qbf parse_qdimacs(std::string_view text);

}  // namespace epdl

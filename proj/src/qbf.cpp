#include "epdl/qbf.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>

#include "epdl/contextual.hpp"
#include "epdl/errors.hpp"

namespace epdl {

void validate(const Qbf& q) {
  for (const auto& clause : q.clauses) {
    if (clause.empty()) throw ContractError("empty clause");
    for (int lit : clause) {
      const auto v = static_cast<std::size_t>(std::abs(lit));
      if (lit == 0 || v > q.variables)
        throw ContractError("literal " + std::to_string(lit) + " out of range");
    }
  }
}

UncertaintyMap build_qbf_model(std::size_t n) {
  if (n == 0) throw ContractError("QBF model needs at least one variable");
  std::vector<std::string> names{"x0"};
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("nx" + std::to_string(i));
  KripkeModel m(std::move(names));
  const auto pos = [](std::size_t i) { return i; };
  const auto negd = [n](std::size_t i) { return n + i; };
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string k = std::to_string(i);
    m.set_true("p" + k, pos(i));
    m.set_true("q" + k, negd(i));
    for (const auto& [action, target] : {std::pair{"a" + k, pos(i)}, std::pair{"na" + k, negd(i)}}) {
      for (StateId s = 0; s < m.size(); ++s) m.add_edge(action, s, s);
      m.add_edge(action, i == 1 ? 0 : pos(i - 1), target);
      if (i > 1) m.add_edge(action, negd(i - 1), target);
    }
  }
  Belief u(m.size());
  u.set(0);
  return UncertaintyMap(std::move(m), std::move(u));
}

Formula build_qbf_formula(const Qbf& q) {
  validate(q);
  Formula psi;
  for (const auto& clause : q.clauses) {
    Formula c;
    for (int lit : clause) {
      const std::string k = std::to_string(std::abs(lit));
      const Formula l = know_hat(prop((lit > 0 ? "p" : "q") + k));
      c = c.empty() ? l : disj(c, l);
    }
    psi = psi.empty() ? c : conj(psi, c);
  }
  if (psi.empty()) psi = top();

  Formula theta = psi;
  for (std::size_t i = q.variables; i >= 1; --i) {
    const std::string k = std::to_string(i);
    const Program pick =
        seq(choice(act("a" + k), act("na" + k)), test(disj(prop("p" + k), prop("q" + k))));
    theta = i % 2 == 1 ? diamond(pick, theta) : box(pick, theta);
  }
  return theta;
}

bool eval_qbf(const Qbf& q) {
  validate(q);
  std::vector<bool> value(q.variables + 1, false);
  const auto matrix = [&] {
    for (const auto& clause : q.clauses) {
      bool sat = false;
      for (int lit : clause) sat = sat || (value[static_cast<std::size_t>(std::abs(lit))] == (lit > 0));
      if (!sat) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> game = [&](std::size_t i) {
    if (i > q.variables) return matrix();
    value[i] = true;
    const bool with_true = game(i + 1);
    if (i % 2 == 1 && with_true) return true;
    if (i % 2 == 0 && !with_true) return false;
    value[i] = false;
    return game(i + 1);
  };
  return game(1);
}

bool reduction_check(const Qbf& q) {
  const UncertaintyMap m = build_qbf_model(q.variables);
  return mc(m, 0, {}, build_qbf_formula(q));
}

Qbf parse_qdimacs(std::string_view text) {
  Qbf q;
  bool header = false;
  std::size_t expected = 0;
  std::vector<int> clause;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c') continue;
    const std::size_t col = first + 1;
    if (line[first] == 'p') {
      if (header) throw ParseError(line_no, col, "duplicate header");
      std::istringstream h(line.substr(first));
      std::string p, cnf;
      long n = -1, mcount = -1;
      if (!(h >> p >> cnf >> n >> mcount) || cnf != "cnf" || n < 1 || mcount < 0)
        throw ParseError(line_no, col, "expected header 'p cnf <vars> <clauses>'");
      q.variables = static_cast<std::size_t>(n);
      expected = static_cast<std::size_t>(mcount);
      header = true;
      continue;
    }
    if (line[first] == 'e' || line[first] == 'a')
      throw ParseError(line_no, col, "quantifier lines are not supported; the prefix alternates from exists");
    if (!header) throw ParseError(line_no, col, "expected header 'p cnf <vars> <clauses>'");
    std::size_t pos = first;
    while (pos < line.size()) {
      pos = line.find_first_not_of(" \t\r", pos);
      if (pos == std::string::npos) break;
      const std::size_t end = line.find_first_of(" \t\r", pos);
      const std::string tok = line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      char* stop = nullptr;
      const long lit = std::strtol(tok.c_str(), &stop, 10);
      if (*stop != '\0') throw ParseError(line_no, pos + 1, "expected integer literal, found '" + tok + "'");
      if (lit == 0) {
        if (clause.empty()) throw ParseError(line_no, pos + 1, "empty clause");
        q.clauses.push_back(std::move(clause));
        clause.clear();
      } else {
        if (static_cast<std::size_t>(std::labs(lit)) > q.variables)
          throw ParseError(line_no, pos + 1, "literal " + tok + " out of range");
        clause.push_back(static_cast<int>(lit));
      }
      pos = end == std::string::npos ? line.size() : end;
    }
  }
  if (!header) throw ParseError(line_no + 1, 1, "missing header 'p cnf <vars> <clauses>'");
  if (!clause.empty()) throw ParseError(line_no, 1, "last clause lacks terminating 0");
  if (q.clauses.size() != expected)
    throw ParseError(line_no, 1,
                     "header declares " + std::to_string(expected) + " clauses, found " +
                         std::to_string(q.clauses.size()));
  return q;
}

}  // namespace epdl

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "epdl/axioms.hpp"
#include "epdl/check.hpp"
#include "epdl/errors.hpp"
#include "epdl/ets.hpp"
#include "epdl/parser.hpp"
#include "epdl/planner.hpp"
#include "epdl/qbf.hpp"

namespace epdl::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model;
  std::string point;
  std::string formula;
  std::string engine;
  std::string goal;
  std::string actions;
  std::string plan;
  std::string file;
  std::string schema;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  bool machine = false;
};

// Splits on commas and whitespace.
std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

StateId resolve_point(const UncertaintyMap& m, const std::string& point) {
  if (point.empty()) {
    if (m.uncertainty().count() != 1)
      throw UsageError("--point is required when the uncertainty set has more than one state");
    return m.uncertainty().members().front();
  }
  const StateId s = m.model().state_id(point);
  if (!m.uncertainty().test(s))
    throw ModelError("point '" + point + "' is not in the uncertainty set");
  return s;
}

int verdict(bool value, const Options& o, std::ostream& out) {
  if (o.machine)
    out << "result=" << (value ? "true" : "false") << '\n';
  else
    out << (value ? "TRUE" : "FALSE") << '\n';
  return value ? kTrue : kFalse;
}

PlanningProblem load_problem(const Options& o) {
  return make_problem(load_model_file(o.model), parse_formula(o.goal), split_list(o.actions));
}

int do_check(const Options& o, std::ostream& out) {
  const UncertaintyMap m = load_model_file(o.model);
  const Formula f = parse_formula(o.formula);
  Engine engine = default_engine(f);
  if (!o.engine.empty()) {
    auto chosen = parse_engine(o.engine);
    if (!chosen) throw UsageError("unknown engine '" + o.engine + "'");
    engine = *chosen;
  }
  return verdict(check(m, resolve_point(m, o.point), f, engine), o, out);
}

int do_plan(const Options& o, std::ostream& out) {
  const PlanningProblem p = load_problem(o);
  const auto plan = find_plan(p);
  if (!plan) {
    out << (o.machine ? "result=false" : "NO PLAN") << '\n';
    return kFalse;
  }
  std::string joined;
  for (const auto& a : *plan) joined += (joined.empty() ? "" : o.machine ? "." : " ") + a;
  if (o.machine)
    out << "result=plan:" << joined << '\n';
  else
    out << (plan->empty() ? "EMPTY PLAN" : joined) << '\n';
  return kTrue;
}

int do_verify(const Options& o, std::ostream& out) {
  const PlanningProblem p = load_problem(o);
  return verdict(verify_plan(p, split_list(o.plan)), o, out);
}

int do_qbf(const Options& o, std::ostream& out) {
  std::ifstream in(o.file);
  if (!in) throw ModelError("cannot open '" + o.file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const Qbf q = parse_qdimacs(buf.str());
  const bool oracle = eval_qbf(q);
  const bool reduction = reduction_check(q);
  if (o.machine) {
    if (oracle == reduction) return verdict(oracle, o, out);
    out << "result=disagree\n";
    return kDisagree;
  }
  out << "oracle: " << (oracle ? "TRUE" : "FALSE") << '\n';
  out << "reduction: " << (reduction ? "TRUE" : "FALSE") << '\n';
  if (oracle != reduction) return kDisagree;
  return oracle ? kTrue : kFalse;
}

int do_axioms(const Options& o, std::ostream& out) {
  std::optional<std::string> schema;
  if (!o.schema.empty()) schema = o.schema;
  const SuiteReport report = soundness_suite(o.seed, o.trials, schema);
  for (const auto& r : report.results) {
    out << r.schema << ": " << r.passed << " passed, " << r.failed << " failed\n";
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      out << "  counterexample at " << c.map.model().state_name(c.point) << " for "
          << to_string(c.formula) << '\n'
          << save_model(c.map) << '\n';
    }
  }
  if (o.machine) out << "result=" << (report.clean() ? "true" : "false") << '\n';
  return report.clean() ? kTrue : kFalse;
}

int do_dump_ets(const Options& o, std::ostream& out) {
  const UncertaintyMap m = load_model_file(o.model);
  const auto actions = split_list(o.actions);
  const EtsModel e = actions.empty() ? build_bullet(m.model(), m.uncertainty())
                                     : build_circ(m.model(), m.uncertainty(), actions);
  out << dump_ets(e) << '\n';
  return kTrue;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Epistemic PDL model checker and conformant planner", "epdl"};
  app.require_subcommand(1);
  Options o;

  auto* check_cmd = app.add_subcommand("check", "Model check a formula at a point");
  check_cmd->add_option("--model", o.model, "Model file")->required();
  check_cmd->add_option("--point", o.point, "State to evaluate at (default: the only state of U)");
  check_cmd->add_option("--formula", o.formula, "Formula")->required();
  check_cmd->add_option("--engine", o.engine, "direct | contextual | ets");

  auto* plan_cmd = app.add_subcommand("plan", "Find a shortest conformant plan");
  auto* verify_cmd = app.add_subcommand("verify", "Check a given plan");
  for (auto* cmd : {plan_cmd, verify_cmd}) {
    cmd->add_option("--model", o.model, "Model file")->required();
    cmd->add_option("--goal", o.goal, "Goal formula")->required();
    cmd->add_option("--actions", o.actions, "Allowed actions, comma separated")->required();
  }
  verify_cmd->add_option("--plan", o.plan, "Plan, comma or space separated")->required();

  auto* qbf_cmd = app.add_subcommand("qbf", "Compare QBF evaluation with the model checking reduction");
  qbf_cmd->add_option("--file", o.file, "QDIMACS-style clause file")->required();

  auto* axioms_cmd = app.add_subcommand("axioms", "Search random models for axiom counterexamples");
  axioms_cmd->add_option("--seed", o.seed, "Random seed");
  axioms_cmd->add_option("--trials", o.trials, "Instances per schema");
  axioms_cmd->add_option("--schema", o.schema, "Run only this schema");

  auto* dump_cmd = app.add_subcommand("dump-ets", "Print the epistemic temporal structure");
  dump_cmd->add_option("--model", o.model, "Model file")->required();
  dump_cmd->add_option("--actions", o.actions, "Guarded structure over these actions");

  for (auto* cmd : {check_cmd, plan_cmd, verify_cmd, qbf_cmd, axioms_cmd})
    cmd->add_flag("--machine", o.machine, "One line: result=<true|false|plan:a.b>");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (check_cmd->parsed()) return do_check(o, out);
    if (plan_cmd->parsed()) return do_plan(o, out);
    if (verify_cmd->parsed()) return do_verify(o, out);
    if (qbf_cmd->parsed()) return do_qbf(o, out);
    if (axioms_cmd->parsed()) return do_axioms(o, out);
    return do_dump_ets(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const StarFreeError& e) {
    err << "error: " << e.what() << '\n';
    return kStarred;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const ModelError& e) {
    err << "model error: " << e.what() << '\n';
    return kInputError;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace epdl::cli

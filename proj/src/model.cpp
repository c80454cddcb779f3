#include "epdl/model.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "epdl/errors.hpp"

namespace epdl {

KripkeModel::KripkeModel(std::vector<std::string> state_names)
    : names_(std::move(state_names)) {
  if (names_.empty()) throw ModelError("model has no states");
  for (StateId i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw ModelError("duplicate state name '" + names_[i] + "'");
  }
}

std::optional<StateId> KripkeModel::find_state(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

StateId KripkeModel::state_id(std::string_view name) const {
  if (auto id = find_state(name)) return *id;
  throw ModelError("unknown state '" + std::string(name) + "'");
}

void KripkeModel::add_edge(const Action& a, StateId from, StateId to) {
  auto it = relations_.try_emplace(a, size(), size()).first;
  it->second.set(from, to);
}

void KripkeModel::remove_edge(const Action& a, StateId from, StateId to) {
  auto it = relations_.find(a);
  if (it != relations_.end()) it->second.reset(from, to);
}

void KripkeModel::declare_action(const Action& a) { relations_.try_emplace(a, size(), size()); }

void KripkeModel::set_true(const std::string& p, StateId s) {
  auto it = valuation_.try_emplace(p, size()).first;
  it->second.set(s);
}

const BitMatrix* KripkeModel::relation(const Action& a) const {
  auto it = relations_.find(a);
  return it == relations_.end() ? nullptr : &it->second;
}

bool KripkeModel::holds(const std::string& p, StateId s) const {
  auto it = valuation_.find(p);
  return it != valuation_.end() && it->second.test(s);
}

StateSet KripkeModel::truth_set(const std::string& p) const {
  auto it = valuation_.find(p);
  return it == valuation_.end() ? StateSet(size()) : it->second;
}

std::vector<Action> KripkeModel::actions() const {
  std::vector<Action> out;
  for (const auto& [a, _] : relations_) out.push_back(a);
  return out;
}

std::vector<std::string> KripkeModel::propositions() const {
  std::vector<std::string> out;
  for (const auto& [p, _] : valuation_) out.push_back(p);
  return out;
}

UncertaintyMap::UncertaintyMap(KripkeModel model, Belief uncertainty)
    : model_(std::move(model)), uncertainty_(std::move(uncertainty)) {
  if (uncertainty_.universe() != model_.size())
    throw ModelError("uncertainty set does not match the model size");
  if (uncertainty_.none()) throw ModelError("empty uncertainty set");
}

UncertaintyMap UncertaintyMap::with_uncertainty(Belief uncertainty) const {
  return UncertaintyMap(model_, std::move(uncertainty));
}

Belief update_belief(const KripkeModel& m, const Belief& u, const Action& a) {
  Belief out(m.size());
  const BitMatrix* r = m.relation(a);
  if (!r) return out;
  u.for_each([&](StateId s) { out |= r->row(s); });
  return out;
}

Belief update_belief_seq(const KripkeModel& m, const Belief& u, const ActionSequence& seq) {
  Belief cur = u;
  for (const auto& a : seq) cur = update_belief(m, cur, a);
  return cur;
}

bool executable_everywhere(const KripkeModel& m, const Belief& u, const Action& a) {
  const BitMatrix* r = m.relation(a);
  if (!r) return u.none();
  bool ok = true;
  u.for_each([&](StateId s) { ok = ok && r->row(s).any(); });
  return ok;
}

Belief make_belief(const KripkeModel& m, const std::vector<std::string>& names) {
  Belief b(m.size());
  for (const auto& n : names) b.set(m.state_id(n));
  return b;
}

std::string belief_to_string(const KripkeModel& m, const Belief& b) {
  std::string out = "{";
  bool first = true;
  b.for_each([&](StateId s) {
    if (!first) out += ",";
    first = false;
    out += m.state_name(s);
  });
  return out + "}";
}

// ---- file format ------------------------------------------------------------

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ModelError("'" + what + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ModelError("'" + what + "' must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

StateId lookup(const KripkeModel& m, const std::string& name, const std::string& where) {
  if (auto id = m.find_state(name)) return *id;
  throw ModelError("unknown state '" + name + "' in " + where);
}

}  // namespace

UncertaintyMap load_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("malformed model file: ") + e.what());
  }
  if (!doc.is_object()) throw ModelError("model file must be an object");
  if (!doc.contains("states")) throw ModelError("model file lacks 'states'");
  if (!doc.contains("uncertainty")) throw ModelError("model file lacks 'uncertainty'");

  KripkeModel model(string_list(doc["states"], "states"));

  if (doc.contains("valuation")) {
    const json& val = doc["valuation"];
    if (!val.is_object()) throw ModelError("'valuation' must be an object");
    for (const auto& [state, props] : val.items()) {
      const StateId s = lookup(model, state, "valuation");
      for (const auto& p : string_list(props, "valuation." + state)) model.set_true(p, s);
    }
  }

  if (doc.contains("relations")) {
    const json& rel = doc["relations"];
    if (!rel.is_object()) throw ModelError("'relations' must be an object");
    for (const auto& [action, edges] : rel.items()) {
      if (!edges.is_array()) throw ModelError("relation '" + action + "' must be an edge list");
      model.declare_action(action);
      for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
          throw ModelError("relation '" + action + "' edges must be [from, to] pairs");
        const std::string where = "relation '" + action + "'";
        model.add_edge(action, lookup(model, e[0].get<std::string>(), where),
                       lookup(model, e[1].get<std::string>(), where));
      }
    }
  }

  Belief u(model.size());
  for (const auto& name : string_list(doc["uncertainty"], "uncertainty"))
    u.set(lookup(model, name, "uncertainty"));
  if (u.none()) throw ModelError("empty uncertainty set");
  return UncertaintyMap(std::move(model), std::move(u));
}

UncertaintyMap load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

std::string save_model(const UncertaintyMap& um) {
  const KripkeModel& m = um.model();
  json doc;
  doc["states"] = m.state_names();
  json val = json::object();
  for (StateId s = 0; s < m.size(); ++s) {
    json props = json::array();
    for (const auto& [p, set] : m.valuation())
      if (set.test(s)) props.push_back(p);
    if (!props.empty()) val[m.state_name(s)] = props;
  }
  doc["valuation"] = val;
  json rel = json::object();
  for (const auto& [a, mat] : m.relations()) {
    json edges = json::array();
    for (StateId s = 0; s < m.size(); ++s)
      mat.row(s).for_each([&](StateId t) {
        edges.push_back({m.state_name(s), m.state_name(t)});
      });
    rel[a] = edges;
  }
  doc["relations"] = rel;
  json u = json::array();
  um.uncertainty().for_each([&](StateId s) { u.push_back(m.state_name(s)); });
  doc["uncertainty"] = u;
  return doc.dump(2);
}

}  // namespace epdl

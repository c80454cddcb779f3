#include "epdl/fixtures.hpp"

#include <initializer_list>
#include <utility>

#include "epdl/errors.hpp"

namespace epdl {

namespace {

struct Edge {
  const char* action;
  const char* from;
  const char* to;
};

struct Label {
  const char* state;
  std::initializer_list<const char*> props;
};

UncertaintyMap build(std::initializer_list<const char*> states,
                     std::initializer_list<Edge> edges,
                     std::initializer_list<Label> labels,
                     std::initializer_list<const char*> uncertainty) {
  KripkeModel m(std::vector<std::string>(states.begin(), states.end()));
  for (const auto& e : edges) m.add_edge(e.action, m.state_id(e.from), m.state_id(e.to));
  for (const auto& l : labels)
    for (const char* p : l.props) m.set_true(p, m.state_id(l.state));
  Belief u = make_belief(m, std::vector<std::string>(uncertainty.begin(), uncertainty.end()));
  return UncertaintyMap(std::move(m), std::move(u));
}

}  // namespace

std::map<std::string, UncertaintyMap> fixtures() {
  std::map<std::string, UncertaintyMap> out;
  out.emplace("spy",
              build({"s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8"},
                    {{"r", "s1", "s2"}, {"r", "s2", "s3"}, {"r", "s3", "s4"},
                     {"r", "s4", "s5"}, {"u", "s2", "s6"}, {"u", "s3", "s7"},
                     {"u", "s4", "s8"}},
                    {{"s4", {"Safe"}}, {"s7", {"Safe"}}, {"s8", {"Safe"}}},
                    {"s2", "s3"}));
  out.emplace("context",
              build({"s1", "s2", "s3", "s4"},
                    {{"b", "s1", "s3"}, {"a", "s1", "s2"}, {"a", "s2", "s3"},
                     {"a", "s3", "s4"}},
                    {{"s3", {"p"}}}, {"s1", "s2"}));
  out.emplace("example1",
              build({"s1", "s2", "s3", "s4"},
                    {{"a", "s1", "s2"}, {"a", "s1", "s3"}, {"b", "s2", "s4"}},
                    {{"s4", {"p"}}}, {"s1"}));
  out.emplace("example2",
              build({"s1", "s2", "s3", "s4", "s5", "s6"},
                    {{"a", "s1", "s3"}, {"b", "s3", "s5"}, {"b", "s2", "s4"},
                     {"a", "s4", "s6"}},
                    {{"s5", {"p"}}, {"s6", {"p"}}}, {"s1", "s2"}));
  // The figure has no s3; the names follow it.
  out.emplace("example3",
              build({"s1", "s2", "s4", "s5"},
                    {{"a", "s1", "s2"}, {"b", "s2", "s5"}, {"b", "s2", "s4"}},
                    {{"s5", {"p"}}}, {"s1"}));
  out.emplace("example4",
              build({"s1", "s2", "s3", "s4", "s5"},
                    {{"a", "s1", "s3"}, {"b", "s1", "s4"}, {"a", "s2", "s4"},
                     {"b", "s2", "s5"}},
                    {{"s3", {"p"}}, {"s4", {"p", "q"}}, {"s5", {"p", "q"}}},
                    {"s1", "s2"}));
  return out;
}

UncertaintyMap fixture(const std::string& name) {
  auto all = fixtures();
  auto it = all.find(name);
  if (it == all.end()) throw ModelError("unknown fixture '" + name + "'");
  return it->second;
}

}  // namespace epdl

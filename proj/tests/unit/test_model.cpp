#include <doctest.h>

#include "epdl/axioms.hpp"
#include "epdl/errors.hpp"
#include "epdl/fixtures.hpp"
#include "epdl/qbf.hpp"
#include "../support/oracles.hpp"

using namespace epdl;

namespace {

Belief names(const UncertaintyMap& m, std::vector<std::string> n) {
  return make_belief(m.model(), n);
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("spy map updates") {
  const auto spy = fixture("spy");
  const auto& m = spy.model();
  CHECK(update_belief(m, spy.uncertainty(), "r") == names(spy, {"s3", "s4"}));
  CHECK(update_belief(m, names(spy, {"s3", "s4"}), "u") == names(spy, {"s7", "s8"}));
  CHECK(update_belief_seq(m, spy.uncertainty(), {"r", "u"}) == names(spy, {"s7", "s8"}));
  CHECK(update_belief_seq(m, spy.uncertainty(), {}) == spy.uncertainty());
  CHECK(update_belief(m, spy.uncertainty(), "nope").none());
}

TEST_CASE("fixtures encode the worked examples") {
  const auto all = fixtures();
  CHECK(all.size() == 6);
  const auto& e2 = all.at("example2");
  CHECK(e2.size() == 6);
  CHECK(e2.uncertainty() == names(e2, {"s1", "s2"}));
  const auto& r2a = *e2.model().relation("a");
  const auto id = [&](const char* s) { return e2.model().state_id(s); };
  CHECK(r2a.test(id("s1"), id("s3")));
  CHECK(r2a.test(id("s4"), id("s6")));
  CHECK(e2.model().relation("b")->test(id("s3"), id("s5")));
  CHECK(e2.model().relation("b")->test(id("s2"), id("s4")));
  CHECK(r2a.count() == 2);

  const auto& spy = all.at("spy");
  CHECK(spy.model().truth_set("Safe") == names(spy, {"s4", "s7", "s8"}));
  const auto& e4 = all.at("example4");
  const StateId s4 = e4.model().state_id("s4");
  CHECK(e4.model().holds("p", s4));
  CHECK(e4.model().holds("q", s4));
  CHECK_THROWS_AS(fixture("missing"), ModelError);
}

TEST_CASE("model file loading") {
  const auto spy = fixture("spy");
  const auto again = load_model(save_model(spy));
  CHECK(again.size() == 8);
  CHECK(again.uncertainty() == spy.uncertainty());
  CHECK(again.model().relations() == spy.model().relations());
  CHECK(again.model().valuation() == spy.model().valuation());

  CHECK_THROWS_WITH_AS(load_model(R"({"states":["s1"],"uncertainty":[]})"),
                       "empty uncertainty set", ModelError);
  CHECK_THROWS_WITH_AS(
      load_model(R"({"states":["s1"],"relations":{"a":[["s1","x"]]},"uncertainty":["s1"]})"),
      doctest::Contains("'x'"), ModelError);
  CHECK_THROWS_AS(load_model(R"({"states":["s1","s1"],"uncertainty":["s1"]})"), ModelError);
  CHECK_THROWS_AS(load_model("{"), ModelError);
  CHECK_THROWS_AS(load_model(R"({"states":[],"uncertainty":[]})"), ModelError);

  const auto tiny = load_model(R"({"states":["w"],"relations":{"a":[]},"uncertainty":["w"]})");
  CHECK(tiny.model().actions() == std::vector<Action>{"a"});
  CHECK(update_belief(tiny.model(), tiny.uncertainty(), "a").none());
}

TEST_CASE("update agrees with the set definition") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto um = random_model(1 + seed % 6, 2, 1, 0.3, seed);
    const auto& m = um.model();
    std::set<std::size_t> u = oracle::members(um.uncertainty());
    Belief b = um.uncertainty();
    for (const char* a : {"a", "b", "a", "a"}) {
      const Belief next = update_belief(m, b, a);
      u = oracle::update(m, u, a);
      CHECK(oracle::members(next) == u);
      b = next;
    }
  }
}

TEST_CASE("update is a monotone left fold") {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto um = random_model(5, 2, 1, 0.35, seed);
    const auto& m = um.model();
    Belief small = um.uncertainty();
    Belief big = small | StateSet::singleton(5, seed % 5);
    ActionSequence sigma;
    for (int i = 0; i < 4; ++i) sigma.push_back(rng() % 2 ? "a" : "b");
    ActionSequence prefix(sigma.begin(), sigma.end() - 1);
    CHECK(update_belief_seq(m, small, sigma) ==
          update_belief(m, update_belief_seq(m, small, prefix), sigma.back()));
    for (const char* a : {"a", "b"})
      CHECK(update_belief(m, small, a).is_subset_of(update_belief(m, big, a)));
  }
}

TEST_CASE("qbf model belief shape") {
  const auto m3 = build_qbf_model(3);
  CHECK(update_belief_seq(m3.model(), m3.uncertainty(), {"a1", "na2"}) ==
        make_belief(m3.model(), {"x0", "x1", "nx2"}));
}

TEST_CASE("uncertainty maps reject bad sets") {
  KripkeModel m({"s1", "s2"});
  CHECK_THROWS_AS(UncertaintyMap(m, Belief(2)), ModelError);
  CHECK_THROWS_AS(UncertaintyMap(m, Belief(3)), ModelError);
  CHECK_THROWS_AS(KripkeModel(std::vector<std::string>{}), ModelError);
  CHECK_THROWS_WITH_AS(m.state_id("zz"), doctest::Contains("'zz'"), ModelError);
  CHECK(belief_to_string(m, Belief::full(2)) == "{s1,s2}");
}

}

#include <doctest.h>

#include "epdl/axioms.hpp"
#include "epdl/direct.hpp"
#include "epdl/fixtures.hpp"
#include "epdl/parser.hpp"

using namespace epdl;

TEST_SUITE("axioms") {

TEST_CASE("random models are reproducible") {
  const auto a = random_model(5, 2, 2, 0.3, 77);
  const auto b = random_model(5, 2, 2, 0.3, 77);
  CHECK(save_model(a) == save_model(b));
  CHECK(save_model(a) != save_model(random_model(5, 2, 2, 0.3, 78)));
  const auto one = random_model(1, 1, 1, 0.5, 3);
  CHECK(one.size() == 1);
  CHECK(one.uncertainty().count() == 1);
  const auto empty = random_model(4, 3, 1, 0.0, 5);
  for (const auto& [act, mat] : empty.model().relations()) CHECK_FALSE(mat.any());
  CHECK(empty.model().actions().size() == 3);
}

TEST_CASE("named instances hold on many models") {
  std::vector<UncertaintyMap> models;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    models.push_back(random_model(1 + seed % 5, 2, 2, 0.1 + 0.1 * static_cast<double>(seed % 5), seed));
  CHECK_FALSE(check_validity(parse_formula("K [a]p -> [a]K p"), models).has_value());
  CHECK_FALSE(check_validity(parse_formula("<a>K p -> K [a]p"), models).has_value());
  CHECK_FALSE(check_validity(parse_formula("K p -> K K p"), models).has_value());
}

TEST_CASE("observability fails") {
  const auto spy = fixture("spy");
  const auto& m = spy.model();
  const auto narrowed = spy.with_uncertainty(make_belief(m, {"s4", "s5"}));
  const Formula obs = parse_formula("K <r>T | K ~<r>T");
  const auto cex = check_validity(obs, {narrowed});
  REQUIRE(cex);
  CHECK_FALSE(sat(cex->map, cex->point, obs));
  CHECK(cex->map.size() <= 2);

  const auto report = soundness_suite(1, 300, std::string("OBS_a"));
  REQUIRE(report.results.size() == 1);
  CHECK(report.results[0].failed > 0);
  CHECK_FALSE(report.clean());
}

TEST_CASE("flipping no-miracles breaks it") {
  std::vector<UncertaintyMap> models;
  for (std::uint64_t seed = 0; seed < 200; ++seed) models.push_back(random_model(2, 1, 1, 0.4, seed));
  const auto cex = check_validity(parse_formula("K [a]p -> <a>K p"), models);
  REQUIRE(cex);
  CHECK_FALSE(sat(cex->map, cex->point, cex->formula));
}

TEST_CASE("suite is clean") {
  const auto report = soundness_suite(5, 150);
  CHECK(report.results.size() == sela_schemas().size() + derived_schemas().size());
  for (const auto& r : report.results) {
    INFO(r.schema);
    CHECK(r.failed == 0);
    CHECK(r.passed == 150);
  }
  CHECK(report.clean());
  CHECK(soundness_suite(5, 0).results.empty());
  CHECK_THROWS(soundness_suite(5, 1, std::string("NOPE")));
}

TEST_CASE("modus ponens preserves sample validity") {
  std::mt19937_64 rng(6);
  std::vector<UncertaintyMap> models;
  for (std::uint64_t seed = 0; seed < 60; ++seed) models.push_back(random_model(1 + seed % 4, 2, 2, 0.4, seed));
  FormulaOptions opt;
  opt.depth = 2;
  int premises = 0;
  for (int i = 0; i < 3000 && premises < 40; ++i) {
    const Formula phi = random_formula(rng, opt), psi = random_formula(rng, opt);
    if (check_validity(phi, models) || check_validity(implies(phi, psi), models)) continue;
    ++premises;
    CHECK_FALSE(check_validity(psi, models).has_value());
  }
  CHECK(premises > 0);
}

}

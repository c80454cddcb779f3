#pragma once

#include <optional>
#include <string_view>

#include "epdl/model.hpp"
#include "epdl/syntax.hpp"

namespace epdl {

enum class Engine { direct, contextual, ets };

std::optional<Engine> parse_engine(std::string_view name);
const char* engine_name(Engine e);

/// Contextual for star-free formulas, ETS otherwise.
Engine default_engine(const Formula& f);

/// M, s |= f with the chosen engine. s must lie in U.
bool check(const UncertaintyMap& m, StateId s, const Formula& f, Engine engine);

}  // namespace epdl

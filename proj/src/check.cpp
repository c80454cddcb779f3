#include "epdl/check.hpp"

#include "epdl/contextual.hpp"
#include "epdl/direct.hpp"
#include "epdl/ets.hpp"

namespace epdl {

std::optional<Engine> parse_engine(std::string_view name) {
  if (name == "direct") return Engine::direct;
  if (name == "contextual") return Engine::contextual;
  if (name == "ets") return Engine::ets;
  return std::nullopt;
}

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::direct:
      return "direct";
    case Engine::contextual:
      return "contextual";
    case Engine::ets:
      return "ets";
  }
  return "?";
}

Engine default_engine(const Formula& f) {
  return f.star_free() ? Engine::contextual : Engine::ets;
}

bool check(const UncertaintyMap& m, StateId s, const Formula& f, Engine engine) {
  switch (engine) {
    case Engine::direct:
      return sat(m, s, f);
    case Engine::contextual:
      return check_contextual(m, s, f);
    case Engine::ets:
      return check_full(m, s, f);
  }
  return false;
}

}  // namespace epdl

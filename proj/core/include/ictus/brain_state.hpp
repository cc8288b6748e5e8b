#pragma once

#include <string_view>

#include "ictus/errors.hpp"

namespace ictus {

enum class BrainState { Interictal = 0, Ictal = 1 };

inline const char* to_string(BrainState s) {
  return s == BrainState::Ictal ? "ictal" : "interictal";
}

inline BrainState parse_brain_state(std::string_view s) {
  if (s == "ictal") return BrainState::Ictal;
  if (s == "interictal") return BrainState::Interictal;
  throw ParseError("unknown state '" + std::string(s) + "' (expected ictal|interictal)");
}

}  // namespace ictus

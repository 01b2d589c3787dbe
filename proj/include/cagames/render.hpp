#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cagames/automaton.hpp"

namespace cagames {

enum class RenderFormat { Text, Pbm };

// Time flows upwards: the first emitted row is y = rows, the last is y = 0.
// Text uses '.' for 0 and '#' for 1. PBM is plain P1 with one unseparated
// digit row per line, e.g. "P1\n1 1\n1\n".
std::string render(const SpacetimeWindow& window, RenderFormat format);

// Reads a P1 image produced by render() (comments and arbitrary whitespace
// tolerated) back into a window anchored at x0.
SpacetimeWindow read_pbm(std::string_view bytes, std::int64_t x0 = 0);

}  // namespace cagames

#pragma once

#include <cstddef>
#include <optional>

namespace defset {

// Knobs shared by every exact search in the library.
struct SearchOptions {
  // Desk-scale guardrails: larger instances are refused with CapExceeded.
  int max_vars = 24;
  int max_vertices = 64;
  // Worker threads for same-size subset sweeps. Results do not depend on it.
  unsigned jobs = 1;
  // When set, searches stop once every candidate up to this size has been
  // rejected and report "not found" instead of continuing.
  std::optional<std::size_t> max_size;
};

}  // namespace defset

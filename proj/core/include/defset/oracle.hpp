#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "defset/cnf.hpp"
#include "defset/graph.hpp"
#include "defset/sat_defset.hpp"
#include "defset/color_defset.hpp"

// Brute-force reference answers. Nothing here calls the solvers; every
// function walks the full truth table or the full color table. Slow on
// purpose and only meant for tests and `verify`.
namespace defset::oracle {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxVertices = 12;

// Satisfying assignments as bitmasks (bit i-1 holds x_i), ascending.
std::vector<std::uint32_t> models(const CnfFormula& formula);
std::uint32_t to_mask(const PartialAssignment& total, int num_vars);

// Size of a smallest defining set of the anchor.
std::size_t min_defset_sat(const DefsetSatInstance& instance);
// Minimum over all anchors; nullopt for an unsatisfiable formula.
std::optional<std::size_t> min_defset_sat_family(const CnfFormula& formula);
bool is_defining_sat(const DefsetSatInstance& instance, const PartialAssignment& candidate);

bool exists_forall(const QuantifiedSplit& split);
bool exists_unique(const QuantifiedSplit& split);

// Proper colorings with exactly `colors` available colors, lexicographic.
std::vector<Coloring> colorings(const Graph& g, int colors);
int chromatic_number(const Graph& g);

std::size_t min_defset_coloring(const DefsetColorInstance& instance);
std::optional<std::size_t> min_defset_coloring_family(const Graph& g);
bool is_defining_coloring(const DefsetColorInstance& instance, const PartialColoring& candidate);

}  // namespace defset::oracle

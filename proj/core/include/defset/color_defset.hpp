#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "defset/graph.hpp"
#include "defset/options.hpp"

namespace defset {

// A graph, one of its chromatic_number-colorings and an optional budget.
class DefsetColorInstance {
 public:
  // Throws ContractViolation unless `anchor` is a proper coloring using
  // colors below the chromatic number.
  DefsetColorInstance(Graph graph, Coloring anchor, std::optional<std::size_t> budget = std::nullopt,
                      const SearchOptions& options = {});

  const Graph& graph() const { return graph_; }
  const Coloring& anchor() const { return anchor_; }
  int chromatic_number() const { return chi_; }
  std::optional<std::size_t> budget() const { return budget_; }

 private:
  Graph graph_;
  Coloring anchor_;
  int chi_ = 0;
  std::optional<std::size_t> budget_;
};

struct ColorDefiningSet {
  std::size_t size = 0;
  PartialColoring witness;
};

struct ColorFamilyDefiningSet {
  std::size_t size = 0;
  Coloring anchor;
  PartialColoring witness;
};

// Q1: the anchor is the only chromatic-number coloring containing
// `candidate`, which must agree with the anchor.
bool is_defining_coloring_set(const DefsetColorInstance& instance,
                              const PartialColoring& candidate, const SearchOptions& options = {});

// Q2: smallest defining set of the anchor, lexicographically smallest
// sorted vertex list among the minima.
std::optional<ColorDefiningSet> min_defining_coloring_set(const DefsetColorInstance& instance,
                                                          const SearchOptions& options = {});
bool has_defining_coloring_set(const DefsetColorInstance& instance, std::size_t k,
                               SearchOptions options = {});

// Q3: smallest partial coloring with exactly one chromatic-number extension.
std::optional<ColorFamilyDefiningSet> min_defining_coloring_family(const Graph& g,
                                                                   const SearchOptions& options = {});
bool family_has_defining_coloring_set(const Graph& g, std::size_t k, SearchOptions options = {});

// Vertices that can be recolored in the anchor with all others kept.
std::vector<int> necessary_vertices(const DefsetColorInstance& instance);

}  // namespace defset

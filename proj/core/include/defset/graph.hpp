#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "defset/options.hpp"

namespace defset {

// Simple undirected graph on vertices 0..n-1 with optional vertex labels.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);
  // Throws ContractViolation on self-loops or out-of-range endpoints;
  // repeated edges are merged.
  Graph(int num_vertices, const std::vector<std::pair<int, int>>& edges);

  int add_vertex(std::string label = {});
  // Returns false if the edge was already present.
  bool add_edge(int u, int v);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  std::size_t num_edges() const { return num_edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool adjacent(int u, int v) const;
  // Edges (u < v) in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  const std::string& label(int v) const { return labels_.at(v); }
  void set_label(int v, std::string label) { labels_.at(v) = std::move(label); }
  // Index of the vertex with this label, if any.
  std::optional<int> find_label(std::string_view label) const;

 private:
  std::vector<std::vector<int>> adjacency_;  // sorted
  std::vector<std::string> labels_;
  std::size_t num_edges_ = 0;
};

// Total vertex -> color map, colors 0..k-1.
using Coloring = std::vector<int>;

// Sparse vertex -> color map; the key set is the support.
class PartialColoring {
 public:
  PartialColoring() = default;
  explicit PartialColoring(std::map<int, int> colors);

  static PartialColoring restriction(const Coloring& coloring, const std::vector<int>& vertices);

  void set(int vertex, int color);
  std::optional<int> get(int vertex) const;
  bool contains(int vertex) const { return colors_.count(vertex) != 0; }
  std::size_t size() const { return colors_.size(); }
  bool empty() const { return colors_.empty(); }
  const std::map<int, int>& colors() const { return colors_; }
  std::vector<int> support() const;
  bool is_restriction_of(const Coloring& coloring) const;

  friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

 private:
  std::map<int, int> colors_;
};

// DIMACS edge format ("p edge n m", "e u v"), 1-based on disk.
Graph parse_dimacs_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string write_dimacs_graph(const Graph& g);

// Coloring files: lines "v <vertex> <color>", vertex 1-based, color 0-based.
PartialColoring parse_coloring(std::string_view text);
PartialColoring read_coloring_file(const std::string& path);
std::string write_coloring(const PartialColoring& coloring);
std::string write_coloring(const Coloring& coloring);

// Completes a partial coloring that binds every vertex of `g`.
Coloring to_total(const PartialColoring& coloring, const Graph& g);

bool is_proper(const Graph& g, const Coloring& coloring);

// Exact chromatic number by iterative deepening over k-colorability.
int chromatic_number(const Graph& g, const SearchOptions& options = {});

// Is there a proper coloring with `colors` colors extending `fixed`?
bool is_colorable(const Graph& g, int colors, const PartialColoring& fixed = {});

// Proper chromatic_number(g)-colorings extending `fixed`, lexicographic in the
// vertex-color vector, at most `limit` of them.
std::vector<Coloring> enumerate_colorings(const Graph& g, const PartialColoring& fixed,
                                          std::size_t limit, const SearchOptions& options = {});

// Number of proper `colors`-colorings extending `fixed`, saturating at `limit`.
std::size_t count_colorings(const Graph& g, int colors, const PartialColoring& fixed,
                            std::size_t limit);

// Greedy coloring in index order; an upper bound on the chromatic number.
int greedy_color_count(const Graph& g);
// Size of a maximum clique (exhaustive); a lower bound on the chromatic number.
int max_clique_size(const Graph& g);

}  // namespace defset

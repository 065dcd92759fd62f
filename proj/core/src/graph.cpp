#include "defset/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "color_search.hpp"
#include "defset/errors.hpp"

namespace defset {

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) throw ContractViolation("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(num_vertices));
  labels_.resize(static_cast<std::size_t>(num_vertices));
}

Graph::Graph(int num_vertices, const std::vector<std::pair<int, int>>& edges) : Graph(num_vertices) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

int Graph::add_vertex(std::string label) {
  adjacency_.emplace_back();
  labels_.push_back(std::move(label));
  return num_vertices() - 1;
}

bool Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    throw ContractViolation("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} out of range");
  }
  if (u == v) throw ContractViolation("self-loop at vertex " + std::to_string(u));
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++num_edges_;
  return true;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nu = adjacency_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(num_edges_);
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<int> Graph::find_label(std::string_view label) const {
  for (int v = 0; v < num_vertices(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

PartialColoring::PartialColoring(std::map<int, int> colors) : colors_(std::move(colors)) {
  for (const auto& [v, c] : colors_) {
    if (v < 0 || c < 0) throw ContractViolation("negative vertex or color");
  }
}

PartialColoring PartialColoring::restriction(const Coloring& coloring,
                                             const std::vector<int>& vertices) {
  PartialColoring out;
  for (int v : vertices) out.set(v, coloring.at(v));
  return out;
}

void PartialColoring::set(int vertex, int color) {
  if (vertex < 0 || color < 0) throw ContractViolation("negative vertex or color");
  colors_[vertex] = color;
}

std::optional<int> PartialColoring::get(int vertex) const {
  auto it = colors_.find(vertex);
  if (it == colors_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> PartialColoring::support() const {
  std::vector<int> out;
  for (const auto& entry : colors_) out.push_back(entry.first);
  return out;
}

bool PartialColoring::is_restriction_of(const Coloring& coloring) const {
  return std::all_of(colors_.begin(), colors_.end(), [&](const auto& e) {
    return e.first < static_cast<int>(coloring.size()) && coloring[e.first] == e.second;
  });
}

// ---------------------------------------------------------------------------

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Graph parse_dimacs_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  Graph g;
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind) || kind[0] == 'c') continue;
    if (kind == "p") {
      std::string format;
      if (have_header || !(fields >> format >> n >> m) || (format != "edge" && format != "col") ||
          n < 0 || m < 0) {
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      }
      have_header = true;
      g = Graph(static_cast<int>(n));
    } else if (kind == "e") {
      long long u = 0, v = 0;
      if (!have_header) throw ParseError(line_no, "edge before 'p edge' header");
      if (!(fields >> u >> v)) throw ParseError(line_no, "malformed edge line");
      if (u < 1 || v < 1 || u > n || v > n) throw ParseError(line_no, "edge endpoint out of range");
      if (u == v) throw ParseError(line_no, "self-loop");
      g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
      ++seen;
    } else {
      throw ParseError(line_no, "unexpected line '" + line + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p edge' header");
  if (static_cast<long long>(seen) != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(seen));
  }
  return g;
}

Graph read_graph_file(const std::string& path) { return parse_dimacs_graph(slurp(path)); }

std::string write_dimacs_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

PartialColoring parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  PartialColoring out;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind) || kind[0] == 'c') continue;
    long long v = 0, c = 0;
    if (kind != "v" || !(fields >> v >> c) || v < 1 || c < 0) {
      throw ParseError(line_no, "expected 'v <vertex> <color>'");
    }
    if (out.contains(static_cast<int>(v - 1))) {
      throw ParseError(line_no, "vertex " + std::to_string(v) + " colored twice");
    }
    out.set(static_cast<int>(v - 1), static_cast<int>(c));
  }
  return out;
}

PartialColoring read_coloring_file(const std::string& path) { return parse_coloring(slurp(path)); }

std::string write_coloring(const PartialColoring& coloring) {
  std::ostringstream out;
  for (const auto& [v, c] : coloring.colors()) out << "v " << v + 1 << ' ' << c << '\n';
  return out.str();
}

std::string write_coloring(const Coloring& coloring) {
  std::ostringstream out;
  for (std::size_t v = 0; v < coloring.size(); ++v) out << "v " << v + 1 << ' ' << coloring[v] << '\n';
  return out.str();
}

Coloring to_total(const PartialColoring& coloring, const Graph& g) {
  Coloring out(static_cast<std::size_t>(g.num_vertices()), -1);
  for (const auto& [v, c] : coloring.colors()) {
    if (v >= g.num_vertices()) throw ContractViolation("colored vertex out of range");
    out[v] = c;
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (out[v] < 0) throw ContractViolation("vertex " + std::to_string(v + 1) + " has no color");
  }
  return out;
}

bool is_proper(const Graph& g, const Coloring& coloring) {
  if (static_cast<int>(coloring.size()) != g.num_vertices()) return false;
  for (int c : coloring) {
    if (c < 0) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    if (coloring[u] == coloring[v]) return false;
  }
  return true;
}

bool is_colorable(const Graph& g, int colors, const PartialColoring& fixed) {
  if (g.num_vertices() == 0) return true;
  detail::ColorValues values = detail::to_color_values(g, fixed);
  if (fixed.empty() && colors > 0) {
    // Any coloring can be relabeled so the busiest vertex gets color 0.
    int hub = 0;
    for (int v = 1; v < g.num_vertices(); ++v) {
      if (g.degree(v) > g.degree(hub)) hub = v;
    }
    values[hub] = 0;
  }
  return detail::ColorSearch(g, colors).count(values, 1) == 1;
}

int chromatic_number(const Graph& g, const SearchOptions& options) {
  if (g.num_vertices() > options.max_vertices) {
    throw CapExceeded("graph has " + std::to_string(g.num_vertices()) + " vertices, cap is " +
                      std::to_string(options.max_vertices));
  }
  if (g.num_vertices() == 0) return 0;
  for (int k = 1;; ++k) {
    if (is_colorable(g, k)) return k;
  }
}

std::vector<Coloring> enumerate_colorings(const Graph& g, const PartialColoring& fixed,
                                          std::size_t limit, const SearchOptions& options) {
  const int chi = chromatic_number(g, options);
  std::vector<Coloring> out;
  detail::ColorSearch(g, chi).enumerate(detail::to_color_values(g, fixed), limit,
                                        [&](const Coloring& c) {
                                          out.push_back(c);
                                          return true;
                                        });
  return out;
}

std::size_t count_colorings(const Graph& g, int colors, const PartialColoring& fixed,
                            std::size_t limit) {
  return detail::ColorSearch(g, colors).count(detail::to_color_values(g, fixed), limit);
}

int greedy_color_count(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.num_vertices()), -1);
  int used = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<bool> taken(static_cast<std::size_t>(used) + 1, false);
    for (int u : g.neighbors(v)) {
      if (color[u] >= 0) taken[color[u]] = true;
    }
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

namespace {

void grow_clique(const Graph& g, std::vector<int>& clique, const std::vector<int>& candidates,
                 int& best) {
  best = std::max(best, static_cast<int>(clique.size()));
  if (static_cast<int>(clique.size() + candidates.size()) <= best) return;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const int v = candidates[i];
    std::vector<int> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
    }
    clique.push_back(v);
    grow_clique(g, clique, next, best);
    clique.pop_back();
  }
}

}  // namespace

int max_clique_size(const Graph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
  std::vector<int> clique;
  int best = 0;
  grow_clique(g, clique, all, best);
  return best;
}

}  // namespace defset

#include "defset/color_reductions.hpp"

#include <sstream>

#include "color_search.hpp"
#include "defset/errors.hpp"

namespace defset {

namespace {

ClauseGadget make_clause_gadget() {
  // v1 is the complement of a2. v2, v3 copy a1, a3 through while v1 = 0
  // (a2 true pins them to 2). v4, v5, v6 compute an OR of the copies, and v7
  // feeds it past a2 into the output.
  ClauseGadget g;
  g.roles = {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"};
  g.internal_edges = {
      {1, 0}, {2, 0},
      {3, 1}, {4, 2}, {3, 4},
      {5, 3}, {5, 4},
      {6, 5}, {7, 6},
  };
  g.boundary_edges = {
      {0, Terminal::w2}, {0, Terminal::a2},
      {1, Terminal::a1}, {1, Terminal::w1},
      {2, Terminal::a3}, {2, Terminal::w1},
      {3, Terminal::w0}, {4, Terminal::w1},
      {6, Terminal::a2},
      {7, Terminal::w0}, {7, Terminal::w2},
  };
  return g;
}

constexpr int terminal_index(Terminal t) { return static_cast<int>(t); }

// Counts interior colorings for one boundary, optionally recording them.
std::size_t count_interior(const ClauseGadget& gadget, const std::array<int, 6>& boundary,
                           bool drop_output_w0, std::vector<std::array<int, 8>>* out) {
  std::size_t total = 0;
  std::array<int, 8> col{};
  int combos = 1;
  for (int i = 0; i < ClauseGadget::kInterior; ++i) combos *= 3;
  for (int code = 0; code < combos; ++code) {
    int rest = code;
    for (int i = 0; i < ClauseGadget::kInterior; ++i) {
      col[i] = rest % 3;
      rest /= 3;
    }
    bool ok = true;
    for (const auto& [u, v] : gadget.internal_edges) {
      if (col[u] == col[v]) {
        ok = false;
        break;
      }
    }
    for (const auto& [u, t] : gadget.boundary_edges) {
      if (!ok) break;
      if (drop_output_w0 && u == ClauseGadget::kOutput && t == Terminal::w0) continue;
      if (col[u] == boundary[terminal_index(t)]) ok = false;
    }
    if (!ok) continue;
    ++total;
    if (out) out->push_back(col);
  }
  return total;
}

}  // namespace

const ClauseGadget& clause_gadget() {
  static const ClauseGadget gadget = make_clause_gadget();
  return gadget;
}

GadgetReport verify_clause_gadget(const ClauseGadget& gadget) {
  GadgetReport r;
  r.extend = r.force = r.unique = r.rigid = true;
  std::optional<std::array<int, 8>> rigid_coloring;

  for (int bits = 0; bits < 8; ++bits) {
    const int a1 = bits >> 2 & 1, a2 = bits >> 1 & 1, a3 = bits & 1;
    const std::array<int, 6> boundary{a1, a2, a3, 0, 1, 2};
    std::vector<std::array<int, 8>> colorings;
    r.extensions[bits] = count_interior(gadget, boundary, false, &colorings);
    const std::string tag = "(" + std::to_string(a1) + "," + std::to_string(a2) + "," +
                            std::to_string(a3) + ")";
    if (bits == 0) {
      if (r.extensions[bits] != 0) {
        r.force = false;
        r.failures.push_back("all-zero boundary " + tag + " extends");
      }
      std::vector<std::array<int, 8>> relaxed;
      count_interior(gadget, boundary, true, &relaxed);
      for (const auto& c : relaxed) {
        if (c[ClauseGadget::kOutput] != 0) {
          r.force = false;
          r.failures.push_back("all-zero boundary leaves the output unforced");
          break;
        }
      }
      if (relaxed.empty()) {
        r.force = false;
        r.failures.push_back("all-zero boundary has no extension even without the w0 edge");
      }
      continue;
    }
    if (r.extensions[bits] == 0) {
      r.extend = false;
      r.failures.push_back("boundary " + tag + " does not extend");
    }
    if (a2 == 1) {
      if (r.extensions[bits] != 1) {
        r.unique = false;
        r.failures.push_back("boundary " + tag + " has " + std::to_string(r.extensions[bits]) +
                             " interior colorings");
      } else if (!rigid_coloring) {
        rigid_coloring = colorings.front();
      } else if (*rigid_coloring != colorings.front()) {
        r.rigid = false;
        r.failures.push_back("interior for " + tag + " differs from the other a2=1 cases");
      }
    }
  }
  if (!r.unique) r.rigid = false;
  return r;
}

GPhiArtifact build_g_phi(const CnfFormula& phi, const std::optional<PartialAssignment>& t,
                         const SearchOptions& options) {
  const CnfFormula padded = normalize_width(phi, 3);
  if (t && !is_proper_total(phi, *t)) {
    throw ContractViolation("build_g_phi: anchor is not a total satisfying assignment");
  }

  GPhiArtifact out;
  Graph& g = out.graph;
  const int w0 = g.add_vertex("w0"), w1 = g.add_vertex("w1"), w2 = g.add_vertex("w2");
  g.add_edge(w0, w1);
  g.add_edge(w1, w2);
  g.add_edge(w0, w2);
  const int wp[4] = {g.add_vertex("w'1"), g.add_vertex("w'2"), g.add_vertex("w'3"),
                     g.add_vertex("w'4")};
  g.add_edge(wp[0], w0);
  g.add_edge(wp[1], w0);
  g.add_edge(wp[2], w1);
  g.add_edge(wp[3], w1);

  std::vector<int> u_pos(static_cast<std::size_t>(phi.num_vars()) + 1);
  std::vector<int> u_neg(static_cast<std::size_t>(phi.num_vars()) + 1);
  for (int x = 1; x <= phi.num_vars(); ++x) {
    u_pos[x] = g.add_vertex("u[x" + std::to_string(x) + "]");
    u_neg[x] = g.add_vertex("u[~x" + std::to_string(x) + "]");
    g.add_edge(u_pos[x], u_neg[x]);
    g.add_edge(u_pos[x], w2);
    g.add_edge(u_neg[x], w2);
  }
  auto literal_vertex = [&](Literal lit) { return lit > 0 ? u_pos[lit] : u_neg[-lit]; };

  const ClauseGadget& gadget = clause_gadget();
  for (std::size_t i = 0; i < padded.num_clauses(); ++i) {
    const Clause& c = padded.clause(i);
    std::array<Literal, 3> lits{c[0], c[1], c[2]};
    if (t) {
      int first_true = -1;
      for (int j = 0; j < 3 && first_true < 0; ++j) {
        if (*t->get(var_of(lits[j])) == (lits[j] > 0)) first_true = j;
      }
      // Cyclic rotation moving slot first_true to the middle slot.
      std::array<Literal, 3> rotated{};
      for (int j = 0; j < 3; ++j) rotated[j] = lits[(j + first_true + 2) % 3];
      lits = rotated;
    }
    out.oriented_clauses.push_back(lits);

    std::array<int, ClauseGadget::kInterior> interior{};
    for (int j = 0; j < ClauseGadget::kInterior; ++j) {
      interior[j] = g.add_vertex("gadget[" + std::to_string(i + 1) + "]." + gadget.roles[j]);
    }
    for (const auto& [a, b] : gadget.internal_edges) g.add_edge(interior[a], interior[b]);
    const std::array<int, 6> terminals{literal_vertex(lits[0]), literal_vertex(lits[1]),
                                       literal_vertex(lits[2]), w0, w1, w2};
    for (const auto& [a, term] : gadget.boundary_edges) {
      g.add_edge(interior[a], terminals[terminal_index(term)]);
    }
  }

  if (t) {
    detail::ColorValues fixed(static_cast<std::size_t>(g.num_vertices()), -1);
    fixed[w0] = 0;
    fixed[w1] = 1;
    fixed[w2] = 2;
    fixed[wp[0]] = 1;
    fixed[wp[1]] = 2;
    fixed[wp[2]] = 0;
    fixed[wp[3]] = 2;
    for (int x = 1; x <= phi.num_vars(); ++x) {
      const bool value = *t->get(x);
      fixed[u_pos[x]] = value ? 1 : 0;
      fixed[u_neg[x]] = value ? 0 : 1;
    }
    std::vector<Coloring> found;
    detail::ColorSearch(g, 3).enumerate(fixed, 2, [&](const Coloring& c) {
      found.push_back(c);
      return true;
    });
    if (found.size() != 1) {
      throw ContractViolation("build_g_phi: gadget interiors not uniquely determined (" +
                              std::to_string(found.size()) + " completions)");
    }
    out.coloring = std::move(found.front());
    if (g.num_vertices() <= options.max_vertices && chromatic_number(g, options) != 3) {
      throw ContractViolation("build_g_phi: chromatic number is not 3 (construction bug)");
    }
  }
  return out;
}

HArtifact build_h(const Graph& g, const Coloring& c, std::size_t k, const SearchOptions& options) {
  if (chromatic_number(g, options) != 3) {
    throw ContractViolation("build_h needs a graph with chromatic number 3");
  }
  if (!is_proper(g, c)) throw ContractViolation("build_h: coloring is not proper");
  for (int col : c) {
    if (col > 2) throw ContractViolation("build_h: coloring must use colors {0,1,2}");
  }

  HArtifact out;
  Graph& h = out.graph;
  Coloring& anchor = out.anchor;
  const int n = g.num_vertices();
  for (int v = 0; v < n; ++v) {
    h.add_vertex(g.label(v).empty() ? "g" + std::to_string(v + 1) : g.label(v));
    anchor.push_back(c[v]);
  }
  for (const auto& [u, v] : g.edges()) h.add_edge(u, v);

  int w[3];
  for (int i = 0; i < 3; ++i) {
    w[i] = h.add_vertex("w" + std::to_string(i));
    anchor.push_back(i);
  }
  h.add_edge(w[0], w[1]);
  h.add_edge(w[1], w[2]);
  h.add_edge(w[0], w[2]);

  for (int u = 0; u < n; ++u) {
    for (int col = 0; col < 3; ++col) {
      if (col == c[u]) continue;
      for (std::size_t rep = 1; rep <= k + 1; ++rep) {
        const int p = h.add_vertex("p[" + std::to_string(u + 1) + "," + std::to_string(col) + "," +
                                   std::to_string(rep) + "]");
        h.add_edge(p, u);
        h.add_edge(p, w[col]);
        anchor.push_back(3 - c[u] - col);
      }
    }
  }

  const int wp_colors[4] = {1, 2, 0, 2};
  for (int i = 0; i < 4; ++i) {
    const int p = h.add_vertex("w'" + std::to_string(i + 1));
    h.add_edge(p, i < 2 ? w[0] : w[1]);
    anchor.push_back(wp_colors[i]);
  }
  out.budget_out = k + 4;
  if (!is_proper(h, anchor)) throw ContractViolation("build_h: anchor is not proper (construction bug)");
  return out;
}

std::string write_vertex_provenance(const Graph& g) {
  std::ostringstream out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << "vertex " << v + 1 << " role " << (g.label(v).empty() ? "-" : g.label(v)) << '\n';
  }
  return out.str();
}

}  // namespace defset

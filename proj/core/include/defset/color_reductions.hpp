#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "defset/cnf.hpp"
#include "defset/graph.hpp"
#include "defset/options.hpp"

namespace defset {

// Attachment points of a clause gadget: the three literal vertices and the
// palette triangle (colored 0, 1, 2 in the anchor).
enum class Terminal { a1, a2, a3, w0, w1, w2 };

// Eight-vertex 3-coloring gadget for one clause (a1 v a2 v a3). Literal
// vertices carry 1 for true and 0 for false. Interior vertex 7 is the
// output; it is joined to w0 and w2 so it must take color 1.
//
// Contract, checked exhaustively by verify_clause_gadget:
//   EXTEND  every {0,1} boundary except (0,0,0) extends to the interior;
//   FORCE   with (0,0,0) the output is forced to 0 (once its w0 edge is
//           dropped), so the full gadget has no extension;
//   UNIQUE  with a2 = 1 the interior coloring is unique;
//   RIGID   and it is the same for all four values of (a1, a3).
// RIGID is what lets a defining set trade any interior vertex for a2.
struct ClauseGadget {
  static constexpr int kInterior = 8;
  static constexpr int kOutput = 7;

  std::array<std::string, kInterior> roles;
  std::vector<std::pair<int, int>> internal_edges;
  std::vector<std::pair<int, Terminal>> boundary_edges;
};

// The frozen gadget shipped with the library.
const ClauseGadget& clause_gadget();

struct GadgetReport {
  bool extend = false;
  bool force = false;
  bool unique = false;
  bool rigid = false;
  // Extension counts for boundary (a1,a2,a3) = bits (4,2,1) of the index.
  std::array<std::size_t, 8> extensions{};
  std::vector<std::string> failures;

  bool ok() const { return extend && force && unique && rigid; }
};

// Brute force over all 3^8 interior colorings for each boundary case.
GadgetReport verify_clause_gadget(const ClauseGadget& gadget);

struct GPhiArtifact {
  Graph graph;                         // labels carry provenance
  std::optional<Coloring> coloring;    // c_t, when an anchor was given
  std::vector<std::array<Literal, 3>> oriented_clauses;
};

// Graph that is 3-colorable iff `phi` is satisfiable. With an anchor t, each
// clause is rotated so its first true literal sits in the middle slot, and
// the coloring c_t is built and checked. Clauses are padded to three slots.
GPhiArtifact build_g_phi(const CnfFormula& phi,
                         const std::optional<PartialAssignment>& t = std::nullopt,
                         const SearchOptions& options = {});

struct HArtifact {
  Graph graph;        // labels carry provenance
  Coloring anchor;    // extension of c used by the size argument
  std::size_t budget_out = 0;  // k + 4
};

// Pads a 3-chromatic graph so that the family question at k+4 matches the
// anchored question for (g, c) at k.
HArtifact build_h(const Graph& g, const Coloring& c, std::size_t k,
                  const SearchOptions& options = {});

// Vertex sidecar: "vertex <idx> role <label>", 1-based.
std::string write_vertex_provenance(const Graph& g);

}  // namespace defset

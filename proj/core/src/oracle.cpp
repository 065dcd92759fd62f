#include "defset/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "defset/errors.hpp"

namespace defset::oracle {

namespace {

void check_vars(int n) {
  if (n > kMaxVars) {
    throw CapExceeded("oracle handles at most " + std::to_string(kMaxVars) + " variables");
  }
}

void check_vertices(int n) {
  if (n > kMaxVertices) {
    throw CapExceeded("oracle handles at most " + std::to_string(kMaxVertices) + " vertices");
  }
}

bool satisfies(const CnfFormula& formula, std::uint32_t mask) {
  for (const auto& clause : formula.clauses()) {
    bool ok = false;
    for (Literal lit : clause) {
      const bool value = (mask >> (var_of(lit) - 1)) & 1;
      if (value == (lit > 0)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

// Smallest |D| such that exactly one entry of `agree` contains D, where
// agree[j] is the set of positions on which member j matches the anchor.
std::size_t min_hitting(const std::vector<std::uint32_t>& agree, int width) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const std::uint32_t full = width == 32 ? ~0u : (1u << width) - 1;
  for (std::uint32_t d = 0;; ++d) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(d));
    if (size < best) {
      std::size_t hits = 0;
      for (std::uint32_t a : agree) {
        if ((d & a) == d) ++hits;
      }
      if (hits == 1) best = size;
    }
    if (d == full) break;
  }
  return best;
}

std::vector<std::uint32_t> agreement(const std::vector<std::uint32_t>& all, std::uint32_t anchor,
                                     int width) {
  const std::uint32_t full = (1u << width) - 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t m : all) out.push_back(~(m ^ anchor) & full);
  return out;
}

std::uint32_t agreement(const Coloring& a, const Coloring& b) {
  std::uint32_t mask = 0;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] == b[v]) mask |= 1u << v;
  }
  return mask;
}

}  // namespace

std::vector<std::uint32_t> models(const CnfFormula& formula) {
  check_vars(formula.num_vars());
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << formula.num_vars()); ++m) {
    if (satisfies(formula, m)) out.push_back(m);
  }
  return out;
}

std::uint32_t to_mask(const PartialAssignment& total, int num_vars) {
  std::uint32_t mask = 0;
  for (int v = 1; v <= num_vars; ++v) {
    const auto value = total.get(v);
    if (!value) throw ContractViolation("oracle: assignment is not total");
    if (*value) mask |= 1u << (v - 1);
  }
  return mask;
}

std::size_t min_defset_sat(const DefsetSatInstance& instance) {
  const int n = instance.formula().num_vars();
  const auto all = models(instance.formula());
  return min_hitting(agreement(all, to_mask(instance.anchor(), n), n), n);
}

std::optional<std::size_t> min_defset_sat_family(const CnfFormula& formula) {
  const int n = formula.num_vars();
  const auto all = models(formula);
  std::optional<std::size_t> best;
  for (std::uint32_t anchor : all) {
    const std::size_t size = min_hitting(agreement(all, anchor, n), n);
    if (!best || size < *best) best = size;
  }
  return best;
}

bool is_defining_sat(const DefsetSatInstance& instance, const PartialAssignment& candidate) {
  std::size_t hits = 0;
  for (std::uint32_t m : models(instance.formula())) {
    bool agrees = true;
    for (const auto& [v, value] : candidate.bindings()) {
      if ((((m >> (v - 1)) & 1) != 0) != value) agrees = false;
    }
    if (agrees) ++hits;
  }
  return hits == 1;
}

namespace {

// For each assignment of the outer block, the number of models extending it.
std::vector<std::size_t> completions_per_outer(const QuantifiedSplit& split) {
  const auto& xs = split.x_vars;
  std::vector<std::size_t> counts(std::size_t{1} << xs.size(), 0);
  for (std::uint32_t m : models(split.formula)) {
    std::size_t key = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if ((m >> (xs[i] - 1)) & 1) key |= std::size_t{1} << i;
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

bool exists_forall(const QuantifiedSplit& split) {
  const auto counts = completions_per_outer(split);
  return std::find(counts.begin(), counts.end(), 0) != counts.end();
}

bool exists_unique(const QuantifiedSplit& split) {
  const auto counts = completions_per_outer(split);
  return std::find(counts.begin(), counts.end(), 1) != counts.end();
}

std::vector<Coloring> colorings(const Graph& g, int colors) {
  check_vertices(g.num_vertices());
  const int n = g.num_vertices();
  std::vector<Coloring> out;
  if (colors <= 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  Coloring c(static_cast<std::size_t>(n), 0);
  const auto edges = g.edges();
  while (true) {
    bool ok = true;
    for (const auto& [u, v] : edges) {
      if (c[u] == c[v]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(c);
    int pos = n - 1;
    while (pos >= 0 && c[pos] == colors - 1) c[pos--] = 0;
    if (pos < 0) break;
    ++c[pos];
  }
  return out;
}

int chromatic_number(const Graph& g) {
  check_vertices(g.num_vertices());
  if (g.num_vertices() == 0) return 0;
  for (int k = 1;; ++k) {
    if (!colorings(g, k).empty()) return k;
  }
}

std::size_t min_defset_coloring(const DefsetColorInstance& instance) {
  const Graph& g = instance.graph();
  const auto all = colorings(g, oracle::chromatic_number(g));
  std::vector<std::uint32_t> agree;
  for (const auto& c : all) agree.push_back(agreement(c, instance.anchor()));
  return min_hitting(agree, g.num_vertices());
}

std::optional<std::size_t> min_defset_coloring_family(const Graph& g) {
  const auto all = colorings(g, oracle::chromatic_number(g));
  std::optional<std::size_t> best;
  for (const auto& anchor : all) {
    std::vector<std::uint32_t> agree;
    for (const auto& c : all) agree.push_back(agreement(c, anchor));
    const std::size_t size = min_hitting(agree, g.num_vertices());
    if (!best || size < *best) best = size;
  }
  return best;
}

bool is_defining_coloring(const DefsetColorInstance& instance, const PartialColoring& candidate) {
  const Graph& g = instance.graph();
  std::size_t hits = 0;
  for (const auto& c : colorings(g, oracle::chromatic_number(g))) {
    if (candidate.is_restriction_of(c)) ++hits;
  }
  return hits == 1;
}

}  // namespace defset::oracle

#include "defset/color_defset.hpp"

#include <algorithm>
#include <string>

#include "color_search.hpp"
#include "defset/errors.hpp"
#include "parallel.hpp"

namespace defset {

namespace {

void check_cap(const Graph& g, const SearchOptions& options) {
  if (g.num_vertices() > options.max_vertices) {
    throw CapExceeded("graph has " + std::to_string(g.num_vertices()) + " vertices, cap is " +
                      std::to_string(options.max_vertices));
  }
}

std::vector<int> merge_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> complement(int n, const std::vector<int>& taken) {
  std::vector<int> out;
  std::size_t j = 0;
  for (int v = 0; v < n; ++v) {
    if (j < taken.size() && taken[j] == v) {
      ++j;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

// Advances `colors` to the next restricted-growth string over `k` colors
// (first occurrence of each color in increasing order). These are the
// lexicographically smallest members of their color-permutation orbits.
bool next_growth_string(std::vector<int>& colors, int k) {
  const int d = static_cast<int>(colors.size());
  for (int i = d - 1; i >= 1; --i) {
    int prefix_max = -1;
    for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, colors[j]);
    if (colors[i] < std::min(k - 1, prefix_max + 1)) {
      ++colors[i];
      std::fill(colors.begin() + i + 1, colors.end(), 0);
      return true;
    }
  }
  return false;
}

}  // namespace

DefsetColorInstance::DefsetColorInstance(Graph graph, Coloring anchor,
                                         std::optional<std::size_t> budget,
                                         const SearchOptions& options)
    : graph_(std::move(graph)), anchor_(std::move(anchor)), budget_(budget) {
  chi_ = defset::chromatic_number(graph_, options);
  if (!is_proper(graph_, anchor_)) throw ContractViolation("anchor is not a proper coloring");
  for (int c : anchor_) {
    if (c >= chi_) {
      throw ContractViolation("anchor uses color " + std::to_string(c) + " but chromatic number is " +
                              std::to_string(chi_));
    }
  }
}

std::vector<int> necessary_vertices(const DefsetColorInstance& instance) {
  const Graph& g = instance.graph();
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<bool> used(static_cast<std::size_t>(instance.chromatic_number()), false);
    for (int u : g.neighbors(v)) used[instance.anchor()[u]] = true;
    for (int c = 0; c < instance.chromatic_number(); ++c) {
      if (c != instance.anchor()[v] && !used[c]) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

bool is_defining_coloring_set(const DefsetColorInstance& instance,
                              const PartialColoring& candidate, const SearchOptions& options) {
  check_cap(instance.graph(), options);
  if (!candidate.is_restriction_of(instance.anchor())) {
    throw ContractViolation("candidate is not a restriction of the anchor");
  }
  return count_colorings(instance.graph(), instance.chromatic_number(), candidate, 2) == 1;
}

std::optional<ColorDefiningSet> min_defining_coloring_set(const DefsetColorInstance& instance,
                                                          const SearchOptions& options) {
  const Graph& g = instance.graph();
  check_cap(g, options);
  const detail::ColorSearch search(g, instance.chromatic_number());
  const std::vector<int> forced = necessary_vertices(instance);
  const std::vector<int> pool = complement(g.num_vertices(), forced);
  const auto n = static_cast<std::size_t>(g.num_vertices());
  const std::size_t limit = std::min(n, options.max_size.value_or(n));

  for (std::size_t d = forced.size(); d <= limit; ++d) {
    std::function<std::optional<bool>(const std::vector<int>&)> probe =
        [&](const std::vector<int>& extra) -> std::optional<bool> {
      detail::ColorValues values(n, -1);
      for (int v : forced) values[v] = instance.anchor()[v];
      for (int v : extra) values[v] = instance.anchor()[v];
      if (search.count(values, 2) == 1) return true;
      return std::nullopt;
    };
    if (auto hit = detail::first_subset_hit(pool, d - forced.size(), options.jobs, probe)) {
      return ColorDefiningSet{
          d, PartialColoring::restriction(instance.anchor(), merge_sorted(forced, hit->first))};
    }
  }
  return std::nullopt;
}

bool has_defining_coloring_set(const DefsetColorInstance& instance, std::size_t k,
                               SearchOptions options) {
  options.max_size = k;
  return min_defining_coloring_set(instance, options).has_value();
}

std::optional<ColorFamilyDefiningSet> min_defining_coloring_family(const Graph& g,
                                                                   const SearchOptions& options) {
  check_cap(g, options);
  const int chi = chromatic_number(g, options);
  const detail::ColorSearch search(g, chi);

  // A vertex with fewer than chi-1 neighbors can always be recolored.
  std::vector<int> forced;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) < chi - 1) forced.push_back(v);
  }
  const std::vector<int> pool = complement(g.num_vertices(), forced);
  const auto n = static_cast<std::size_t>(g.num_vertices());
  const std::size_t limit = std::min(n, options.max_size.value_or(n));

  for (std::size_t d = forced.size(); d <= limit; ++d) {
    std::function<std::optional<std::vector<int>>(const std::vector<int>&)> probe =
        [&](const std::vector<int>& extra) -> std::optional<std::vector<int>> {
      const std::vector<int> vertices = merge_sorted(forced, extra);
      std::vector<int> colors(vertices.size(), 0);
      detail::ColorValues values(n, -1);
      do {
        bool clash = false;
        for (std::size_t i = 0; i < vertices.size() && !clash; ++i) {
          for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (colors[i] == colors[j] && g.adjacent(vertices[i], vertices[j])) {
              clash = true;
              break;
            }
          }
        }
        if (clash) continue;
        for (std::size_t i = 0; i < vertices.size(); ++i) values[vertices[i]] = colors[i];
        if (search.count(values, 2) == 1) return colors;
      } while (next_growth_string(colors, chi));
      return std::nullopt;
    };
    if (auto hit = detail::first_subset_hit(pool, d - forced.size(), options.jobs, probe)) {
      const std::vector<int> vertices = merge_sorted(forced, hit->first);
      PartialColoring witness;
      for (std::size_t i = 0; i < vertices.size(); ++i) witness.set(vertices[i], hit->second[i]);
      Coloring anchor;
      search.enumerate(detail::to_color_values(g, witness), 1, [&](const Coloring& c) {
        anchor = c;
        return false;
      });
      return ColorFamilyDefiningSet{d, std::move(anchor), std::move(witness)};
    }
  }
  return std::nullopt;
}

bool family_has_defining_coloring_set(const Graph& g, std::size_t k, SearchOptions options) {
  options.max_size = k;
  return min_defining_coloring_family(g, options).has_value();
}

}  // namespace defset

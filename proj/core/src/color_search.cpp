#include "color_search.hpp"

#include <bit>

#include "defset/errors.hpp"

namespace defset::detail {

ColorValues to_color_values(const Graph& g, const PartialColoring& fixed) {
  ColorValues values(static_cast<std::size_t>(g.num_vertices()), -1);
  for (const auto& [v, c] : fixed.colors()) {
    if (v < 0 || v >= g.num_vertices()) {
      throw ContractViolation("vertex " + std::to_string(v) + " out of range");
    }
    values[v] = c;
  }
  return values;
}

ColorSearch::ColorSearch(const Graph& g, int colors) : graph_(g), colors_(colors) {
  if (colors < 0 || colors > 32) throw ContractViolation("color count must be in [0, 32]");
}

bool ColorSearch::restrict_neighbors(Domains& domains, const std::vector<int>& assigned, int v,
                                     int color) const {
  const std::uint32_t bit = std::uint32_t{1} << color;
  for (int u : graph_.neighbors(v)) {
    if (assigned[u] >= 0) {
      if (assigned[u] == color) return false;
      continue;
    }
    domains[u] &= ~bit;
    if (domains[u] == 0) return false;
  }
  return true;
}

bool ColorSearch::init(const ColorValues& fixed, Domains& domains,
                       std::vector<int>& assigned) const {
  const int n = graph_.num_vertices();
  const std::uint32_t full = colors_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << colors_) - 1;
  domains.assign(static_cast<std::size_t>(n), full);
  assigned.assign(static_cast<std::size_t>(n), -1);
  if (n > 0 && colors_ == 0) return false;
  for (int v = 0; v < n; ++v) {
    const int c = fixed[v];
    if (c < 0) continue;
    if (c >= colors_ || !(domains[v] >> c & 1u)) return false;
    assigned[v] = c;
    domains[v] = std::uint32_t{1} << c;
    if (!restrict_neighbors(domains, assigned, v, c)) return false;
  }
  return true;
}

std::size_t ColorSearch::count(const ColorValues& fixed, std::size_t limit) const {
  if (limit == 0) return 0;
  Domains domains;
  std::vector<int> assigned;
  if (!init(fixed, domains, assigned)) return 0;
  int remaining = 0;
  for (int c : assigned) remaining += c < 0 ? 1 : 0;
  return count_rec(domains, assigned, remaining, limit);
}

std::size_t ColorSearch::count_rec(Domains& domains, std::vector<int>& assigned, int remaining,
                                   std::size_t limit) const {
  if (remaining == 0) return 1;
  int best = -1;
  int best_size = 64;
  for (int v = 0; v < graph_.num_vertices(); ++v) {
    if (assigned[v] >= 0) continue;
    const int size = std::popcount(domains[v]);
    if (size < best_size) {
      best = v;
      best_size = size;
      if (size <= 1) break;
    }
  }
  std::size_t total = 0;
  std::uint32_t dom = domains[best];
  while (dom != 0 && total < limit) {
    const int c = std::countr_zero(dom);
    dom &= dom - 1;
    Domains next = domains;
    assigned[best] = c;
    next[best] = std::uint32_t{1} << c;
    if (restrict_neighbors(next, assigned, best, c)) {
      total += count_rec(next, assigned, remaining - 1, limit - total);
    }
    assigned[best] = -1;
  }
  return total < limit ? total : limit;
}

void ColorSearch::enumerate(const ColorValues& fixed, std::size_t limit,
                            const std::function<bool(const Coloring&)>& on_coloring) const {
  if (limit == 0) return;
  Domains domains;
  std::vector<int> assigned;
  if (!init(fixed, domains, assigned)) return;
  std::size_t produced = 0;
  enum_rec(domains, assigned, 0, produced, limit, on_coloring);
}

bool ColorSearch::enum_rec(Domains& domains, std::vector<int>& assigned, int v,
                           std::size_t& produced, std::size_t limit,
                           const std::function<bool(const Coloring&)>& on_coloring) const {
  const int n = graph_.num_vertices();
  while (v < n && assigned[v] >= 0) ++v;
  if (v == n) {
    ++produced;
    return on_coloring(assigned) && produced < limit;
  }
  std::uint32_t dom = domains[v];
  while (dom != 0) {
    const int c = std::countr_zero(dom);
    dom &= dom - 1;
    Domains next = domains;
    assigned[v] = c;
    next[v] = std::uint32_t{1} << c;
    bool keep_going = true;
    if (restrict_neighbors(next, assigned, v, c)) {
      keep_going = enum_rec(next, assigned, v + 1, produced, limit, on_coloring);
    }
    assigned[v] = -1;
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace defset::detail

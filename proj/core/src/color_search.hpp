#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "defset/graph.hpp"

namespace defset::detail {

// Fixed colors per vertex, -1 when free.
using ColorValues = std::vector<int>;

ColorValues to_color_values(const Graph& g, const PartialColoring& fixed);

// Forward-checking backtracking over bitmask domains.
class ColorSearch {
 public:
  ColorSearch(const Graph& g, int colors);

  // Smallest-domain-first search; saturates at `limit`.
  std::size_t count(const ColorValues& fixed, std::size_t limit) const;

  // Index-order search producing colorings in lexicographic order until
  // `on_coloring` returns false or `limit` colorings have been produced.
  void enumerate(const ColorValues& fixed, std::size_t limit,
                 const std::function<bool(const Coloring&)>& on_coloring) const;

 private:
  using Domains = std::vector<std::uint32_t>;

  bool init(const ColorValues& fixed, Domains& domains, std::vector<int>& assigned) const;
  bool restrict_neighbors(Domains& domains, const std::vector<int>& assigned, int v,
                          int color) const;
  std::size_t count_rec(Domains& domains, std::vector<int>& assigned, int remaining,
                        std::size_t limit) const;
  bool enum_rec(Domains& domains, std::vector<int>& assigned, int v, std::size_t& produced,
                std::size_t limit, const std::function<bool(const Coloring&)>& on_coloring) const;

  const Graph& graph_;
  int colors_;
};

}  // namespace defset::detail

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "defset/cnf.hpp"

namespace defset::detail {

// Value slots indexed by variable (slot 0 unused): -1 unbound, 0 false, 1 true.
using Values = std::vector<std::int8_t>;

Values to_values(const CnfFormula& formula, const PartialAssignment& assignment);
PartialAssignment from_values(const Values& values);

// Backtracking model search in variable-index order with clause counters.
// Counting short-circuits once every clause is satisfied.
class SatSearch {
 public:
  explicit SatSearch(const CnfFormula& formula);

  std::size_t count(Values values, std::size_t limit) const;

  // Calls `on_model` for each model in lexicographic order until it returns
  // false or `limit` models have been produced.
  void enumerate(Values values, std::size_t limit,
                 const std::function<bool(const Values&)>& on_model) const;

 private:
  struct Occurrence {
    int clause;
    bool positive;
  };

  struct State {
    Values values;
    std::vector<int> false_count;
    std::vector<int> true_count;
    int satisfied = 0;
  };

  bool assign(State& s, int var, bool value) const;
  void unassign(State& s, int var) const;
  bool init(State& s, Values values) const;

  std::size_t count_rec(State& s, int var, std::size_t limit) const;
  bool enum_rec(State& s, int var, std::size_t& produced, std::size_t limit,
                const std::function<bool(const Values&)>& on_model) const;

  int num_vars_;
  std::vector<int> clause_size_;
  std::vector<std::vector<Occurrence>> occurrences_;
};

}  // namespace defset::detail

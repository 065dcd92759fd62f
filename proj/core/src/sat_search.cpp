#include "sat_search.hpp"

#include <algorithm>
#include <set>

namespace defset::detail {

Values to_values(const CnfFormula& formula, const PartialAssignment& assignment) {
  Values values(static_cast<std::size_t>(formula.num_vars()) + 1, -1);
  for (const auto& [var, value] : assignment.bindings()) {
    if (var >= 1 && var <= formula.num_vars()) values[var] = value ? 1 : 0;
  }
  return values;
}

PartialAssignment from_values(const Values& values) {
  PartialAssignment out;
  for (std::size_t v = 1; v < values.size(); ++v) {
    if (values[v] >= 0) out.set(static_cast<int>(v), values[v] == 1);
  }
  return out;
}

SatSearch::SatSearch(const CnfFormula& formula)
    : num_vars_(formula.num_vars()),
      occurrences_(static_cast<std::size_t>(formula.num_vars()) + 1) {
  const auto& clauses = formula.clauses();
  clause_size_.reserve(clauses.size());
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    std::set<Literal> distinct(clauses[c].begin(), clauses[c].end());
    clause_size_.push_back(static_cast<int>(distinct.size()));
    for (Literal lit : distinct) {
      occurrences_[var_of(lit)].push_back({static_cast<int>(c), lit > 0});
    }
  }
}

bool SatSearch::assign(State& s, int var, bool value) const {
  s.values[var] = value ? 1 : 0;
  bool ok = true;
  for (const auto& occ : occurrences_[var]) {
    if (occ.positive == value) {
      if (s.true_count[occ.clause]++ == 0) ++s.satisfied;
    } else {
      if (++s.false_count[occ.clause] == clause_size_[occ.clause]) ok = false;
    }
  }
  return ok;
}

void SatSearch::unassign(State& s, int var) const {
  const bool value = s.values[var] == 1;
  for (const auto& occ : occurrences_[var]) {
    if (occ.positive == value) {
      if (--s.true_count[occ.clause] == 0) --s.satisfied;
    } else {
      --s.false_count[occ.clause];
    }
  }
  s.values[var] = -1;
}

bool SatSearch::init(State& s, Values values) const {
  s.values.assign(static_cast<std::size_t>(num_vars_) + 1, -1);
  s.false_count.assign(clause_size_.size(), 0);
  s.true_count.assign(clause_size_.size(), 0);
  s.satisfied = 0;
  bool ok = true;
  for (int v = 1; v <= num_vars_ && v < static_cast<int>(values.size()); ++v) {
    if (values[v] >= 0 && !assign(s, v, values[v] == 1)) ok = false;
  }
  return ok;
}

std::size_t SatSearch::count(Values values, std::size_t limit) const {
  if (limit == 0) return 0;
  State s;
  if (!init(s, std::move(values))) return 0;
  return count_rec(s, 1, limit);
}

std::size_t SatSearch::count_rec(State& s, int var, std::size_t limit) const {
  while (var <= num_vars_ && s.values[var] >= 0) ++var;
  if (s.satisfied == static_cast<int>(clause_size_.size())) {
    // Every remaining unbound variable is free.
    std::size_t free = 0;
    for (int v = var; v <= num_vars_; ++v) {
      if (s.values[v] < 0) ++free;
    }
    if (free >= 63) return limit;
    return std::min<std::size_t>(limit, std::size_t{1} << free);
  }
  if (var > num_vars_) return 0;  // unsatisfied clause with nothing left to bind
  std::size_t total = 0;
  for (bool value : {false, true}) {
    if (assign(s, var, value)) total += count_rec(s, var + 1, limit - total);
    unassign(s, var);
    if (total >= limit) return limit;
  }
  return total;
}

void SatSearch::enumerate(Values values, std::size_t limit,
                          const std::function<bool(const Values&)>& on_model) const {
  if (limit == 0) return;
  State s;
  if (!init(s, std::move(values))) return;
  std::size_t produced = 0;
  enum_rec(s, 1, produced, limit, on_model);
}

bool SatSearch::enum_rec(State& s, int var, std::size_t& produced, std::size_t limit,
                         const std::function<bool(const Values&)>& on_model) const {
  while (var <= num_vars_ && s.values[var] >= 0) ++var;
  if (var > num_vars_) {
    if (s.satisfied != static_cast<int>(clause_size_.size())) return true;
    ++produced;
    return on_model(s.values) && produced < limit;
  }
  for (bool value : {false, true}) {
    bool keep_going = true;
    if (assign(s, var, value)) keep_going = enum_rec(s, var + 1, produced, limit, on_model);
    unassign(s, var);
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace defset::detail

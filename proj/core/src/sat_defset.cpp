#include "defset/sat_defset.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "defset/errors.hpp"
#include "parallel.hpp"
#include "sat_search.hpp"

namespace defset {

namespace {

void check_cap(const CnfFormula& formula, const SearchOptions& options) {
  if (formula.num_vars() > options.max_vars) {
    throw CapExceeded("formula has " + std::to_string(formula.num_vars()) +
                      " variables, cap is " + std::to_string(options.max_vars));
  }
}

std::vector<int> merge_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> complement(int num_vars, const std::vector<int>& taken) {
  std::vector<int> out;
  std::size_t j = 0;
  for (int v = 1; v <= num_vars; ++v) {
    if (j < taken.size() && taken[j] == v) {
      ++j;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

// Assigns the bits of `mask` to `vars`, first variable most significant.
void apply_mask(detail::Values& values, const std::vector<int>& vars, std::uint64_t mask) {
  const std::size_t d = vars.size();
  for (std::size_t i = 0; i < d; ++i) {
    values[vars[i]] = static_cast<std::int8_t>((mask >> (d - 1 - i)) & 1u);
  }
}

}  // namespace

DefsetSatInstance::DefsetSatInstance(CnfFormula formula, PartialAssignment anchor,
                                     std::optional<std::size_t> budget)
    : formula_(std::move(formula)), anchor_(std::move(anchor)), budget_(budget) {
  if (!is_proper_total(formula_, anchor_)) {
    throw ContractViolation("anchor is not a total satisfying assignment of the formula");
  }
}

void QuantifiedSplit::validate() const {
  std::set<int> seen;
  for (const auto* block : {&x_vars, &y_vars}) {
    for (int v : *block) {
      if (v < 1 || v > formula.num_vars()) {
        throw ContractViolation("split variable " + std::to_string(v) + " out of range");
      }
      if (!seen.insert(v).second) {
        throw ContractViolation("variable " + std::to_string(v) + " appears in both blocks");
      }
    }
  }
  if (static_cast<int>(seen.size()) != formula.num_vars()) {
    throw ContractViolation("x and y blocks do not cover every variable");
  }
  if (anchor_t) {
    auto support = anchor_t->support();
    auto ys = y_vars;
    std::sort(ys.begin(), ys.end());
    if (support != ys) throw ContractViolation("anchor_t must bind exactly the y block");
    if (!is_proper_partial(formula, *anchor_t)) {
      throw ContractViolation("anchor_t is not a proper partial assignment");
    }
  }
}

bool is_defining_set(const DefsetSatInstance& instance, const PartialAssignment& candidate,
                     const SearchOptions& options) {
  check_cap(instance.formula(), options);
  if (!candidate.is_restriction_of(instance.anchor())) {
    throw ContractViolation("candidate is not a restriction of the anchor");
  }
  return count_extensions(instance.formula(), candidate, 2) == 1;
}

std::vector<int> necessary_vars(const DefsetSatInstance& instance) {
  const auto& f = instance.formula();
  std::vector<int> out;
  PartialAssignment flipped = instance.anchor();
  for (int v = 1; v <= f.num_vars(); ++v) {
    const bool value = *instance.anchor().get(v);
    flipped.set(v, !value);
    if (evaluate(f, flipped) == Truth::satisfied) out.push_back(v);
    flipped.set(v, value);
  }
  return out;
}

std::optional<SatDefiningSet> min_defining_set(const DefsetSatInstance& instance,
                                               const SearchOptions& options) {
  const auto& f = instance.formula();
  check_cap(f, options);
  const detail::SatSearch search(f);
  const detail::Values anchor = detail::to_values(f, instance.anchor());
  const std::vector<int> forced = necessary_vars(instance);
  const std::vector<int> pool = complement(f.num_vars(), forced);

  const std::size_t limit = std::min<std::size_t>(
      static_cast<std::size_t>(f.num_vars()), options.max_size.value_or(f.num_vars()));
  for (std::size_t d = forced.size(); d <= limit; ++d) {
    std::function<std::optional<bool>(const std::vector<int>&)> probe =
        [&](const std::vector<int>& extra) -> std::optional<bool> {
      detail::Values values(anchor.size(), -1);
      for (int v : forced) values[v] = anchor[v];
      for (int v : extra) values[v] = anchor[v];
      if (search.count(std::move(values), 2) == 1) return true;
      return std::nullopt;
    };
    if (auto hit = detail::first_subset_hit(pool, d - forced.size(), options.jobs, probe)) {
      return SatDefiningSet{d, instance.anchor().restricted_to(merge_sorted(forced, hit->first))};
    }
  }
  return std::nullopt;
}

bool has_defining_set(const DefsetSatInstance& instance, std::size_t k, SearchOptions options) {
  options.max_size = k;
  return min_defining_set(instance, options).has_value();
}

std::optional<SatFamilyDefiningSet> min_defining_set_family(const CnfFormula& formula,
                                                            const SearchOptions& options) {
  check_cap(formula, options);
  const detail::SatSearch search(formula);
  const detail::Values blank(static_cast<std::size_t>(formula.num_vars()) + 1, -1);
  if (search.count(blank, 1) == 0) throw NoAnchor("formula is unsatisfiable");

  // A variable that occurs in no clause is free in every model.
  std::vector<bool> occurs(static_cast<std::size_t>(formula.num_vars()) + 1, false);
  for (const auto& clause : formula.clauses()) {
    for (Literal lit : clause) occurs[var_of(lit)] = true;
  }
  std::vector<int> forced;
  for (int v = 1; v <= formula.num_vars(); ++v) {
    if (!occurs[v]) forced.push_back(v);
  }
  const std::vector<int> pool = complement(formula.num_vars(), forced);

  const std::size_t limit = std::min<std::size_t>(
      static_cast<std::size_t>(formula.num_vars()),
      options.max_size.value_or(formula.num_vars()));
  for (std::size_t d = forced.size(); d <= limit; ++d) {
    std::function<std::optional<std::uint64_t>(const std::vector<int>&)> probe =
        [&](const std::vector<int>& extra) -> std::optional<std::uint64_t> {
      const std::vector<int> vars = merge_sorted(forced, extra);
      const std::uint64_t masks = std::uint64_t{1} << vars.size();
      detail::Values values = blank;
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        apply_mask(values, vars, mask);
        if (search.count(values, 2) == 1) return mask;
      }
      return std::nullopt;
    };
    if (auto hit = detail::first_subset_hit(pool, d - forced.size(), options.jobs, probe)) {
      const std::vector<int> vars = merge_sorted(forced, hit->first);
      detail::Values values = blank;
      apply_mask(values, vars, hit->second);
      PartialAssignment witness = detail::from_values(values);
      auto models = enumerate_proper(formula, witness, 1);
      return SatFamilyDefiningSet{d, models.front(), std::move(witness)};
    }
  }
  return std::nullopt;
}

bool family_has_defining_set(const CnfFormula& formula, std::size_t k, SearchOptions options) {
  options.max_size = k;
  return min_defining_set_family(formula, options).has_value();
}

namespace {

// First x-assignment (lexicographic over the listed x order) whose number of
// completions, saturated at `limit`, equals `target`.
std::optional<PartialAssignment> scan_x_block(const QuantifiedSplit& split, std::size_t limit,
                                              std::size_t target) {
  const auto& f = split.formula;
  const detail::SatSearch search(f);
  const std::size_t k = split.x_vars.size();
  if (k >= 63) throw CapExceeded("x block too large");
  detail::Values values(static_cast<std::size_t>(f.num_vars()) + 1, -1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    apply_mask(values, split.x_vars, mask);
    if (search.count(values, limit) == target) {
      PartialAssignment x;
      for (int v : split.x_vars) x.set(v, values[v] == 1);
      return x;
    }
  }
  return std::nullopt;
}

}  // namespace

bool exists_forall_check(const QuantifiedSplit& split, const SearchOptions& options) {
  check_cap(split.formula, options);
  split.validate();
  return scan_x_block(split, 1, 0).has_value();
}

std::optional<PartialAssignment> exists_uniqueexists_witness(const QuantifiedSplit& split,
                                                             const SearchOptions& options) {
  check_cap(split.formula, options);
  if (!split.anchor_t) throw ContractViolation("exists-unique check needs anchor_t");
  split.validate();
  return scan_x_block(split, 2, 1);
}

bool exists_uniqueexists_check(const QuantifiedSplit& split, const SearchOptions& options) {
  return exists_uniqueexists_witness(split, options).has_value();
}

}  // namespace defset

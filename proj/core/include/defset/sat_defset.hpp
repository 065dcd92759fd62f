#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "defset/cnf.hpp"
#include "defset/options.hpp"

namespace defset {

// A formula together with one of its satisfying assignments (the anchor)
// and an optional budget for the decision form of the size question.
class DefsetSatInstance {
 public:
  // Throws ContractViolation unless `anchor` is total and satisfying.
  DefsetSatInstance(CnfFormula formula, PartialAssignment anchor,
                    std::optional<std::size_t> budget = std::nullopt);

  const CnfFormula& formula() const { return formula_; }
  const PartialAssignment& anchor() const { return anchor_; }
  std::optional<std::size_t> budget() const { return budget_; }

 private:
  CnfFormula formula_;
  PartialAssignment anchor_;
  std::optional<std::size_t> budget_;
};

// Outer/inner variable blocks for the exists-forall style questions.
struct QuantifiedSplit {
  CnfFormula formula;
  std::vector<int> x_vars;
  std::vector<int> y_vars;
  std::optional<PartialAssignment> anchor_t;

  // Throws ContractViolation if the blocks do not partition the variables,
  // or if anchor_t is present and not a proper partial assignment over y_vars.
  void validate() const;
};

struct SatDefiningSet {
  std::size_t size = 0;
  PartialAssignment witness;
};

struct SatFamilyDefiningSet {
  std::size_t size = 0;
  PartialAssignment anchor;
  PartialAssignment witness;
};

// Q1: the anchor is the only satisfying assignment containing `candidate`.
// `candidate` must be a restriction of the anchor.
bool is_defining_set(const DefsetSatInstance& instance, const PartialAssignment& candidate,
                     const SearchOptions& options = {});

// Q2 (optimization form). Smallest defining set of the anchor; ties go to the
// lexicographically smallest sorted variable list. Returns nullopt only when
// options.max_size is set and no defining set that small exists.
std::optional<SatDefiningSet> min_defining_set(const DefsetSatInstance& instance,
                                               const SearchOptions& options = {});

// Q2 (decision form).
bool has_defining_set(const DefsetSatInstance& instance, std::size_t k,
                      SearchOptions options = {});

// Q3 (optimization form): minimum over every satisfying anchor. Throws
// NoAnchor for an unsatisfiable formula.
std::optional<SatFamilyDefiningSet> min_defining_set_family(const CnfFormula& formula,
                                                            const SearchOptions& options = {});

// Q3 (decision form).
bool family_has_defining_set(const CnfFormula& formula, std::size_t k,
                             SearchOptions options = {});

// Variables whose anchor value can be flipped without leaving the family;
// they belong to every defining set of the anchor.
std::vector<int> necessary_vars(const DefsetSatInstance& instance);

// Some assignment to x_vars has no satisfying completion over y_vars.
bool exists_forall_check(const QuantifiedSplit& split, const SearchOptions& options = {});

// Some assignment to x_vars admits exactly one satisfying completion; since
// anchor_t is proper, that completion then agrees with anchor_t on y_vars.
bool exists_uniqueexists_check(const QuantifiedSplit& split, const SearchOptions& options = {});

// The x-assignment witnessing exists_uniqueexists_check, if any (first in
// lexicographic order over x_vars).
std::optional<PartialAssignment> exists_uniqueexists_witness(const QuantifiedSplit& split,
                                                             const SearchOptions& options = {});

}  // namespace defset

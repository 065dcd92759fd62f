#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace defset {

// A literal is a signed 1-based variable index; negative means negated.
using Literal = int;
using Clause = std::vector<Literal>;

inline int var_of(Literal lit) { return lit < 0 ? -lit : lit; }

// Sparse map variable -> truth value. The key set is the support.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  explicit PartialAssignment(std::map<int, bool> bindings);

  // Builds from signed literals (positive = true). A variable bound twice
  // with different values is a ContractViolation.
  static PartialAssignment from_literals(const std::vector<Literal>& literals);

  void set(int var, bool value);
  void erase(int var) { bindings_.erase(var); }
  std::optional<bool> get(int var) const;
  bool contains(int var) const { return bindings_.count(var) != 0; }

  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  const std::map<int, bool>& bindings() const { return bindings_; }

  // Sorted variable indices.
  std::vector<int> support() const;
  // Signed literals in variable order.
  std::vector<Literal> literals() const;

  // Keeps only the listed variables (those that are bound).
  PartialAssignment restricted_to(const std::vector<int>& vars) const;
  // True iff every binding here appears with the same value in `other`.
  bool is_restriction_of(const PartialAssignment& other) const;

  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;

 private:
  std::map<int, bool> bindings_;
};

enum class Truth { satisfied, falsified, undetermined };

std::string_view to_string(Truth t);

// Clause list over variables 1..num_vars. Immutable after construction.
class CnfFormula {
 public:
  CnfFormula() = default;
  // Throws ContractViolation on an empty clause or an out-of-range literal.
  CnfFormula(int num_vars, std::vector<Clause> clauses,
             std::map<int, std::string> var_names = {});

  int num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(std::size_t i) const { return clauses_.at(i); }

  // Largest number of distinct literals in a clause.
  std::size_t width() const;

  const std::map<int, std::string>& var_names() const { return var_names_; }
  std::optional<std::string> name(int var) const;

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
  std::map<int, std::string> var_names_;
};

// DIMACS cnf. Clauses keep file order and duplicate literals.
CnfFormula parse_cnf(std::string_view text);
CnfFormula read_cnf_file(const std::string& path);
std::string write_cnf(const CnfFormula& formula);

// One line of signed integers terminated by 0.
PartialAssignment parse_assignment(std::string_view text);
PartialAssignment read_assignment_file(const std::string& path);
std::string write_assignment(const PartialAssignment& assignment);

Truth evaluate(const CnfFormula& formula, const PartialAssignment& assignment);

// Every clause already has a literal made true by `t`.
bool is_proper_partial(const CnfFormula& formula, const PartialAssignment& t);

// Total assignment over all variables that satisfies the formula.
bool is_proper_total(const CnfFormula& formula, const PartialAssignment& t);

// Total satisfying assignments extending `fixed`, lexicographic in the
// value vector (x1 most significant, false < true), at most `limit` of them.
std::vector<PartialAssignment> enumerate_proper(const CnfFormula& formula,
                                                const PartialAssignment& fixed,
                                                std::size_t limit);

// Number of satisfying total extensions of `fixed`, saturating at `limit`.
std::size_t count_extensions(const CnfFormula& formula, const PartialAssignment& fixed,
                             std::size_t limit);

// Pads every clause shorter than `k` by repeating its last literal.
// Throws ContractViolation if some clause has more than `k` distinct literals.
CnfFormula normalize_width(const CnfFormula& formula, std::size_t k);

// Drops repeated literals inside each clause.
CnfFormula dedup_literals(const CnfFormula& formula);

}  // namespace defset

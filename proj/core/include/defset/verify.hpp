#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "defset/cnf.hpp"
#include "defset/graph.hpp"
#include "defset/options.hpp"
#include "defset/report.hpp"

namespace defset {

// Instance generator settings for verify_reduction. Zero means "use the
// default for this reduction". With instances == 0 the small exhaustive
// reductions (mu, split3, gphi) enumerate every formula in range.
struct SweepSpec {
  std::uint64_t seed = 1;
  std::size_t instances = 0;
  int max_vars = 0;
  int max_clauses = 0;
  int max_vertices = 0;
  unsigned jobs = 1;
  SearchOptions caps;
};

// mu, cprime, split3, q2, q3, gphi, h
const std::vector<std::string>& reduction_names();

// Runs both sides of the named equivalence on every generated instance and
// cross-checks each side with the brute-force oracle when it is small
// enough. Throws ContractViolation for an unknown name.
VerifyReport verify_reduction(std::string_view name, const SweepSpec& sweep);

// Every formula over variables 1..num_vars with at most max_clauses distinct
// clauses, each clause a set of 1..3 distinct literals. Clause sets are
// listed by size, then lexicographically.
std::vector<CnfFormula> enumerate_small_cnfs(int num_vars, int max_clauses);

// Random formula with 1..max_vars variables, 1..max_clauses clauses of
// 1..3 distinct variables each.
CnfFormula random_cnf(std::mt19937_64& rng, int max_vars, int max_clauses);

// Random graph on `vertices` vertices with edge probability 1/2.
Graph random_graph(std::mt19937_64& rng, int vertices);

}  // namespace defset

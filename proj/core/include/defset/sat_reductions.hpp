#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "defset/cnf.hpp"
#include "defset/sat_defset.hpp"

namespace defset {

// Output of a formula construction. `provenance` tags every output variable
// with the role it plays:
//   original-x, original-y, original    carried over from the input
//   z                                   the switch variable of the 4CNF step
//   gadget-v:<clause>                   interior variable of a clause gadget
//   chain-w:<pos>                       chain variable of the uniqueness chain
//   pair-v:<i>, pair-v':<i>             the two copies standing for x_i
//   pad-y:<i>,<j>                       padding variable j attached to x_i
// A y variable of the Q2 construction is tagged original-y:a=+ or
// original-y:a=- depending on the polarity of its chain literal.
struct ReductionArtifact {
  CnfFormula output;
  std::map<int, std::string> provenance;
  std::optional<PartialAssignment> anchor_out;
  std::optional<std::size_t> budget_out;
};

// Re-derives the quantified split from the tags: original-x variables form
// the outer block, everything else the inner block; anchor_t = anchor_out.
QuantifiedSplit split_of(const ReductionArtifact& artifact);

// (C_1 v z) ^ ... ^ (C_n v z) ^ (~z v y_1) ^ ... ^ (~z v y_m) with the
// proper partial anchor {z, y_1..y_m all true}. Input width must be <= 3.
ReductionArtifact construct_mu(const QuantifiedSplit& split);

// Replaces every 4-literal clause (a1 v a2 v a3 v z) of a construct_mu
// output by the six-clause 3CNF gadget over a fresh variable v_i, and
// extends the anchor with v_i = true.
ReductionArtifact split_to_3cnf(const ReductionArtifact& mu);

// The six clauses replacing (a1 v a2 v a3 v z), in construction order.
std::vector<Clause> cprime_clauses(Literal a1, Literal a2, Literal a3, Literal z, int v);

struct XPair {
  int x_var;      // outer variable of the source
  int v_var;      // stands for the literal x
  int vprime_var; // stands for the literal ~x
};

struct Q2Reduction {
  ReductionArtifact artifact;
  DefsetSatInstance instance;  // target formula, anchor t', budget |x|
  std::vector<XPair> pairs;
};

// Builds a Q2 instance whose anchor has a defining set of size <= |x| iff
// the source exists-unique question is answered yes. Requires a non-empty
// y block and a proper anchor_t.
Q2Reduction reduce_unique_to_q2(const QuantifiedSplit& split);

// Pads every variable x_i with k+1 two-literal clauses so that the family
// question at budget k matches the anchored question at budget k.
ReductionArtifact reduce_q2_to_q3(const DefsetSatInstance& instance, std::size_t k);

// Sidecar: one line per variable, "var <idx> role <tag>".
std::string write_provenance(const std::map<int, std::string>& provenance,
                             std::string_view keyword = "var");
std::map<int, std::string> parse_provenance(std::string_view text,
                                            std::string_view keyword = "var");

}  // namespace defset

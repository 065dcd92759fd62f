#include <gtest/gtest.h>

#include "defset/errors.hpp"
#include "defset/oracle.hpp"

using namespace defset;

namespace {

PartialAssignment assign(std::vector<Literal> lits) { return PartialAssignment::from_literals(lits); }

}  // namespace

TEST(OracleSat, Models) {
  EXPECT_EQ(oracle::models(CnfFormula(2, {{1, 2}})), (std::vector<std::uint32_t>{1, 2, 3}));
  EXPECT_TRUE(oracle::models(CnfFormula(1, {{1}, {-1}})).empty());
  EXPECT_EQ(oracle::to_mask(assign({1, -2, 3}), 3), 5u);
}

TEST(OracleSat, Examples) {
  EXPECT_EQ(oracle::min_defset_sat(DefsetSatInstance(CnfFormula(2, {{1}, {-1, 2}}), assign({1, 2}))), 0u);
  EXPECT_EQ(oracle::min_defset_sat(DefsetSatInstance(CnfFormula(2, {{1, 2}, {-1, -2}}), assign({1, -2}))),
            1u);
  // No clauses: every variable is free, so every one must be fixed.
  EXPECT_EQ(oracle::min_defset_sat(DefsetSatInstance(CnfFormula(3, {}), assign({1, -2, 3}))), 3u);
  EXPECT_FALSE(oracle::min_defset_sat_family(CnfFormula(1, {{1}, {-1}})));
  EXPECT_EQ(oracle::min_defset_sat_family(CnfFormula(2, {{1, 2}})), 1u);
}

TEST(OracleSat, CapIsEnforced) {
  PartialAssignment t;
  for (int v = 1; v <= 17; ++v) t.set(v, true);
  EXPECT_THROW(oracle::min_defset_sat(DefsetSatInstance(CnfFormula(17, {}), t)), CapExceeded);
}

TEST(OracleSat, Quantifiers) {
  QuantifiedSplit pinned{CnfFormula(2, {{1, 2}, {1, -2}}), {1}, {2}, std::nullopt};
  EXPECT_TRUE(oracle::exists_forall(pinned));
  QuantifiedSplit free_y{CnfFormula(2, {{2, -2}}), {1}, {2}, std::nullopt};
  EXPECT_FALSE(oracle::exists_forall(free_y));

  QuantifiedSplit unique{CnfFormula(2, {{1, 2}, {-1, 2}}), {1}, {2}, assign({2})};
  EXPECT_TRUE(oracle::exists_unique(unique));
  QuantifiedSplit loose{CnfFormula(2, {{1, 2}}), {1}, {2}, assign({2})};
  // x1 = false forces y1 = true; that completion is the anchor.
  EXPECT_TRUE(oracle::exists_unique(loose));
  QuantifiedSplit never{CnfFormula(2, {{2, -2}}), {1}, {2}, assign({2})};
  EXPECT_FALSE(oracle::exists_unique(never));
}

TEST(OracleColor, Examples) {
  const Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(oracle::chromatic_number(tri), 3);
  EXPECT_EQ(oracle::colorings(tri, 3).size(), 6u);
  EXPECT_TRUE(oracle::colorings(tri, 2).empty());
  EXPECT_EQ(oracle::min_defset_coloring(DefsetColorInstance(tri, {0, 1, 2})), 2u);
  EXPECT_EQ(oracle::min_defset_coloring(DefsetColorInstance(Graph(1), {0})), 0u);
  EXPECT_EQ(oracle::min_defset_coloring_family(tri), 2u);
  EXPECT_TRUE(oracle::is_defining_coloring(DefsetColorInstance(tri, {0, 1, 2}),
                                           PartialColoring(std::map<int, int>{{0, 0}, {2, 2}})));
  // Two isolated vertices: one color, one coloring.
  EXPECT_EQ(oracle::min_defset_coloring(DefsetColorInstance(Graph(2), {0, 0})), 0u);
}

TEST(OracleColor, CapIsEnforced) {
  EXPECT_THROW(oracle::chromatic_number(Graph(13)), CapExceeded);
}

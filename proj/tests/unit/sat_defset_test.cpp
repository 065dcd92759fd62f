#include <gtest/gtest.h>

#include <random>

#include "defset/errors.hpp"
#include "defset/oracle.hpp"
#include "defset/sat_defset.hpp"
#include "defset/sat_reductions.hpp"
#include "defset/verify.hpp"

using namespace defset;

namespace {

PartialAssignment assign(std::vector<Literal> lits) { return PartialAssignment::from_literals(lits); }

DefsetSatInstance random_instance(std::mt19937_64& rng, int vars, int clauses) {
  while (true) {
    CnfFormula f = random_cnf(rng, vars, clauses);
    const auto models = enumerate_proper(f, {}, 1u << f.num_vars());
    if (models.empty()) continue;
    return DefsetSatInstance(std::move(f), models[rng() % models.size()]);
  }
}

}  // namespace

TEST(DefsetSatInstance, RejectsBadAnchor) {
  const CnfFormula f(2, {{1, 2}});
  EXPECT_THROW(DefsetSatInstance(f, assign({-1, -2})), ContractViolation);
  EXPECT_THROW(DefsetSatInstance(f, assign({1})), ContractViolation);
  EXPECT_NO_THROW(DefsetSatInstance(f, assign({1, -2}), 1));
}

TEST(IsDefiningSet, Examples) {
  const DefsetSatInstance forced(CnfFormula(2, {{1}, {-1, 2}}), assign({1, 2}));
  EXPECT_TRUE(is_defining_set(forced, {}));

  const DefsetSatInstance loose(CnfFormula(2, {{1, 2}}), assign({1, 2}));
  EXPECT_FALSE(is_defining_set(loose, {}));

  const DefsetSatInstance xor2(CnfFormula(2, {{1, 2}, {-1, -2}}), assign({1, -2}));
  EXPECT_TRUE(is_defining_set(xor2, assign({1})));
  EXPECT_TRUE(oracle::is_defining_sat(xor2, assign({1})));
}

TEST(IsDefiningSet, CandidateMustAgreeWithAnchor) {
  const DefsetSatInstance xor2(CnfFormula(2, {{1, 2}, {-1, -2}}), assign({1, -2}));
  EXPECT_THROW(is_defining_set(xor2, assign({-1})), ContractViolation);
}

TEST(IsDefiningSet, MatchesExtensionCount) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 150; ++i) {
    const DefsetSatInstance inst = random_instance(rng, 8, 8);
    PartialAssignment cand;
    for (const auto& [v, value] : inst.anchor().bindings()) {
      if (rng() % 2) cand.set(v, value);
    }
    const bool unique = enumerate_proper(inst.formula(), cand, 2).size() == 1;
    EXPECT_EQ(is_defining_set(inst, cand), unique);
  }
}

TEST(MinDefiningSet, Examples) {
  const DefsetSatInstance forced(CnfFormula(2, {{1}, {-1, 2}}), assign({1, 2}));
  const auto zero = min_defining_set(forced);
  ASSERT_TRUE(zero);
  EXPECT_EQ(zero->size, 0u);
  EXPECT_TRUE(zero->witness.empty());

  const DefsetSatInstance xor2(CnfFormula(2, {{1, 2}, {-1, -2}}), assign({1, -2}));
  ASSERT_EQ(oracle::min_defset_sat(xor2), 1u);
  const auto one = min_defining_set(xor2);
  ASSERT_TRUE(one);
  EXPECT_EQ(one->size, 1u);
  EXPECT_EQ(one->witness, assign({1}));
}

TEST(MinDefiningSet, WitnessIsDefiningAndMinimal) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const DefsetSatInstance inst = random_instance(rng, 8, 10);
    const auto best = min_defining_set(inst);
    ASSERT_TRUE(best);
    EXPECT_EQ(best->witness.size(), best->size);
    EXPECT_TRUE(best->witness.is_restriction_of(inst.anchor()));
    EXPECT_TRUE(oracle::is_defining_sat(inst, best->witness));
    EXPECT_EQ(best->size, oracle::min_defset_sat(inst));
  }
}

TEST(MinDefiningSet, WitnessIsLexicographicallyFirst) {
  // Free variables 1..4; every defining set must bind all of them, except
  // that clause (~3 v ~4) lets x3 = true force x4 = false.
  const CnfFormula f(4, {{-3, -4}});
  const DefsetSatInstance inst(f, assign({1, 2, 3, -4}));
  const auto best = min_defining_set(inst);
  ASSERT_TRUE(best);
  EXPECT_EQ(best->size, 3u);
  EXPECT_EQ(best->witness, assign({1, 2, 3}));
}

TEST(MinDefiningSet, BudgetAndDecisionForm) {
  const DefsetSatInstance xor2(CnfFormula(2, {{1, 2}, {-1, -2}}), assign({1, -2}));
  EXPECT_FALSE(has_defining_set(xor2, 0));
  EXPECT_TRUE(has_defining_set(xor2, 1));
  SearchOptions options;
  options.max_size = 0;
  EXPECT_FALSE(min_defining_set(xor2, options));
}

TEST(MinDefiningSet, ParallelSweepMatchesSequential) {
  std::mt19937_64 rng(23);
  SearchOptions par;
  par.jobs = 4;
  for (int i = 0; i < 60; ++i) {
    const DefsetSatInstance inst = random_instance(rng, 10, 6);
    const auto a = min_defining_set(inst);
    const auto b = min_defining_set(inst, par);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->size, b->size);
    EXPECT_EQ(a->witness, b->witness);
  }
}

TEST(MinDefiningSet, Monotone) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    const DefsetSatInstance inst = random_instance(rng, 7, 7);
    const auto best = min_defining_set(inst);
    PartialAssignment bigger = best->witness;
    for (const auto& [v, value] : inst.anchor().bindings()) {
      if (rng() % 2) bigger.set(v, value);
    }
    EXPECT_TRUE(is_defining_set(inst, bigger));
  }
}

TEST(MinDefiningSet, CapIsEnforced) {
  const DefsetSatInstance inst(CnfFormula(30, {}), [] {
    PartialAssignment t;
    for (int v = 1; v <= 30; ++v) t.set(v, true);
    return t;
  }());
  EXPECT_THROW(min_defining_set(inst), CapExceeded);
}

TEST(FamilyMin, Examples) {
  const auto unique = min_defining_set_family(CnfFormula(2, {{1}, {-1, 2}}));
  ASSERT_TRUE(unique);
  EXPECT_EQ(unique->size, 0u);

  const CnfFormula or2(2, {{1, 2}});
  ASSERT_EQ(oracle::min_defset_sat_family(or2), 1u);
  const auto one = min_defining_set_family(or2);
  ASSERT_TRUE(one);
  EXPECT_EQ(one->size, 1u);
  EXPECT_TRUE(one->witness.is_restriction_of(one->anchor));
  // Lexicographically first witness: {x1 = false} pins x2 = true.
  EXPECT_EQ(one->witness, assign({-1}));
  EXPECT_EQ(one->anchor, assign({-1, 2}));
}

TEST(FamilyMin, UnsatisfiableHasNoAnchor) {
  EXPECT_THROW(min_defining_set_family(CnfFormula(1, {{1}, {-1}})), NoAnchor);
}

TEST(FamilyMin, AgreesWithOracleAndBoundsPairMinimum) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 120; ++i) {
    const DefsetSatInstance inst = random_instance(rng, 7, 8);
    const auto fam = min_defining_set_family(inst.formula());
    ASSERT_TRUE(fam);
    EXPECT_EQ(fam->size, *oracle::min_defset_sat_family(inst.formula()));
    EXPECT_LE(fam->size, min_defining_set(inst)->size);
    const DefsetSatInstance at(inst.formula(), fam->anchor);
    EXPECT_TRUE(is_defining_set(at, fam->witness));
    EXPECT_EQ(family_has_defining_set(inst.formula(), fam->size), true);
    if (fam->size > 0) EXPECT_FALSE(family_has_defining_set(inst.formula(), fam->size - 1));
  }
}

TEST(NecessaryVars, AreInEveryMinimumWitness) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 80; ++i) {
    const DefsetSatInstance inst = random_instance(rng, 7, 6);
    const auto witness = min_defining_set(inst)->witness;
    for (int v : necessary_vars(inst)) EXPECT_TRUE(witness.contains(v)) << "var " << v;
  }
}

TEST(ExistsForall, Examples) {
  // x1 outer, y1 = x2 inner.
  QuantifiedSplit contradiction{CnfFormula(2, {{2}, {-2}}), {1}, {2}, std::nullopt};
  EXPECT_TRUE(exists_forall_check(contradiction));

  QuantifiedSplit tautology{CnfFormula(1, {{1, -1}}), {}, {1}, std::nullopt};
  EXPECT_FALSE(exists_forall_check(tautology));

  // (x1 v y1) ^ (x1 v ~y1): x1 = false leaves no completion.
  QuantifiedSplit pinned{CnfFormula(2, {{1, 2}, {1, -2}}), {1}, {2}, std::nullopt};
  ASSERT_TRUE(oracle::exists_forall(pinned));
  EXPECT_TRUE(exists_forall_check(pinned));
}

TEST(ExistsUnique, Examples) {
  // Empty x block, y1 forced by a unit clause.
  QuantifiedSplit forced{CnfFormula(1, {{1}}), {}, {1}, assign({1})};
  EXPECT_TRUE(exists_uniqueexists_check(forced));

  // mu of (y1 v ~y1): (y1 v ~y1 v z) ^ (~z v y1), x block empty.
  QuantifiedSplit mu{CnfFormula(2, {{1, -1, 2}, {-2, 1}}), {}, {1, 2}, assign({1, 2})};
  ASSERT_FALSE(oracle::exists_unique(mu));
  EXPECT_FALSE(exists_uniqueexists_check(mu));
}

TEST(ExistsUnique, WitnessPinsTheAnchor) {
  // (x1 v y1): x1 = false forces y1 = true.
  QuantifiedSplit split{CnfFormula(2, {{1, 2}}), {1}, {2}, assign({2})};
  EXPECT_TRUE(exists_uniqueexists_check(split));
  const auto w = exists_uniqueexists_witness(split);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, assign({-1}));
}

TEST(ExistsUnique, RejectsImproperAnchor) {
  QuantifiedSplit split{CnfFormula(2, {{1, 2}}), {1}, {2}, assign({-2})};
  EXPECT_THROW(exists_uniqueexists_check(split), ContractViolation);
}

TEST(ExistsUnique, AgreesWithDoubleLoop) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const CnfFormula f = random_cnf(rng, 8, 8);
    QuantifiedSplit split{f, {}, {}, std::nullopt};
    for (int v = 1; v <= f.num_vars(); ++v) (rng() % 2 ? split.x_vars : split.y_vars).push_back(v);
    EXPECT_EQ(exists_forall_check(split), oracle::exists_forall(split));
    const QuantifiedSplit mu = split_of(construct_mu(split));
    EXPECT_EQ(exists_uniqueexists_check(mu), oracle::exists_unique(mu));
  }
}

TEST(QuantifiedSplit, ValidatesPartition) {
  QuantifiedSplit overlap{CnfFormula(2, {{1, 2}}), {1}, {1, 2}, std::nullopt};
  EXPECT_THROW(overlap.validate(), ContractViolation);
  QuantifiedSplit missing{CnfFormula(2, {{1, 2}}), {1}, {}, std::nullopt};
  EXPECT_THROW(missing.validate(), ContractViolation);
}

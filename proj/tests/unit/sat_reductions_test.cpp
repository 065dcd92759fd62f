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

void expect_round_trip(const ReductionArtifact& art) {
  const CnfFormula again = parse_cnf(write_cnf(art.output));
  EXPECT_EQ(again.clauses(), art.output.clauses());
  EXPECT_EQ(parse_provenance(write_provenance(art.provenance)), art.provenance);
  ASSERT_EQ(static_cast<int>(art.provenance.size()), art.output.num_vars());
}

}  // namespace

TEST(ConstructMu, SingleClause) {
  const QuantifiedSplit split{CnfFormula(2, {{1, 2, 2}}), {1}, {2}, std::nullopt};
  const ReductionArtifact mu = construct_mu(split);
  EXPECT_EQ(mu.output.num_vars(), 3);
  EXPECT_EQ(mu.output.clauses(), (std::vector<Clause>{{1, 2, 2, 3}, {-3, 2}}));
  EXPECT_EQ(*mu.anchor_out, assign({2, 3}));
  EXPECT_EQ(mu.provenance.at(1), "original-x");
  EXPECT_EQ(mu.provenance.at(2), "original-y");
  EXPECT_EQ(mu.provenance.at(3), "z");
  expect_round_trip(mu);
}

TEST(ConstructMu, NoClauses) {
  const QuantifiedSplit split{CnfFormula(2, {}), {}, {1, 2}, std::nullopt};
  const ReductionArtifact mu = construct_mu(split);
  EXPECT_EQ(mu.output.clauses(), (std::vector<Clause>{{-3, 1}, {-3, 2}}));
}

TEST(ConstructMu, AnchorIsProperPartialAndShapeHolds) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const CnfFormula f = random_cnf(rng, 6, 6);
    QuantifiedSplit split{f, {}, {}, std::nullopt};
    for (int v = 1; v <= f.num_vars(); ++v) (rng() % 2 ? split.x_vars : split.y_vars).push_back(v);
    const ReductionArtifact mu = construct_mu(split);
    EXPECT_TRUE(is_proper_partial(mu.output, *mu.anchor_out));
    EXPECT_EQ(mu.output.num_clauses(), f.num_clauses() + split.y_vars.size());
    EXPECT_LE(mu.output.width(), 4u);
  }
}

TEST(ConstructMu, RejectsWideInput) {
  const QuantifiedSplit split{CnfFormula(4, {{1, 2, 3, 4}}), {1}, {2, 3, 4}, std::nullopt};
  EXPECT_THROW(construct_mu(split), ContractViolation);
}

TEST(ConstructMu, Equivalence) {
  // Exhaustive for two variables, random for up to eight.
  for (const auto& f : enumerate_small_cnfs(2, 3)) {
    for (unsigned mask = 0; mask < 4; ++mask) {
      QuantifiedSplit split{f, {}, {}, std::nullopt};
      for (int v = 1; v <= 2; ++v) ((mask >> (v - 1)) & 1u ? split.x_vars : split.y_vars).push_back(v);
      EXPECT_EQ(exists_forall_check(split), exists_uniqueexists_check(split_of(construct_mu(split))));
    }
  }
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const CnfFormula f = random_cnf(rng, 8, 8);
    QuantifiedSplit split{f, {}, {}, std::nullopt};
    for (int v = 1; v <= f.num_vars(); ++v) (rng() % 2 ? split.x_vars : split.y_vars).push_back(v);
    EXPECT_EQ(exists_forall_check(split), exists_uniqueexists_check(split_of(construct_mu(split))));
  }
}

TEST(SplitTo3Cnf, OneClauseBecomesSix) {
  const QuantifiedSplit split{CnfFormula(3, {{1, 2, 3}}), {1}, {2, 3}, std::nullopt};
  const ReductionArtifact mu = construct_mu(split);
  const ReductionArtifact out = split_to_3cnf(mu);
  EXPECT_EQ(out.output.num_vars(), mu.output.num_vars() + 1);
  EXPECT_EQ(out.output.num_clauses(), 6u + 2u);
  EXPECT_EQ(out.output.width(), 3u);
  EXPECT_EQ(out.provenance.at(5), "gadget-v:1");
  EXPECT_EQ(*out.anchor_out->get(5), true);
  EXPECT_TRUE(is_proper_partial(out.output, *out.anchor_out));
  expect_round_trip(out);
}

TEST(SplitTo3Cnf, ShortClausesArePadded) {
  const QuantifiedSplit split{CnfFormula(2, {{1}, {1, -2}}), {1}, {2}, std::nullopt};
  const ReductionArtifact out = split_to_3cnf(construct_mu(split));
  EXPECT_EQ(out.output.num_vars(), 2 + 1 + 2);
  EXPECT_EQ(out.output.num_clauses(), 12u + 1u);
}

TEST(SplitTo3Cnf, RejectsOtherShapes) {
  ReductionArtifact bogus{CnfFormula(2, {{1, 2}, {1}}), {{1, "original-x"}, {2, "z"}}, assign({1, 2}), {}};
  EXPECT_THROW(split_to_3cnf(bogus), ContractViolation);
  ReductionArtifact no_z{CnfFormula(1, {{1}}), {{1, "original-x"}}, assign({1}), {}};
  EXPECT_THROW(split_to_3cnf(no_z), ContractViolation);
}

TEST(CPrimeGadget, FifteenUniqueOneEmpty) {
  const CnfFormula gadget(5, cprime_clauses(1, 2, 3, 4, 5));
  int unique = 0, empty = 0;
  for (unsigned bits = 0; bits < 16; ++bits) {
    PartialAssignment fixed;
    for (int v = 1; v <= 4; ++v) fixed.set(v, (bits >> (4 - v)) & 1u);
    const std::size_t n = count_extensions(gadget, fixed, 3);
    unique += n == 1;
    empty += n == 0;
    EXPECT_EQ(n == 0, bits == 0);
  }
  EXPECT_EQ(unique, 15);
  EXPECT_EQ(empty, 1);
}

TEST(CPrimeGadget, SixthClauseIsNeeded) {
  auto clauses = cprime_clauses(1, 2, 3, 4, 5);
  clauses.pop_back();
  EXPECT_EQ(count_extensions(CnfFormula(5, clauses), assign({-1, 2, 3, -4}), 3), 2u);
}

TEST(SplitTo3Cnf, PreservesUniqueness) {
  for (const auto& f : enumerate_small_cnfs(2, 3)) {
    for (unsigned mask = 0; mask < 4; ++mask) {
      QuantifiedSplit split{f, {}, {}, std::nullopt};
      for (int v = 1; v <= 2; ++v) ((mask >> (v - 1)) & 1u ? split.x_vars : split.y_vars).push_back(v);
      const ReductionArtifact mu = construct_mu(split);
      EXPECT_EQ(exists_uniqueexists_check(split_of(mu)),
                exists_uniqueexists_check(split_of(split_to_3cnf(mu))));
    }
  }
}

TEST(ReduceUniqueToQ2, ChainAndPairs) {
  // x1 outer, y = {2, 3}; t = (y2 = true, y3 = false).
  const QuantifiedSplit split{CnfFormula(3, {{1, 2}, {-1, -3}}), {1}, {2, 3}, assign({2, -3})};
  const Q2Reduction red = reduce_unique_to_q2(split);
  const CnfFormula& out = red.artifact.output;
  // 3 source vars, one w, one v'.
  ASSERT_EQ(out.num_vars(), 5);
  const int w1 = 4, vp1 = 5;
  EXPECT_EQ(red.pairs.size(), 1u);
  EXPECT_EQ(red.pairs[0].v_var, 1);
  EXPECT_EQ(red.pairs[0].vprime_var, vp1);
  // ~x1 becomes v'1; a2 = ~y2 (t true), a3 = y3 (t false).
  EXPECT_EQ(out.clauses(), (std::vector<Clause>{{1, 2}, {vp1, -3}, {-2, 3, w1},
                                                {-w1, 1, -vp1}, {-w1, -1, vp1}}));
  EXPECT_EQ(red.artifact.provenance.at(2), "original-y:a=-");
  EXPECT_EQ(red.artifact.provenance.at(3), "original-y:a=+");
  EXPECT_EQ(red.artifact.provenance.at(w1), "chain-w:1");
  EXPECT_EQ(red.artifact.provenance.at(vp1), "pair-v':1");
  EXPECT_EQ(*red.artifact.anchor_out, assign({-1, 2, -3, w1, -vp1}));
  EXPECT_EQ(red.artifact.budget_out, 1u);
  expect_round_trip(red.artifact);
}

TEST(ReduceUniqueToQ2, AnchorSatisfiesAndYForcesW) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const CnfFormula f = random_cnf(rng, 5, 4);
    QuantifiedSplit split{f, {}, {}, std::nullopt};
    for (int v = 1; v <= f.num_vars(); ++v) (rng() % 2 ? split.x_vars : split.y_vars).push_back(v);
    const ReductionArtifact mu = construct_mu(split);
    const QuantifiedSplit source = split_of(mu);
    const Q2Reduction red = reduce_unique_to_q2(source);
    EXPECT_TRUE(is_proper_total(red.artifact.output, *red.artifact.anchor_out));
    // Fixing the y block to t forces every chain variable to true.
    const auto fixed = red.artifact.anchor_out->restricted_to(source.y_vars);
    for (const auto& r : enumerate_proper(red.artifact.output, fixed, 64)) {
      for (const auto& [v, tag] : red.artifact.provenance) {
        if (tag.rfind("chain-w:", 0) == 0) EXPECT_TRUE(*r.get(v));
      }
    }
  }
}

TEST(ReduceUniqueToQ2, SingleYVariable) {
  const QuantifiedSplit split{CnfFormula(2, {{1, 2}}), {1}, {2}, assign({2})};
  const Q2Reduction red = reduce_unique_to_q2(split);
  EXPECT_EQ(red.artifact.output.clause(1), (Clause{-2, -2, 3}));
}

TEST(ReduceUniqueToQ2, RejectsEmptyYBlockAndBadAnchor) {
  const QuantifiedSplit no_y{CnfFormula(1, {{1}}), {1}, {}, PartialAssignment{}};
  EXPECT_THROW(reduce_unique_to_q2(no_y), ContractViolation);
  const QuantifiedSplit improper{CnfFormula(2, {{1, 2}}), {1}, {2}, assign({-2})};
  EXPECT_THROW(reduce_unique_to_q2(improper), ContractViolation);
}

TEST(ReduceUniqueToQ2, LawOnTwoVariableToys) {
  // Every formula over (x1, y1) with at most 3 clauses and every proper t.
  int checked = 0;
  for (const auto& f : enumerate_small_cnfs(2, 3)) {
    for (bool ty : {false, true}) {
      const QuantifiedSplit split{f, {1}, {2}, assign({ty ? 2 : -2})};
      if (!is_proper_partial(f, *split.anchor_t)) continue;
      const Q2Reduction red = reduce_unique_to_q2(split);
      const bool lhs = oracle::min_defset_sat(red.instance) <= 1;
      EXPECT_EQ(lhs, exists_uniqueexists_check(split)) << write_cnf(f);
      EXPECT_EQ(lhs, has_defining_set(red.instance, 1));
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(ReduceQ2ToQ3, PaddingExample) {
  const DefsetSatInstance inst(CnfFormula(1, {{1}}), assign({1}));
  const ReductionArtifact out = reduce_q2_to_q3(inst, 1);
  EXPECT_EQ(out.output.num_vars(), 3);
  EXPECT_EQ(out.output.clauses(), (std::vector<Clause>{{1}, {-1, 2}, {-1, 3}}));
  EXPECT_EQ(out.provenance.at(2), "pad-y:1,1");
  EXPECT_EQ(out.provenance.at(3), "pad-y:1,2");
  EXPECT_EQ(out.budget_out, 1u);
  expect_round_trip(out);
}

TEST(ReduceQ2ToQ3, AnchorForcesPadding) {
  const DefsetSatInstance inst(CnfFormula(2, {{1, 2}}), assign({1, -2}));
  const ReductionArtifact out = reduce_q2_to_q3(inst, 2);
  const auto all = enumerate_proper(out.output, inst.anchor(), 16);
  ASSERT_EQ(all.size(), 1u);
  for (int v = 3; v <= out.output.num_vars(); ++v) EXPECT_TRUE(*all[0].get(v));
}

TEST(ReduceQ2ToQ3, FamilyLawExhaustive) {
  // Every formula over three variables with up to three clauses, every
  // anchor, k = 0..2.
  std::size_t checked = 0;
  for (const auto& f : enumerate_small_cnfs(3, 3)) {
    for (const auto& t : enumerate_proper(f, {}, 8)) {
      const DefsetSatInstance inst(f, t);
      const std::size_t pair_min = min_defining_set(inst)->size;
      for (std::size_t k = 0; k <= 2; ++k) {
        const bool fam = family_has_defining_set(reduce_q2_to_q3(inst, k).output, k);
        ASSERT_EQ(fam, pair_min <= k) << write_cnf(f) << write_assignment(t) << "k=" << k;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 10000u);
}

TEST(ReduceQ2ToQ3, FamilyMinimumEqualsPairMinimumWithinBudget) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    const CnfFormula f = random_cnf(rng, 3, 3);
    const auto models = enumerate_proper(f, {}, 8);
    if (models.empty()) continue;
    const DefsetSatInstance inst(f, models[rng() % models.size()]);
    const std::size_t pair_min = oracle::min_defset_sat(inst);
    const ReductionArtifact out = reduce_q2_to_q3(inst, pair_min);
    if (out.output.num_vars() > 12) continue;
    EXPECT_EQ(*oracle::min_defset_sat_family(out.output), pair_min);
  }
}

TEST(Provenance, ParseErrors) {
  EXPECT_THROW(parse_provenance("var x role z\n"), ParseError);
  EXPECT_THROW(parse_provenance("var 1 role z\nvar 1 role z\n"), ParseError);
  EXPECT_EQ(parse_provenance("vertex 2 role w0\n", "vertex").at(2), "w0");
}

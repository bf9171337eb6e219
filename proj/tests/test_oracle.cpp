#include "deon/oracle.hpp"

#include <gtest/gtest.h>

#include "deon/errors.hpp"
#include "test_util.hpp"

namespace deon {
namespace {

const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");
const ModalityId ought = kDefaultModality;

OracleConfig cfg1(int max_worlds = 3) {
  return OracleConfig{{"p"}, {ought}, max_worlds};
}

OracleConfig cfg2(int max_worlds = 3) {
  return OracleConfig{{"p", "q"}, {ought}, max_worlds};
}

TEST(Oracle, FirstModelIsCanonical) {
  // p -> O q with p forces q at the single self-looping world; the first
  // three valuations {}, {p}, {q} fail, so exactly four structures are
  // examined before {p,q} succeeds.
  std::vector<Formula> fs{Formula::implication(p, Formula::box(ought, q)), p};
  OracleResult r = oracle_sat(fs, cfg2());
  ASSERT_TRUE(r.satisfiable);
  ASSERT_TRUE(r.model.has_value());
  EXPECT_EQ(r.structures_checked, 4);
  ASSERT_EQ(r.model->worlds.size(), 1u);
  EXPECT_EQ(r.model->designated, 0);
  EXPECT_EQ(r.model->valuation.at(0), (std::set<std::string>{"p", "q"}));
  EXPECT_EQ(r.model->successors.at("ought"),
            (std::set<std::pair<int, int>>{{0, 0}}));
}

TEST(Oracle, EmptyValuationFoundFirst) {
  std::vector<Formula> fs{Formula::diamond(ought, Formula::negation(p))};
  OracleResult r = oracle_sat(fs, cfg1());
  ASSERT_TRUE(r.satisfiable);
  EXPECT_EQ(r.structures_checked, 1);
  EXPECT_EQ(r.model->worlds.size(), 1u);
  EXPECT_TRUE(r.model->valuation.at(0).empty());
}

TEST(Oracle, BoxDiamondClashExhaustsEverything) {
  std::vector<Formula> fs{Formula::box(ought, p),
                          Formula::diamond(ought, Formula::negation(p))};
  OracleResult r = oracle_sat(fs, cfg1());
  EXPECT_FALSE(r.satisfiable);
  EXPECT_FALSE(r.model.has_value());
  // 2 structures at one world, 4*9 at two, 8*343 at three.
  EXPECT_EQ(r.structures_checked, 2 + 36 + 2744);
}

TEST(Oracle, SerialityMakesBoxBottomUnsat) {
  std::vector<Formula> fs{Formula::box(ought, Formula::bottom())};
  OracleResult r = oracle_sat(fs, cfg1());
  EXPECT_FALSE(r.satisfiable);
}

TEST(Oracle, SatisfiedModelsEvaluateAndAreSerial) {
  std::vector<std::vector<Formula>> cases{
      {Formula::box(ought, p)},
      {Formula::diamond(ought, p), Formula::diamond(ought, Formula::negation(p))},
      {Formula::implication(Formula::box(ought, p), q), Formula::negation(q)},
  };
  for (const auto& fs : cases) {
    OracleResult r = oracle_sat(fs, cfg2());
    ASSERT_TRUE(r.satisfiable);
    EXPECT_TRUE(is_serial(*r.model, {ought}));
    for (const auto& f : fs) EXPECT_TRUE(eval(*r.model, r.model->designated, f));
  }
}

TEST(Oracle, TwoModalitiesUseIndependentRelations) {
  ModalityId a{"a"}, b{"b"};
  std::vector<Formula> fs{Formula::box(a, p), Formula::diamond(b, Formula::negation(p))};
  OracleResult r = oracle_sat(fs, OracleConfig{{"p"}, {a, b}, 3});
  ASSERT_TRUE(r.satisfiable);
  EXPECT_EQ(r.model->worlds.size(), 2u);
  EXPECT_TRUE(is_serial(*r.model, {a, b}));
  for (const auto& f : fs) EXPECT_TRUE(eval(*r.model, 0, f));
}

TEST(Oracle, Guards) {
  OracleConfig wide{{"a1", "a2", "a3", "a4", "a5", "a6", "a7"}, {ought}, 3};
  EXPECT_THROW(oracle_sat({}, wide), GuardExceededError);
  EXPECT_THROW(oracle_sat({}, cfg1(5)), GuardExceededError);
  EXPECT_THROW(oracle_sat({}, cfg1(0)), GuardExceededError);
  EXPECT_NO_THROW(oracle_sat({}, cfg1(4)));
}

TEST(Oracle, RejectsSymbolsOutsideConfig) {
  std::vector<Formula> unknown_atom{Formula::atom("z")};
  EXPECT_THROW(oracle_sat(unknown_atom, cfg1()), ValidationError);
  std::vector<Formula> unknown_modality{Formula::box(ModalityId{"zz"}, p)};
  EXPECT_THROW(oracle_sat(unknown_modality, cfg1()), ValidationError);
}

// Bounded-completeness spot check: on small instances the verdict at three
// worlds must already be final. Exhausting four worlds is cheap with one
// atom and affordable for a handful of two-atom cases.
TEST(Oracle, ThreeWorldsAgreeWithFourOnSmallInstances) {
  test::FormulaGen gen(29, {"p"}, {ought});
  for (int i = 0; i < 30; ++i) {
    std::vector<Formula> fs{gen.gen(2 + i % 7, 2)};
    OracleResult three = oracle_sat(fs, cfg1(3));
    OracleResult four = oracle_sat(fs, cfg1(4));
    EXPECT_EQ(three.satisfiable, four.satisfiable) << to_string(fs[0]);
  }
  std::vector<std::vector<Formula>> two_atom{
      {Formula::box(ought, p), Formula::diamond(ought, Formula::negation(p))},
      {Formula::conjunction(p, Formula::negation(p))},
      {Formula::diamond(ought, p), Formula::diamond(ought, q),
       Formula::box(ought, Formula::conjunction(p, q))},
  };
  for (const auto& fs : two_atom) {
    OracleResult three = oracle_sat(fs, cfg2(3));
    OracleResult four = oracle_sat(fs, cfg2(4));
    EXPECT_EQ(three.satisfiable, four.satisfiable);
  }
}

TEST(Oracle, DeterministicAcrossRuns) {
  std::vector<Formula> fs{Formula::implication(p, Formula::box(ought, q)),
                          Formula::diamond(ought, Formula::negation(q))};
  OracleResult a = oracle_sat(fs, cfg2());
  OracleResult b = oracle_sat(fs, cfg2());
  ASSERT_EQ(a.satisfiable, b.satisfiable);
  EXPECT_EQ(a.structures_checked, b.structures_checked);
  ASSERT_TRUE(a.model.has_value());
  EXPECT_EQ(a.model->valuation, b.model->valuation);
  EXPECT_EQ(a.model->successors, b.model->successors);
}

}  // namespace
}  // namespace deon

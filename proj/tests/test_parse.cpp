#include "deon/parse.hpp"

#include <gtest/gtest.h>

#include "deon/errors.hpp"
#include "test_util.hpp"

namespace deon {
namespace {

TEST(Parse, EveryStatementKind) {
  Problem p = parse_problem(
      "modality sc\n"
      "partition n: 4|7\n"
      "atom rain\n"
      "fact rain -> c(n,4)\n"
      "observe ~rain\n"
      "norm rain -> O[sc] c(n,4)\n"
      "option contrapose\n"
      "query turn[sc] c(n,4) via both\n");
  EXPECT_EQ(p.modalities, (std::vector<ModalityId>{{"sc"}}));
  ASSERT_EQ(p.partitions.size(), 1u);
  EXPECT_EQ(p.partitions[0].site, "n");
  EXPECT_EQ(p.partitions[0].values, (std::vector<std::string>{"4", "7"}));
  EXPECT_EQ(p.declared_atoms, (std::vector<std::string>{"rain"}));
  EXPECT_EQ(p.atom_names(), (std::vector<std::string>{"c(n,4)", "c(n,7)", "rain"}));
  ASSERT_EQ(p.facts.size(), 1u);
  EXPECT_EQ(to_string(p.facts[0]), "rain -> c(n,4)");
  ASSERT_EQ(p.observations.size(), 1u);
  EXPECT_EQ(to_string(p.observations[0]), "~rain");
  EXPECT_TRUE(p.contrapose);
  ASSERT_EQ(p.queries.size(), 1u);
  EXPECT_EQ(p.queries[0].kind, Query::Kind::must_check);
  EXPECT_EQ(p.queries[0].modality, ModalityId{"sc"});
  EXPECT_EQ(p.queries[0].engine, Engine::both);
  ASSERT_EQ(p.derived_norms.size(), 1u);
  EXPECT_EQ(to_string(p.derived_norms[0]), "c(n,7) -> O[sc] ~rain");
}

TEST(Parse, SeparatorsCommentsAndArrowSynonym) {
  Problem p = parse_problem(
      "atom a; atom b  # trailing comment\n"
      "# a full-line comment\n"
      "fact a => b;; fact b\n");
  EXPECT_EQ(p.declared_atoms, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(p.facts.size(), 2u);
  EXPECT_EQ(to_string(p.facts[0]), "a -> b");
}

TEST(Parse, FormulaPrecedence) {
  Problem ctx = parse_problem("atom a\natom b\natom c\nmodality m\n");
  EXPECT_EQ(to_string(parse_formula("a & b -> c | a", ctx)), "a & b -> c | a");
  EXPECT_EQ(to_string(parse_formula("a -> b -> c", ctx)), "a -> b -> c");
  EXPECT_EQ(parse_formula("a -> b -> c", ctx),
            Formula::implication(Formula::atom("a"),
                                 Formula::implication(Formula::atom("b"), Formula::atom("c"))));
  EXPECT_EQ(to_string(parse_formula("~(a | b) & c", ctx)), "~(a | b) & c");
  EXPECT_EQ(to_string(parse_formula("O[m] ~a", ctx)), "O[m] ~a");
  EXPECT_EQ(to_string(parse_formula("P (a & b)", ctx)), "P (a & b)");
  EXPECT_EQ(parse_formula("~O a", ctx),
            Formula::negation(Formula::box(kDefaultModality, Formula::atom("a"))));
  EXPECT_EQ(parse_formula("true -> false", ctx),
            Formula::implication(Formula::top(), Formula::bottom()));
}

TEST(Parse, AtomArgumentLists) {
  Problem p = parse_problem("partition l: A|K\nobserve c(l,A)\nfact ~c( l , K )\n");
  EXPECT_EQ(to_string(p.observations[0]), "c(l,A)");
  EXPECT_EQ(to_string(p.facts[0]), "~c(l,K)");
}

TEST(Parse, RenderRoundTripsScenarios) {
  const char* files[] = {
      "wst_naive_observe_a.norm",    "wst_naive_observe_7.norm",
      "wst_contraposed_observe_7.norm", "social_contract.norm",
      "social_contract_under_21.norm",  "social_contract_drink_beer.norm",
      "social_contract_of_age.norm",    "suppression.norm",
      "chisholm.norm",                  "precaution.norm",
  };
  for (const char* f : files) {
    Problem p = test::load_scenario(f);
    Problem again = parse_problem(render_problem(p));
    EXPECT_EQ(p, again) << f;
    EXPECT_EQ(render_problem(p), render_problem(again)) << f;
  }
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  try {
    parse_problem("atom a\nfact a &&\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line, 2);
    EXPECT_EQ(e.column, 9);
  }
  try {
    parse_problem("atom ?\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line, 1);
    EXPECT_EQ(e.column, 6);
  }
  EXPECT_THROW(parse_problem("fact c(unterminated\n"), SyntaxError);
  EXPECT_THROW(parse_problem("atom a\nfact a = a\n"), SyntaxError);
  EXPECT_THROW(parse_problem("frobnicate\n"), SyntaxError);
  EXPECT_THROW(parse_problem("query frobnicate\n"), SyntaxError);
  EXPECT_THROW(parse_problem("atom a\nquery model a via z3\n"), SyntaxError);
}

TEST(Parse, DeclarationViolations) {
  EXPECT_THROW(parse_problem("fact p\n"), ValidationError);
  EXPECT_THROW(parse_problem("atom p\nnorm O[sc] p\n"), ValidationError);
  EXPECT_THROW(parse_problem("modality m\nmodality m\n"), ValidationError);
  EXPECT_THROW(parse_problem("atom p\natom p\n"), ValidationError);
  EXPECT_THROW(parse_problem("partition n: 4|4\n"), ValidationError);
  EXPECT_THROW(parse_problem("partition n: 4|7\npartition n: a|b\n"), ValidationError);
  EXPECT_THROW(parse_problem("atom p\noption frobnicate\n"), ValidationError);
}

TEST(Parse, TableauQueryValidatesFragmentEagerly) {
  EXPECT_THROW(parse_problem("atom p\natom q\nnorm O (p & q)\nquery consistency via tableau\n"),
               NonLiteralUnderBoxError);
  EXPECT_THROW(parse_problem("atom p\nnorm O O p\nquery consistency via tableau\n"),
               NestedModalityError);
  EXPECT_NO_THROW(parse_problem("atom p\natom q\nnorm O (p & q)\nquery consistency via hyper\n"));
}

TEST(Parse, DefaultModalityAutoDeclared) {
  Problem p = parse_problem("atom a\nnorm O a\n");
  EXPECT_EQ(p.modalities, (std::vector<ModalityId>{kDefaultModality}));
  Problem q = parse_problem("atom a\nfact a\n");
  EXPECT_TRUE(q.modalities.empty());
  Problem t = parse_problem("atom a\nquery turn a\n");
  EXPECT_EQ(t.modalities, (std::vector<ModalityId>{kDefaultModality}));
}

TEST(Parse, SingleFormulaAgainstContext) {
  Problem ctx = test::load_scenario("wst_naive_observe_a.norm");
  EXPECT_EQ(to_string(parse_formula("O c(n,4)", ctx)), "O c(n,4)");
  EXPECT_THROW(parse_formula("zebra", ctx), ValidationError);
  EXPECT_THROW(parse_formula("O[zzz] c(n,4)", ctx), ValidationError);
  EXPECT_THROW(parse_formula("c(l,A) c(l,K)", ctx), SyntaxError);
}

TEST(Parse, ObservationMustBeLiteralShape) {
  EXPECT_THROW(parse_problem("atom a\natom b\nobserve a -> b\n"), SyntaxError);
  Problem p = parse_problem("atom a\nobserve ~a\n");
  EXPECT_EQ(to_string(p.observations[0]), "~a");
}

}  // namespace
}  // namespace deon

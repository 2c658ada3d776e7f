#include <gtest/gtest.h>

#include "ontologik/canonical.hpp"
#include "support.hpp"

namespace ontologik {
namespace {

class Canonicalize : public ::testing::Test {
 protected:
  Ontology ont = testing::reference_ontology();
  Lexicon lex = testing::reference_lexicon(ont);

  std::string canon(std::string_view lf) { return canonicalize(parse_lf(lf), ont, lex).str(); }
};

TEST_F(Canonicalize, RavensAreBlack) {
  EXPECT_EQ(canon("(A x)(raven(x) -> black(x))"), "(A x :: raven)(black(x))");
}

TEST_F(Canonicalize, NonBlackThingsAreNonRavens) {
  const auto h1 = canonicalize(parse_lf("(A x)(raven(x) -> black(x))"), ont, lex);
  const auto h2 = canonicalize(parse_lf("(A x)((! black(x)) -> (! raven(x)))"), ont, lex);
  EXPECT_EQ(h2.str(), "(A x :: raven)(black(x))");
  EXPECT_TRUE(alpha_equal(h1, h2));
}

TEST_F(Canonicalize, TypeConjunctBecomesRestriction) {
  EXPECT_EQ(canon("(E! j)(and (person(j)) (articulate(j)))"), "(E! j :: person)(articulate(j))");
}

TEST_F(Canonicalize, LiftsThroughExistentialPrefix) {
  EXPECT_EQ(canon("(E o)(E b)(and (omelet(o)) (beer(b)) (loud(o)) (want(o, b)))"),
            "(E o :: omelet)(E b :: beer)(and (loud(o)) (want(o, b)))");
}

TEST_F(Canonicalize, RestrictionTightensToMoreSpecificType) {
  EXPECT_EQ(canon("(A x :: bird)(raven(x) -> black(x))"), "(A x :: raven)(black(x))");
  EXPECT_EQ(canon("(E x :: raven)(and (living(x)) (black(x)))"),
            "(E x :: raven)(black(x))");
  // raven and animal share no subtype here
  EXPECT_THROW(canon("(E x :: raven)(and (animal(x)) (black(x)))"), ShapeError);
}

TEST_F(Canonicalize, UnrestrictedQuantifiersRangeOverRoot) {
  EXPECT_EQ(canon("(A x)(black(x) -> red(x))"), "(A x :: entity)(black(x) -> red(x))");
}

TEST_F(Canonicalize, DoubleNegationAndFlattening) {
  EXPECT_EQ(canon("(E x)(! (! (and (red(x)) (and (black(x)) (beautiful(x))))))"),
            "(E x :: entity)(and (beautiful(x)) (black(x)) (red(x)))");
}

TEST_F(Canonicalize, UnliftableTypeAtomIsReported) {
  EXPECT_THROW(canon("(A x)(black(x) -> raven(x))"), ShapeError);
  EXPECT_THROW(canon("(E x)(raven(x))"), ShapeError);
  EXPECT_THROW(canon("(E x :: car)(and (omelet(x)) (red(x)))"), ShapeError);
}

TEST_F(Canonicalize, UnknownPredicateAndArity) {
  EXPECT_THROW(canon("(E x)(fly(x))"), UnknownName);
  EXPECT_THROW(canon("(E x)(want(x))"), ArityError);
  EXPECT_THROW(canon("(E x :: unicorn)(red(x))"), UnknownName);
}

TEST_F(Canonicalize, SortingIgnoresBoundNames) {
  const auto a = canonicalize(parse_lf("(E p)(E q)(and (red(q)) (loud(p)))"), ont, lex);
  const auto b = canonicalize(parse_lf("(E z)(E a)(and (loud(z)) (red(a)))"), ont, lex);
  EXPECT_TRUE(alpha_equal(a, b)) << a.str() << " vs " << b.str();
}

TEST_F(Canonicalize, Idempotent) {
  for (const auto* src : {"(A x)(raven(x) -> black(x))", "(E o)(E b)(and (omelet(o)) (beer(b)) (loud(o)) (want(o, b)))",
                          "(A x)((! black(x)) -> (! (! (! raven(x)))))"}) {
    const auto once = canonicalize(parse_lf(src), ont, lex);
    const auto twice = canonicalize(once.form(), ont, lex);
    EXPECT_TRUE(alpha_equal(once, twice)) << src;
  }
}

}  // namespace
}  // namespace ontologik

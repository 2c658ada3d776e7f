#include <gtest/gtest.h>

#include "ontologik/nlparser.hpp"
#include "ontologik/unifier.hpp"
#include "support.hpp"

namespace ontologik {
namespace {

class NlParser : public ::testing::Test {
 protected:
  Ontology ont = testing::reference_ontology();
  Lexicon lex = testing::reference_lexicon(ont);

  std::string parse(std::string_view s) { return pretty(parse_sentence(s, lex, ont)); }
};

TEST_F(NlParser, CopularWithNoun) {
  const auto f = parse_sentence("Julie is an articulate person", lex, ont);
  EXPECT_EQ(pretty(f), "(E! Julie)(and (person(Julie)) (articulate(Julie)))");
  EXPECT_TRUE(alpha_equal(f, parse_lf("(E! j)(and (person(j)) (articulate(j)))")));
}

TEST_F(NlParser, CopularWithoutNoun) {
  EXPECT_EQ(parse("Julie is articulate."), "(E! Julie)(articulate(Julie))");
  EXPECT_EQ(parse("julie IS loud"), "(E! Julie)(loud(Julie))");
}

TEST_F(NlParser, Transitive) {
  EXPECT_EQ(parse("The loud omelet wants another beer"),
            "(E o)(E b)(and (omelet(o)) (beer(b)) (loud(o)) (want(o, b)))");
  EXPECT_EQ(parse("The red beer wants a car."), "(E b)(E c)(and (beer(b)) (car(c)) (red(b)) (want(b, c)))");
  EXPECT_EQ(parse("The car wants a car"), "(E c)(E c2)(and (car(c)) (car(c2)) (want(c, c2)))");
}

TEST_F(NlParser, Universals) {
  EXPECT_EQ(parse("All ravens are black"), "(A x)(raven(x) -> black(x))");
  EXPECT_EQ(parse("All non-black things are non-ravens."), "(A x)((! black(x)) -> (! raven(x)))");
  EXPECT_EQ(parse("All people are articulate"), "(A x)(person(x) -> articulate(x))");
}

TEST_F(NlParser, PatternKinds) {
  EXPECT_EQ(match_pattern("Julie is articulate", lex, ont).kind, PatternKind::Copular);
  EXPECT_EQ(match_pattern("The loud omelet wants another beer", lex, ont).kind, PatternKind::Transitive);
  EXPECT_EQ(match_pattern("All ravens are black", lex, ont).kind, PatternKind::UniversalAffirmative);
  EXPECT_EQ(match_pattern("All non-black things are non-ravens", lex, ont).kind,
            PatternKind::UniversalContrapositive);
}

TEST_F(NlParser, Errors) {
  EXPECT_THROW(parse("Ravens fly south"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("Julie is a shiny person"), UnknownName);
  EXPECT_THROW(parse("Bob is articulate"), UnknownName);
  EXPECT_THROW(parse("All geese are black"), ParseError);
  EXPECT_THROW(parse("All unicorns are black"), UnknownName);
  EXPECT_THROW(parse("The loud omelet eats a beer"), ParseError);
  EXPECT_THROW(parse("All ravens are"), ParseError);
}

TEST_F(NlParser, SentencesAnalyzeLikeTheTypedForms) {
  const std::pair<const char*, const char*> cases[] = {
      {"Julie is an articulate person", "(E! j :: person)(articulate(j))"},
      {"Julie is articulate", "(E! j :: person)(articulate(j))"},
      {"The loud omelet wants another beer",
       "(E o :: omelet)(E b :: beer)(and (loud(o)) (want(o, b)))"},
      {"All ravens are black", "(A x :: raven)(black(x))"},
      {"All non-black things are non-ravens", "(A x :: raven)(black(x))"},
  };
  for (const auto& [sentence, typed] : cases) {
    const auto a = analyze(parse_sentence(sentence, lex, ont), ont, lex);
    const auto b = analyze(parse_lf(typed), ont, lex);
    EXPECT_TRUE(alpha_equal(a.form, b.form)) << sentence << ": " << pretty(a.form);
  }
}

}  // namespace
}  // namespace ontologik

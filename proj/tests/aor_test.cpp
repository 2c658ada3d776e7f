#include <gtest/gtest.h>

#include "ontologik/aor.hpp"
#include "support.hpp"

namespace ontologik {
namespace {

class Aor : public ::testing::Test {
 protected:
  Ontology ont = testing::reference_ontology();
  Lexicon lex = testing::reference_lexicon(ont);
};

TEST_F(Aor, BeautifulRedCar) {
  const auto v = check_order(ont, lex, {"beautiful", "red"}, "car");
  ASSERT_TRUE(accepted(v));
  EXPECT_EQ(std::get<AorAccepted>(v).running_types,
            (std::vector<std::string>{"car", "physical", "entity"}));
}

TEST_F(Aor, RedBeautifulCarCastsDown) {
  const auto v = check_order(ont, lex, {"red", "beautiful"}, "car");
  EXPECT_EQ(v, (AorVerdict{AorViolation{0, "physical", "entity"}}));
}

TEST_F(Aor, NoAdjectives) {
  EXPECT_EQ(check_order(ont, lex, {}, "car"), (AorVerdict{AorAccepted{{"car"}, {}}}));
}

TEST_F(Aor, RepeatedExpectationIsNotStrict) {
  // Rule table: physical after physical is Equal, which the ⊑ rule admits.
  ASSERT_EQ(ont.compare("physical", "physical"), SubsumptionVerdict::Equal);
  const auto v = check_order(ont, lex, {"red", "red"}, "car");
  EXPECT_EQ(v, (AorVerdict{AorAccepted{{"car", "physical", "physical"}, {}}}));
}

TEST_F(Aor, IncomparableNeedsARelation) {
  // loud expects person; car is incomparable and nothing relates them.
  EXPECT_EQ(check_order(ont, lex, {"beautiful", "loud"}, "car"), (AorVerdict{AorTypeFailure{1}}));
  // omelet can be coerced to a person eating it.
  const auto v = check_order(ont, lex, {"loud"}, "omelet");
  ASSERT_TRUE(accepted(v));
  const auto& a = std::get<AorAccepted>(v);
  EXPECT_EQ(a.running_types, (std::vector<std::string>{"omelet", "person"}));
  ASSERT_EQ(a.coercion_notes.size(), 1u);
  EXPECT_NE(a.coercion_notes[0].find("EATING"), std::string::npos);
}

TEST_F(Aor, UnknownWords) {
  EXPECT_THROW(check_order(ont, lex, {"shiny"}, "car"), UnknownName);
  EXPECT_THROW(check_order(ont, lex, {"red"}, "spaceship"), UnknownName);
  EXPECT_THROW(check_order(ont, lex, {"want"}, "car"), ArityError);
}

TEST_F(Aor, PreferredOrdersForTwo) {
  const auto ranked = preferred_orders(ont, lex, {"beautiful", "red"}, "car");
  ASSERT_EQ(ranked.size(), 2u);
  EXPECT_EQ(ranked[0].first, (std::vector<std::string>{"beautiful", "red"}));
  EXPECT_TRUE(accepted(ranked[0].second));
  EXPECT_EQ(ranked[1].first, (std::vector<std::string>{"red", "beautiful"}));
  EXPECT_TRUE(std::holds_alternative<AorViolation>(ranked[1].second));
}

TEST_F(Aor, PreferredOrdersSingle) {
  const auto ranked = preferred_orders(ont, lex, {"red"}, "car");
  ASSERT_EQ(ranked.size(), 1u);
  EXPECT_TRUE(accepted(ranked[0].second));
}

TEST_F(Aor, PreferredOrdersForThree) {
  // Enumerated by hand: beautiful (entity) must be outermost; red and black
  // (both physical) may come in either order beneath it.
  const auto ranked = preferred_orders(ont, lex, {"beautiful", "red", "black"}, "car");
  ASSERT_EQ(ranked.size(), 6u);
  std::vector<std::vector<std::string>> ok;
  for (const auto& [order, verdict] : ranked) {
    if (accepted(verdict)) ok.push_back(order);
  }
  EXPECT_EQ(ok, (std::vector<std::vector<std::string>>{{"beautiful", "black", "red"},
                                                       {"beautiful", "red", "black"}}));
  EXPECT_TRUE(accepted(ranked[0].second));
  EXPECT_TRUE(accepted(ranked[1].second));
  for (std::size_t i = 2; i < ranked.size(); ++i) EXPECT_FALSE(accepted(ranked[i].second));
}

TEST_F(Aor, EnumerationBound) {
  const auto big = Ontology::load("type entity");
  std::string src;
  std::set<std::string> adjs;
  for (int i = 0; i < 9; ++i) {
    src += "pred a" + std::to_string(i) + "(entity)\n";
    adjs.insert("a" + std::to_string(i));
  }
  const auto big_lex = Lexicon::load(src, big);
  EXPECT_THROW(preferred_orders(big, big_lex, adjs, "entity"), ShapeError);
  adjs.erase("a8");
  EXPECT_EQ(preferred_orders(big, big_lex, adjs, "entity").size(), 40320u);
}

}  // namespace
}  // namespace ontologik

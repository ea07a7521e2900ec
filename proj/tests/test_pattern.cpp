#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pcqa/pattern.hpp"

using namespace pcqa;

TEST_SUITE("pattern") {
  TEST_CASE("single-rule file parses into one high-precision pattern") {
    auto patterns = parse_pattern_file("P1 hp: VERB[$SEEDS] >nmod:with CAPTURE(NOUN|PROPN)\n");
    REQUIRE(patterns.size() == 1);
    const DepPattern& p = patterns[0];
    CHECK(p.id == "P1");
    CHECK(p.tier == Tier::HighPrecision);
    REQUIRE(p.steps.size() == 1);
    CHECK(p.capture_index == 0);
    CHECK(p.anchor.pos == std::vector<std::string>{"VERB"});
    CHECK(p.anchor.lemma.lexicon == "SEEDS");
    CHECK(p.steps[0].direction == StepDirection::Down);
    CHECK(p.steps[0].is_capture);
    CHECK(p.steps[0].cons.pos == std::vector<std::string>{"NOUN", "PROPN"});
  }

  TEST_CASE("empty file and comments give no patterns") {
    CHECK(parse_pattern_file("").empty());
    CHECK(parse_pattern_file("# nothing here\n\n   \n").empty());
  }

  TEST_CASE("duplicate ids are rejected") {
    std::string text =
        "P1 hp: VERB[$S] >dobj CAPTURE(NOUN)\n"
        "P1 ex: VERB[$S] >dobj CAPTURE(NOUN)\n";
    CHECK_THROWS_WITH_AS(parse_pattern_file(text), doctest::Contains("duplicate pattern id"),
                         PatternError);
  }

  TEST_CASE("syntax errors carry line and column") {
    try {
      parse_pattern_file("P1 zz: VERB >dobj CAPTURE(NOUN)\n");
      FAIL("expected PatternError");
    } catch (const PatternError& e) {
      CHECK(e.line == 1);
      CHECK(e.column > 1);
      CHECK(std::string(e.what()).find("unknown tier") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_pattern_file("P1 hp: VERB dobj CAPTURE(NOUN)\n"), PatternError);
    CHECK_THROWS_WITH_AS(parse_pattern_file("P1 hp: VERB >dobj NOUN\n"),
                         doctest::Contains("no CAPTURE"), PatternError);
    CHECK_THROWS_WITH_AS(parse_pattern_file("P1 hp: VERB >dobj CAPTURE(NOUN) >dobj CAPTURE(NOUN)\n"),
                         doctest::Contains("more than one CAPTURE"), PatternError);
    CHECK_THROWS_WITH_AS(parse_pattern_file("P1 hp: VERB\n"), doctest::Contains("direction"),
                         PatternError);
    CHECK_THROWS_WITH_AS(parse_pattern_file("P1 ex: VERB >* * >dobj CAPTURE(NOUN)\n"),
                         doctest::Contains("unconstrained step"), PatternError);
  }

  TEST_CASE("work-with-nook matches when the seed lexicon holds work") {
    auto patterns = parse_pattern_file("P1 ex: VERB[$SEEDS] >nmod:with CAPTURE(NOUN|PROPN)\n");
    DependencyGraph g = testutil::nook_question();

    LexiconBindings lex{{"SEEDS", {"work", "fit"}}};
    auto matches = match_pattern(patterns[0], g, lex);
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].anchor_index == 3);
    CHECK(matches[0].captured_index == 6);
    CHECK(g.token(matches[0].captured_index).form == "nook");

    LexiconBindings fit_only{{"SEEDS", {"fit"}}};
    CHECK(match_pattern(patterns[0], g, fit_only).empty());
  }

  TEST_CASE("adjective-anchored pattern captures the Chromebook head") {
    auto patterns = parse_pattern_file("A1 ex: ADJ[compatible] >nmod:with CAPTURE(NOUN|PROPN)\n");
    DependencyGraph g = testutil::chromebook_question();
    auto matches = match_pattern(patterns[0], g, {});
    REQUIRE(matches.size() == 1);
    CHECK(g.token(matches[0].captured_index).form == "Chromebook");
  }

  TEST_CASE("chained up and down steps walk through the pronoun guard") {
    auto patterns = parse_pattern_file(
        "H1 hp: VERB[$VERBS] >nsubj|dobj *[it|this] <nsubj|dobj VERB >nmod:with CAPTURE(NOUN|PROPN)\n");
    LexiconBindings lex{{"VERBS", {"work"}}};
    auto matches = match_pattern(patterns[0], testutil::tablet_review(), lex);
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].anchor_index == 2);
    CHECK(matches[0].captured_index == 5);
  }

  TEST_CASE("undefined lexicon reference is an error at match time") {
    auto patterns = parse_pattern_file("P1 ex: VERB[$NOPE] >dobj CAPTURE(NOUN)\n");
    CHECK_THROWS_WITH(static_cast<void>(match_pattern(patterns[0], testutil::nook_question(), {})),
                      doctest::Contains("undefined lexicon"));
  }

  TEST_CASE("prefix wildcard admits any case-marked variant") {
    DeprelConstraint c{{"nmod:*"}};
    CHECK(c.admits("nmod:with"));
    CHECK(c.admits("nmod:on"));
    CHECK(c.admits("nmod"));
    CHECK_FALSE(c.admits("nmodx"));
    CHECK_FALSE(c.admits("dobj"));
  }

  TEST_CASE("matching is pure and deterministic") {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      DependencyGraph g = testutil::random_graph(rng);
      DepPattern p = testutil::random_pattern(rng, trial);
      LexiconBindings lex{{"VERBS", {"work", "fit"}}};
      auto a = match_pattern(p, g, lex);
      auto b = match_pattern(p, g, lex);
      REQUIRE(a.size() == b.size());
      for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].anchor_index == b[i].anchor_index);
        CHECK(a[i].captured_index == b[i].captured_index);
      }
      // ordered by anchor then capture
      for (size_t i = 1; i < a.size(); ++i) {
        CHECK(std::pair(a[i - 1].anchor_index, a[i - 1].captured_index) <
              std::pair(a[i].anchor_index, a[i].captured_index));
      }
    }
  }

  TEST_CASE("matches replay soundly and agree with brute force on small graphs") {
    Rng rng(31);
    LexiconBindings lex{{"VERBS", {"work", "fit"}}};
    for (int trial = 0; trial < 1000; ++trial) {
      DependencyGraph g = testutil::random_graph(rng, 8);
      DepPattern p = testutil::random_pattern(rng, trial);
      auto matches = match_pattern(p, g, lex);
      auto expected = oracle::brute_force_matches(p, g, lex);
      REQUIRE(matches.size() == expected.size());
      for (size_t i = 0; i < matches.size(); ++i) {
        CHECK(matches[i].anchor_index == expected[i].first);
        CHECK(matches[i].captured_index == expected[i].second);
      }
    }
  }

  TEST_CASE("builtin pattern file parses with both tiers present") {
    auto patterns = parse_pattern_file(default_pattern_text());
    int hp = 0, ex = 0;
    for (const DepPattern& p : patterns) (p.tier == Tier::HighPrecision ? hp : ex)++;
    CHECK(ex == 6);
    CHECK(hp == 2);
  }
}

#include <doctest.h>

#include "helpers.hpp"
#include "pcqa/chunk.hpp"

using namespace pcqa;

TEST_SUITE("chunk") {
  TEST_CASE("determiner is inside the span but stripped from the surface") {
    DependencyGraph g = testutil::chromebook_question();
    EntityMention m = chunk_noun_phrase(g, 7);
    CHECK(m.surface == "HP Chromebook");
    CHECK(m.span_begin == 5);  // "a"
    CHECK(m.span_end == 7);
    CHECK(m.head_index == 7);
  }

  TEST_CASE("single noun with determiner") {
    DependencyGraph g = testutil::nook_question();
    EntityMention m = chunk_noun_phrase(g, 6);
    CHECK(m.surface == "nook");
  }

  TEST_CASE("trailing numeral joins the name") {
    DependencyGraph g = testutil::surface_question();
    EntityMention m = chunk_noun_phrase(g, 5);
    CHECK(m.surface == "Surface Pro 3");
    CHECK(m.span_begin == 5);
    CHECK(m.span_end == 7);
    // NNP NNP CD also chunks from the inner head
    CHECK(chunk_noun_phrase(g, 6).surface == "Surface Pro 3");
  }

  TEST_CASE("non-nominal head is an error") {
    DependencyGraph g = testutil::nook_question();
    CHECK_THROWS_AS(chunk_noun_phrase(g, 4), std::invalid_argument);  // "with"
    CHECK_THROWS_AS(chunk_noun_phrase(g, 5), std::invalid_argument);  // "a"
  }

  TEST_CASE("xpos drives classification when present") {
    // UPOS says X but PTB tags carry the NP: "a burly NNP NN"
    DependencyGraph g = testutil::make_graph({{"a", "a", "X", "DT", 3, "det"},
                                              {"burly", "burly", "X", "JJ", 3, "amod"},
                                              {"Foo", "foo", "X", "NNP", 0, "root"},
                                              {"bar", "bar", "X", "NN", 3, "compound"}});
    EntityMention m = chunk_noun_phrase(g, 3);
    CHECK(m.surface == "burly Foo bar");
    CHECK(m.span_begin == 1);
  }

  TEST_CASE("numeral cannot end the window without a nominal before it") {
    // "3 3" NUM NUM with one NOUN head in front
    DependencyGraph g = testutil::make_graph({{"unit", "unit", "NOUN", "NN", 0, "root"},
                                              {"3", "3", "NUM", "CD", 1, "nummod"},
                                              {"4", "4", "NUM", "CD", 1, "nummod"}});
    EntityMention m = chunk_noun_phrase(g, 1);
    // NOUN NUM matches; NOUN NUM NUM does not
    CHECK(m.surface == "unit 3");
  }

  TEST_CASE("chunking is idempotent from any nominal token in the span") {
    Rng rng(47);
    int spans = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      DependencyGraph g = testutil::random_graph(rng);
      for (const Token& t : g.tokens) {
        if (!is_nominal(t)) continue;
        EntityMention m = chunk_noun_phrase(g, t.index);
        CHECK(m.span_begin <= t.index);
        CHECK(t.index <= m.span_end);
        CHECK_FALSE(m.surface.empty());
        for (int i = m.span_begin; i <= m.span_end; ++i) {
          if (!is_nominal(g.token(i))) continue;
          EntityMention again = chunk_noun_phrase(g, i);
          CHECK(again.span_begin == m.span_begin);
          CHECK(again.span_end == m.span_end);
          ++spans;
        }
      }
    }
    CHECK(spans > 1000);
  }
}

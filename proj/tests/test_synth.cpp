#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "pcqa/bootstrap.hpp"
#include "pcqa/corpus.hpp"
#include "pcqa/synth.hpp"

using namespace pcqa;
using nlohmann::json;

namespace {

SynthSpec small_spec(uint64_t seed = 1) {
  SynthSpec s;
  s.seed = seed;
  s.n_questions = 60;
  s.vocab.n_noise_reviews = 10;
  return s;
}

std::vector<QAPair> load_generated(const SynthOutput& out) {
  ParseIndex idx = ParseIndex::from_conllu(out.question_conllu);
  std::istringstream in(out.qa_jsonl);
  return load_qa_corpus(in, &idx);
}

}  // namespace

TEST_SUITE("synth") {
  TEST_CASE("same spec and seed give byte-identical corpora") {
    SynthOutput a = generate_synthetic_corpus(small_spec(7));
    SynthOutput b = generate_synthetic_corpus(small_spec(7));
    CHECK(a.qa_jsonl == b.qa_jsonl);
    CHECK(a.question_conllu == b.question_conllu);
    CHECK(a.review_conllu == b.review_conllu);
    CHECK(a.manifest_json == b.manifest_json);

    SynthOutput c = generate_synthetic_corpus(small_spec(8));
    CHECK(a.qa_jsonl != c.qa_jsonl);
  }

  TEST_CASE("bad fractions are rejected") {
    SynthSpec s = small_spec();
    s.fraction_explicit = 0.8;
    s.fraction_neutral = 0.5;
    CHECK_THROWS_AS(generate_synthetic_corpus(s), std::invalid_argument);
    s.fraction_explicit = -0.1;
    s.fraction_neutral = 0.0;
    CHECK_THROWS_AS(generate_synthetic_corpus(s), std::invalid_argument);
    s.fraction_explicit = 1.2;
    CHECK_THROWS_AS(generate_synthetic_corpus(s), std::invalid_argument);
  }

  TEST_CASE("fraction_neutral 1 makes every gold polarity neutral") {
    SynthSpec s = small_spec(3);
    s.fraction_explicit = 0.0;
    s.fraction_neutral = 1.0;
    SynthOutput out = generate_synthetic_corpus(s);
    std::vector<QAPair> corpus = load_generated(out);
    REQUIRE_FALSE(corpus.empty());
    for (const QAPair& qa : corpus) {
      REQUIRE(qa.gold.has_value());
      CHECK(qa.gold->polarity == Polarity::Neutral);
    }
  }

  TEST_CASE("generated corpora load cleanly and match the manifest counts") {
    SynthOutput out = generate_synthetic_corpus(small_spec(5));
    std::vector<QAPair> corpus = load_generated(out);
    json manifest = json::parse(out.manifest_json);
    CHECK(corpus.size() == 60);
    int gold_bearing = 0;
    for (const QAPair& qa : corpus)
      if (qa.gold && !qa.gold->entities.empty()) ++gold_bearing;
    CHECK(gold_bearing == manifest.at("n_entity_questions").get<int>());

    std::istringstream rin(out.review_conllu);
    std::vector<ReviewSentence> reviews = load_review_corpus(rin);
    CHECK_FALSE(reviews.empty());
  }

  TEST_CASE("planted supports at the threshold are learned, decoys below are not") {
    SynthSpec s = small_spec(11);
    s.vocab.verb_support = 3;   // exactly at the default min_verb_support
    s.vocab.decoy_support = 2;  // threshold - 1
    s.vocab.entity_support = 4;
    SynthOutput out = generate_synthetic_corpus(s);

    std::istringstream rin(out.review_conllu);
    std::vector<ReviewSentence> reviews = load_review_corpus(rin);
    json manifest = json::parse(out.manifest_json);

    BootstrapParams params;  // min supports 3/3
    std::set<std::string> seeds;
    for (const auto& v : manifest.at("seeds")) seeds.insert(v.get<std::string>());
    BootstrapResult res =
        bootstrap(reviews, seeds, parse_pattern_file(default_pattern_text()), params);

    for (const auto& [verb, support] : manifest.at("planted_verbs").items()) {
      INFO("planted verb ", verb);
      REQUIRE(res.verbs.contains(verb));
      CHECK(res.verbs.entries.at(verb).support == support.get<int>());
    }
    for (const auto& [verb, support] : manifest.at("decoy_verbs").items()) {
      INFO("decoy verb ", verb);
      CHECK_FALSE(res.verbs.contains(verb));
    }
    for (const auto& [surface, support] : manifest.at("planted_entities").items()) {
      INFO("planted entity ", surface);
      CHECK(res.entities.contains(surface));
    }
  }

  TEST_CASE("planted verb support below threshold is never learnable") {
    SynthSpec s = small_spec(13);
    s.vocab.verb_support = 2;  // below the default threshold of 3
    SynthOutput out = generate_synthetic_corpus(s);
    std::istringstream rin(out.review_conllu);
    std::vector<ReviewSentence> reviews = load_review_corpus(rin);
    json manifest = json::parse(out.manifest_json);
    BootstrapResult res = bootstrap(reviews, {"work", "fit"},
                                    parse_pattern_file(default_pattern_text()), BootstrapParams{});
    for (const auto& [verb, support] : manifest.at("planted_verbs").items())
      CHECK_FALSE(res.verbs.contains(verb));
  }
}

#pragma once

#include <cstdint>
#include <string>

namespace pcqa {

// Knobs for question/answer shaping beyond the class fractions.
struct SynthTemplates {
  double entity_question_fraction = 0.8;  // gold-bearing share of questions
  double two_sentence_fraction = 0.15;    // entity questions with a lead-in sentence
  double yes_ratio = 0.75;                // yes share among polar answers
};

// Review-side planting. Supports are exact sentence counts, so they double as
// the bootstrap count oracle.
struct SynthVocab {
  int n_question_entities = 40;  // distinct specific product names in questions
  int n_review_entities = 6;     // general nouns planted in reviews
  int n_verbs = 4;               // learnable verbs planted above threshold
  int n_decoy_verbs = 3;         // verbs planted below threshold
  int entity_support = 5;        // review sentences backing each planted entity
  int verb_support = 5;          // review sentences backing each planted verb
  int decoy_support = 2;         // keep below the bootstrap min_verb_support
  int n_noise_reviews = 30;      // filler sentences with no plantable structure
};

// fraction_explicit + fraction_neutral <= 1; the remainder of gold-bearing
// answers is implicit yes/no.
struct SynthSpec {
  uint64_t seed = 1;
  int n_questions = 100;
  double fraction_explicit = 0.5;
  double fraction_neutral = 0.2;
  SynthTemplates templates;
  SynthVocab vocab;
};

// All four artifacts in ingestion-ready formats: QA JSONL with gold, question
// parses, review parses, and a JSON manifest with planted supports and class
// counts. Byte-identical for identical specs.
struct SynthOutput {
  std::string qa_jsonl;
  std::string question_conllu;
  std::string review_conllu;
  std::string manifest_json;
};

SynthOutput generate_synthetic_corpus(const SynthSpec& spec);

}  // namespace pcqa

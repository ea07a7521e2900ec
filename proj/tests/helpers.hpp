#pragma once

// Shared fixtures and generators for the test suites.

#include <string>
#include <vector>

#include "pcqa/conllu.hpp"
#include "pcqa/corpus.hpp"
#include "pcqa/pattern.hpp"
#include "pcqa/util.hpp"

namespace testutil {

struct Tok {
  const char* form;
  const char* lemma;
  const char* upos;
  const char* xpos;
  int head;
  const char* deprel;
};

inline pcqa::DependencyGraph make_graph(std::initializer_list<Tok> toks) {
  pcqa::DependencyGraph g;
  int i = 0;
  std::vector<std::string> forms;
  for (const Tok& t : toks) {
    pcqa::Token tok;
    tok.index = ++i;
    tok.form = t.form;
    tok.lemma = t.lemma;
    tok.upos = t.upos;
    tok.xpos = t.xpos;
    tok.head = t.head;
    tok.deprel = t.deprel;
    forms.push_back(t.form);
    g.tokens.push_back(std::move(tok));
  }
  g.sentence_text = pcqa::join(forms, " ");
  return g;
}

// "Will it work with a nook ?"
inline pcqa::DependencyGraph nook_question() {
  return make_graph({{"Will", "will", "AUX", "MD", 3, "aux"},
                     {"it", "it", "PRON", "PRP", 3, "nsubj"},
                     {"work", "work", "VERB", "VB", 0, "root"},
                     {"with", "with", "ADP", "IN", 6, "case"},
                     {"a", "a", "DET", "DT", 6, "det"},
                     {"nook", "nook", "NOUN", "NN", 3, "nmod:with"},
                     {"?", "?", "PUNCT", ".", 3, "punct"}});
}

// "Is this compatible with a HP Chromebook ?"
inline pcqa::DependencyGraph chromebook_question() {
  return make_graph({{"Is", "be", "AUX", "VBZ", 3, "cop"},
                     {"this", "this", "PRON", "DT", 3, "nsubj"},
                     {"compatible", "compatible", "ADJ", "JJ", 0, "root"},
                     {"with", "with", "ADP", "IN", 7, "case"},
                     {"a", "a", "DET", "DT", 7, "det"},
                     {"HP", "hp", "PROPN", "NNP", 7, "compound"},
                     {"Chromebook", "chromebook", "PROPN", "NNP", 3, "nmod:with"},
                     {"?", "?", "PUNCT", ".", 3, "punct"}});
}

// "Will it work with Surface Pro 3 ?"
inline pcqa::DependencyGraph surface_question() {
  return make_graph({{"Will", "will", "AUX", "MD", 3, "aux"},
                     {"it", "it", "PRON", "PRP", 3, "nsubj"},
                     {"work", "work", "VERB", "VB", 0, "root"},
                     {"with", "with", "ADP", "IN", 5, "case"},
                     {"Surface", "surface", "PROPN", "NNP", 3, "nmod:with"},
                     {"Pro", "pro", "PROPN", "NNP", 5, "flat"},
                     {"3", "3", "NUM", "CD", 5, "nummod"},
                     {"?", "?", "PUNCT", ".", 3, "punct"}});
}

// "It works with my tablet ."
inline pcqa::DependencyGraph tablet_review() {
  return make_graph({{"It", "it", "PRON", "PRP", 2, "nsubj"},
                     {"works", "work", "VERB", "VBZ", 0, "root"},
                     {"with", "with", "ADP", "IN", 5, "case"},
                     {"my", "my", "PRON", "PRP$", 5, "nmod:poss"},
                     {"tablet", "tablet", "NOUN", "NN", 2, "nmod:with"},
                     {".", ".", "PUNCT", ".", 2, "punct"}});
}

// Random dependency tree: token 1 is the root, every later token attaches to
// an earlier one, so the tree invariant holds by construction.
inline pcqa::DependencyGraph random_graph(pcqa::Rng& rng, int max_tokens = 8) {
  static const std::vector<std::string> upos = {"VERB", "NOUN", "PROPN", "ADJ",
                                                "PRON", "DET",  "ADP",   "NUM"};
  static const std::vector<std::string> lemmas = {"work", "fit",  "it",   "this", "nook",
                                                  "tablet", "phone", "good", "a",  "with"};
  static const std::vector<std::string> deprels = {"nsubj", "dobj",  "nmod:with", "nmod:on",
                                                   "amod",  "det",   "case",      "punct"};
  int n = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(max_tokens - 1)));
  pcqa::DependencyGraph g;
  for (int i = 1; i <= n; ++i) {
    pcqa::Token t;
    t.index = i;
    t.lemma = lemmas[rng.below(lemmas.size())];
    t.form = t.lemma;
    t.upos = upos[rng.below(upos.size())];
    t.head = i == 1 ? 0 : 1 + static_cast<int>(rng.below(static_cast<uint64_t>(i - 1)));
    t.deprel = i == 1 ? "root" : deprels[rng.below(deprels.size())];
    g.tokens.push_back(std::move(t));
  }
  g.sentence_text = "synthetic";
  return g;
}

// Random pattern over the same label/lemma pools; always valid (exactly one
// capture, no fully wildcard non-capture step).
inline pcqa::DepPattern random_pattern(pcqa::Rng& rng, int id_no) {
  static const std::vector<std::string> upos = {"VERB", "NOUN", "PROPN", "ADJ", "PRON"};
  static const std::vector<std::string> lemmas = {"work", "fit", "it", "this", "nook", "tablet"};
  static const std::vector<std::string> deprels = {"nsubj", "dobj", "nmod:with", "nmod:on", "amod"};
  pcqa::DepPattern p;
  p.id = "R" + std::to_string(id_no);
  p.tier = pcqa::Tier::Extraction;
  if (rng.below(2) == 0) p.anchor.pos.push_back(upos[rng.below(upos.size())]);
  if (rng.below(3) == 0) p.anchor.lemma.lemmas.push_back(lemmas[rng.below(lemmas.size())]);
  int n_steps = 1 + static_cast<int>(rng.below(3));
  p.capture_index = static_cast<int>(rng.below(static_cast<uint64_t>(n_steps)));
  for (int s = 0; s < n_steps; ++s) {
    pcqa::PatternStep step;
    step.direction = rng.below(10) < 7 ? pcqa::StepDirection::Down : pcqa::StepDirection::Up;
    switch (rng.below(4)) {
      case 0: step.deprel.alts.push_back("*"); break;
      case 1: step.deprel.alts.push_back("nmod:*"); break;
      default: step.deprel.alts.push_back(deprels[rng.below(deprels.size())]);
    }
    if (rng.below(2) == 0) step.cons.pos.push_back(upos[rng.below(upos.size())]);
    if (rng.below(4) == 0) step.cons.lemma.lemmas.push_back(lemmas[rng.below(lemmas.size())]);
    step.is_capture = s == p.capture_index;
    if (!step.is_capture && step.deprel.wildcard() && step.cons.wildcard())
      step.deprel.alts = {deprels[rng.below(deprels.size())]};
    p.steps.push_back(std::move(step));
  }
  return p;
}

}  // namespace testutil

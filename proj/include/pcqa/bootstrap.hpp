#pragma once

#include <set>
#include <string>
#include <vector>

#include "pcqa/corpus.hpp"
#include "pcqa/lexicon.hpp"
#include "pcqa/pattern.hpp"

namespace pcqa {

struct BootstrapParams {
  int max_iterations = 5;
  int min_entity_support = 3;  // distinct review sentences backing an entity
  int min_verb_support = 3;    // distinct review sentences backing a verb
  // Barred from the learned verb set; high-frequency verbs drift the lexicon
  // toward unrelated relations.
  std::set<std::string> stopword_verbs = {"be", "have", "do", "get", "use"};
};

struct BootstrapResult {
  VerbLexicon verbs;
  EntityLexicon entities;
  int iterations_run = 0;
};

// Alternating lexicon expansion over unlabeled reviews, from seed verbs:
//   (a) high-precision patterns anchored on the current verb lexicon harvest
//       candidate entities (NP-chunked, case-folded);
//   (b) extraction patterns with the anchor lemma freed collect new verbs,
//       counted only from sentences where the subject/object is it/this or
//       the captured entity is already in the candidate lexicon.
// Runs to fixpoint or max_iterations. Support is the number of distinct
// review sentences backing an entry, so results are independent of review
// order.
BootstrapResult bootstrap(const std::vector<ReviewSentence>& reviews,
                          const std::set<std::string>& seeds,
                          const std::vector<DepPattern>& patterns, const BootstrapParams& params,
                          unsigned jobs = 1);

struct ExtractedMention {
  std::string surface;                   // first-seen original casing
  std::vector<std::string> pattern_ids;  // patterns that produced it
};

// One prediction per question: extraction-tier matches over every question
// sentence, NP-chunked, overlap-resolved (longer span wins, then leftmost)
// and deduplicated case-folded across sentences.
struct QuestionExtraction {
  std::string qa_id;
  std::vector<ExtractedMention> mentions;
};

QuestionExtraction extract_from_question(const QAPair& qa, const VerbLexicon& verbs,
                                         const std::vector<DepPattern>& patterns);

}  // namespace pcqa

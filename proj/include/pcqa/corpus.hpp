#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcqa/conllu.hpp"
#include "pcqa/types.hpp"
#include "pcqa/util.hpp"

namespace pcqa {

struct Gold {
  std::vector<std::string> entities;  // annotated complementary entity surfaces
  Polarity polarity = Polarity::Neutral;
};

struct QAPair {
  std::string qa_id;
  std::string product_id;
  std::string category;
  std::string question_text;
  int n_question_sentences = 0;
  std::vector<DependencyGraph> question_sentences;  // empty in answers-only mode
  std::vector<std::string> answers;
  std::optional<Gold> gold;
};

struct ReviewSentence {
  std::string review_id;
  std::string product_category;
  DependencyGraph graph;
};

struct DatasetStats {
  int n_questions = 0;
  int n_question_sentences = 0;
  int n_cp_mentions = 0;
  int n_unique_cp = 0;
  int n_pos = 0;
  int n_neg = 0;
  int n_neu = 0;

  Rational density() const { return Rational(n_cp_mentions, n_question_sentences == 0 ? 1 : n_question_sentences); }
};

struct CorpusError : std::runtime_error {
  int line;
  CorpusError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Question parses indexed by "<qa_id>:<ordinal>" sent_id comments.
struct ParseIndex {
  std::map<std::string, DependencyGraph> by_key;

  static ParseIndex from_conllu(const std::string& text, LoadStats* stats = nullptr);
  const DependencyGraph* find(const std::string& key) const;
};

struct LoadOptions {
  bool strict = true;        // lenient mode skips bad records and counts them
  bool resolve_parses = true;  // false: answers-only loading (training input)
};

// One JSON object per line:
//   {"qa_id": str, "product_id": str, "category": str, "question": str,
//    "n_question_sentences": int, "answers": [str, ...],
//    "gold": {"entities": [...], "polarity": "yes"|"no"|"neutral"} | null}
std::vector<QAPair> load_qa_corpus(std::istream& in, const ParseIndex* parses,
                                   const LoadOptions& opts = {}, LoadStats* stats = nullptr);

// CoNLL-U with "# review_id = <id>:<ordinal>" comments; optional
// "# category = ..." carries the product category.
std::vector<ReviewSentence> load_review_corpus(std::istream& in, const LoadOptions& opts = {},
                                               LoadStats* stats = nullptr);

// Requires gold on every pair; throws CorpusError naming the offending qa_id
// otherwise. Unique complementary products are counted by case-folded exact
// surface; each listed mention counts once.
DatasetStats corpus_stats(const std::vector<QAPair>& corpus);

// Table-style report: one row per category plus a total row when the corpus
// spans several categories.
std::string render_stats_table(const std::vector<std::pair<std::string, DatasetStats>>& rows);
std::string stats_to_json(const std::vector<std::pair<std::string, DatasetStats>>& rows);

}  // namespace pcqa

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pcqa/corpus.hpp"
#include "pcqa/pipeline.hpp"
#include "pcqa/util.hpp"

namespace pcqa {

struct PRF {
  long long tp = 0, fp = 0, fn = 0;

  Rational precision() const { return tp + fp == 0 ? Rational(0, 1) : Rational(tp, tp + fp); }
  Rational recall() const { return tp + fn == 0 ? Rational(0, 1) : Rational(tp, tp + fn); }
  // 2PR/(P+R) = 2tp/(2tp+fp+fn), exactly.
  Rational f1() const { return 2 * tp + fp + fn == 0 ? Rational(0, 1) : Rational(2 * tp, 2 * tp + fp + fn); }
};

// qa_id -> predicted/gold mention surfaces (any casing; comparison is
// case-folded and whitespace-normalized).
using MentionSets = std::map<std::string, std::set<std::string>>;

std::string normalize_mention(std::string_view s);

// Question-level counting: a question is a true positive when the predicted
// set equals the gold set; any non-empty wrong prediction is one false
// positive; a gold-bearing question without a correct prediction is one false
// negative (so one wrong non-empty prediction on a gold-bearing question
// counts as both fp and fn). The qa_id universes must match.
PRF eval_cer(const MentionSets& predictions, const MentionSets& gold);

// Exact-match accuracy over the 3 polarity classes, restricted to questions
// with non-empty gold entity sets. Throws when that set is empty or a
// prediction is missing.
Rational eval_answers(const std::map<std::string, Polarity>& predictions,
                      const std::vector<QAPair>& corpus);

// A question counts as correct when the predicted entity set exactly matches
// gold AND the predicted label matches the gold polarity; accuracy over
// gold-bearing questions.
Rational eval_overall(const std::vector<CompatibilityRecord>& records,
                      const std::vector<QAPair>& corpus);

// Baseline: every maximal NP chunk in every question sentence is a prediction.
MentionSets baseline_np_chunker(const std::vector<QAPair>& corpus);

// Baseline: explicit leading yes/no, otherwise neutral.
std::map<std::string, Polarity> baseline_yesno(const std::vector<QAPair>& corpus,
                                               AnswerPolicy policy = AnswerPolicy::First);

struct ProductEval {
  std::string product;
  int n_questions = 0;
  int n_gold_bearing = 0;
  PRF cer;
  PRF np_baseline;
  Rational answer_accuracy;
  Rational yesno_accuracy;
  Rational overall_accuracy;
};

struct EvalReport {
  std::vector<ProductEval> products;  // per category, plus "all" when several
  std::string config_json;            // resolved run configuration snapshot
};

std::string render_eval_tables(const EvalReport& report);
std::string eval_report_to_json(const EvalReport& report);

}  // namespace pcqa

#pragma once

#include <string>
#include <vector>

#include "pcqa/bootstrap.hpp"
#include "pcqa/corpus.hpp"
#include "pcqa/pu.hpp"

namespace pcqa {

enum class AnswerPolicy { First, Vote };

struct Evidence {
  std::string qa_id;
  int answer_index = 0;  // -1 when no single answer carries the vote outcome
  Polarity polarity = Polarity::Neutral;
  std::vector<std::string> pattern_ids;
};

// The end product: one mined (target product, entity, label) triple with the
// question/answer evidence behind it.
struct CompatibilityRecord {
  std::string product_id;
  std::string entity_surface;
  CompatLabel label = CompatLabel::Unknown;
  Evidence evidence;
};

// Stage 1 extraction per question; questions with no extracted entity yield
// no records and no answer classification. Stage 2 classifies the first
// answer (or the majority vote across answers, ties neutral) and stamps the
// mapped label on every extracted entity.
std::vector<CompatibilityRecord> run_pipeline(const std::vector<QAPair>& corpus,
                                              const VerbLexicon& verbs,
                                              const std::vector<DepPattern>& patterns,
                                              const AnswerModel& model,
                                              AnswerPolicy policy = AnswerPolicy::First,
                                              unsigned jobs = 1);

// Classifies the designated answer of one question, independent of extraction.
Polarity classify_qa_answer(const QAPair& qa, const AnswerModel& model, AnswerPolicy policy);

std::string records_to_jsonl(const std::vector<CompatibilityRecord>& records);
std::vector<CompatibilityRecord> records_from_jsonl(const std::string& text);

}  // namespace pcqa

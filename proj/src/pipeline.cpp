#include "pcqa/pipeline.hpp"

#include <sstream>

#include <json.hpp>

#include "pcqa/util.hpp"

namespace pcqa {

using nlohmann::json;

namespace {

std::pair<Polarity, int> vote_answers(const std::vector<std::string>& answers,
                                      const AnswerModel& model) {
  int counts[3] = {0, 0, 0};
  std::vector<Polarity> per_answer;
  per_answer.reserve(answers.size());
  for (const std::string& a : answers) {
    Polarity p = classify_answer(a, model);
    per_answer.push_back(p);
    counts[static_cast<int>(p)]++;
  }
  int best = std::max({counts[0], counts[1], counts[2]});
  int winners = (counts[0] == best) + (counts[1] == best) + (counts[2] == best);
  Polarity chosen = Polarity::Neutral;  // ties are neutral
  if (winners == 1) {
    for (int i = 0; i < 3; ++i)
      if (counts[i] == best) chosen = static_cast<Polarity>(i);
  }
  int index = -1;
  for (size_t i = 0; i < per_answer.size(); ++i) {
    if (per_answer[i] == chosen) {
      index = static_cast<int>(i);
      break;
    }
  }
  return {chosen, index};
}

}  // namespace

Polarity classify_qa_answer(const QAPair& qa, const AnswerModel& model, AnswerPolicy policy) {
  if (policy == AnswerPolicy::First) return classify_answer(qa.answers.front(), model);
  return vote_answers(qa.answers, model).first;
}

std::vector<CompatibilityRecord> run_pipeline(const std::vector<QAPair>& corpus,
                                              const VerbLexicon& verbs,
                                              const std::vector<DepPattern>& patterns,
                                              const AnswerModel& model, AnswerPolicy policy,
                                              unsigned jobs) {
  std::vector<std::vector<CompatibilityRecord>> per_question(corpus.size());
  parallel_for(corpus.size(), jobs, [&](size_t i) {
    const QAPair& qa = corpus[i];
    QuestionExtraction ext = extract_from_question(qa, verbs, patterns);
    if (ext.mentions.empty()) return;  // stage 2 runs only on successful extraction
    Polarity pol;
    int answer_index = 0;
    if (policy == AnswerPolicy::First) {
      pol = classify_answer(qa.answers.front(), model);
    } else {
      std::tie(pol, answer_index) = vote_answers(qa.answers, model);
    }
    for (const ExtractedMention& m : ext.mentions) {
      CompatibilityRecord rec;
      rec.product_id = qa.product_id;
      rec.entity_surface = m.surface;
      rec.label = to_compat_label(pol);
      rec.evidence = {qa.qa_id, answer_index, pol, m.pattern_ids};
      per_question[i].push_back(std::move(rec));
    }
  });
  std::vector<CompatibilityRecord> out;
  for (auto& recs : per_question)
    for (auto& r : recs) out.push_back(std::move(r));
  return out;
}

std::string records_to_jsonl(const std::vector<CompatibilityRecord>& records) {
  std::string out;
  for (const CompatibilityRecord& r : records) {
    json j = {{"product_id", r.product_id},
              {"entity", r.entity_surface},
              {"label", compat_label_name(r.label)},
              {"evidence",
               {{"qa_id", r.evidence.qa_id},
                {"answer_index", r.evidence.answer_index},
                {"polarity", polarity_name(r.evidence.polarity)},
                {"patterns", r.evidence.pattern_ids}}}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<CompatibilityRecord> records_from_jsonl(const std::string& text) {
  std::vector<CompatibilityRecord> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw std::runtime_error("records line " + std::to_string(line_no) + ": invalid JSON");
    CompatibilityRecord r;
    r.product_id = j.at("product_id").get<std::string>();
    r.entity_surface = j.at("entity").get<std::string>();
    auto label = parse_compat_label(j.at("label").get<std::string>());
    if (!label)
      throw std::runtime_error("records line " + std::to_string(line_no) + ": bad label");
    r.label = *label;
    const json& e = j.at("evidence");
    r.evidence.qa_id = e.at("qa_id").get<std::string>();
    r.evidence.answer_index = e.at("answer_index").get<int>();
    auto pol = parse_polarity(e.at("polarity").get<std::string>());
    if (!pol)
      throw std::runtime_error("records line " + std::to_string(line_no) + ": bad polarity");
    r.evidence.polarity = *pol;
    r.evidence.pattern_ids = e.at("patterns").get<std::vector<std::string>>();
    if (to_compat_label(r.evidence.polarity) != r.label)
      throw std::runtime_error("records line " + std::to_string(line_no) +
                               ": label does not match polarity");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pcqa

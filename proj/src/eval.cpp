#include "pcqa/eval.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pcqa/chunk.hpp"

namespace pcqa {

using nlohmann::json;

std::string normalize_mention(std::string_view s) {
  return join(split_ws(to_lower(s)), " ");
}

namespace {

std::set<std::string> normalize_set(const std::set<std::string>& in) {
  std::set<std::string> out;
  for (const std::string& s : in) out.insert(normalize_mention(s));
  return out;
}

}  // namespace

PRF eval_cer(const MentionSets& predictions, const MentionSets& gold) {
  if (predictions.size() != gold.size())
    throw std::invalid_argument("eval_cer: prediction/gold qa_id universes differ in size");
  PRF prf;
  for (const auto& [qa_id, gold_raw] : gold) {
    auto it = predictions.find(qa_id);
    if (it == predictions.end())
      throw std::invalid_argument("eval_cer: no prediction for qa_id " + qa_id);
    std::set<std::string> pred = normalize_set(it->second);
    std::set<std::string> gld = normalize_set(gold_raw);
    if (pred == gld) prf.tp++;
    if (!pred.empty() && pred != gld) prf.fp++;
    if (!gld.empty() && pred != gld) prf.fn++;
  }
  return prf;
}

Rational eval_answers(const std::map<std::string, Polarity>& predictions,
                      const std::vector<QAPair>& corpus) {
  long long n = 0, correct = 0;
  for (const QAPair& qa : corpus) {
    if (!qa.gold || qa.gold->entities.empty()) continue;
    auto it = predictions.find(qa.qa_id);
    if (it == predictions.end())
      throw std::invalid_argument("eval_answers: no prediction for qa_id " + qa.qa_id);
    ++n;
    if (it->second == qa.gold->polarity) ++correct;
  }
  if (n == 0) throw std::invalid_argument("eval_answers: empty evaluation set");
  return Rational(correct, n);
}

Rational eval_overall(const std::vector<CompatibilityRecord>& records,
                      const std::vector<QAPair>& corpus) {
  struct Pred {
    std::set<std::string> entities;
    Polarity polarity = Polarity::Neutral;
  };
  std::map<std::string, Pred> by_qa;
  for (const CompatibilityRecord& r : records) {
    Pred& p = by_qa[r.evidence.qa_id];
    p.entities.insert(normalize_mention(r.entity_surface));
    p.polarity = to_polarity(r.label);
  }
  long long n = 0, correct = 0;
  for (const QAPair& qa : corpus) {
    if (!qa.gold || qa.gold->entities.empty()) continue;
    ++n;
    auto it = by_qa.find(qa.qa_id);
    if (it == by_qa.end()) continue;  // no extraction: cannot be correct
    std::set<std::string> gld;
    for (const std::string& e : qa.gold->entities) gld.insert(normalize_mention(e));
    if (it->second.entities == gld && it->second.polarity == qa.gold->polarity) ++correct;
  }
  if (n == 0) throw std::invalid_argument("eval_overall: no gold-bearing questions");
  return Rational(correct, n);
}

MentionSets baseline_np_chunker(const std::vector<QAPair>& corpus) {
  MentionSets out;
  for (const QAPair& qa : corpus) {
    std::set<std::string>& preds = out[qa.qa_id];
    for (const DependencyGraph& g : qa.question_sentences) {
      // Chunks from every nominal head; identical windows collapse, strictly
      // nested ones keep the widest.
      std::vector<EntityMention> chunks;
      for (const Token& t : g.tokens) {
        if (!is_nominal(t)) continue;
        EntityMention m = chunk_noun_phrase(g, t.index);
        bool dup = false;
        for (const EntityMention& k : chunks)
          if (k.span_begin == m.span_begin && k.span_end == m.span_end) dup = true;
        if (!dup) chunks.push_back(std::move(m));
      }
      for (const EntityMention& m : chunks) {
        bool nested = false;
        for (const EntityMention& k : chunks)
          if ((k.span_begin < m.span_begin && m.span_end <= k.span_end) ||
              (k.span_begin <= m.span_begin && m.span_end < k.span_end))
            nested = true;
        if (!nested) preds.insert(m.surface);
      }
    }
  }
  return out;
}

std::map<std::string, Polarity> baseline_yesno(const std::vector<QAPair>& corpus,
                                               AnswerPolicy policy) {
  std::map<std::string, Polarity> out;
  for (const QAPair& qa : corpus) {
    Polarity p = Polarity::Neutral;
    if (policy == AnswerPolicy::First) {
      p = detect_explicit_polarity(qa.answers.front()).value_or(Polarity::Neutral);
    } else {
      int counts[3] = {0, 0, 0};
      for (const std::string& a : qa.answers)
        counts[static_cast<int>(detect_explicit_polarity(a).value_or(Polarity::Neutral))]++;
      int best = std::max({counts[0], counts[1], counts[2]});
      int winners = (counts[0] == best) + (counts[1] == best) + (counts[2] == best);
      if (winners == 1)
        for (int i = 0; i < 3; ++i)
          if (counts[i] == best) p = static_cast<Polarity>(i);
    }
    out[qa.qa_id] = p;
  }
  return out;
}

std::string render_eval_tables(const EvalReport& report) {
  std::ostringstream os;
  char buf[256];
  os << "Entity extraction (question-level exact set match)\n";
  os << "Product         Method      P      R      F1     tp    fp    fn\n";
  for (const ProductEval& p : report.products) {
    std::snprintf(buf, sizeof(buf), "%-15s %-10s  %-6s %-6s %-6s %-5lld %-5lld %-5lld\n",
                  p.product.c_str(), "np-chunk", p.np_baseline.precision().fixed(3).c_str(),
                  p.np_baseline.recall().fixed(3).c_str(), p.np_baseline.f1().fixed(3).c_str(),
                  p.np_baseline.tp, p.np_baseline.fp, p.np_baseline.fn);
    os << buf;
    std::snprintf(buf, sizeof(buf), "%-15s %-10s  %-6s %-6s %-6s %-5lld %-5lld %-5lld\n",
                  p.product.c_str(), "pipeline", p.cer.precision().fixed(3).c_str(),
                  p.cer.recall().fixed(3).c_str(), p.cer.f1().fixed(3).c_str(), p.cer.tp, p.cer.fp,
                  p.cer.fn);
    os << buf;
  }
  os << "\nAnswer polarity and combined accuracy (gold-bearing questions)\n";
  os << "Product         Questions  Gold   Yes/No  Cascade  Overall\n";
  for (const ProductEval& p : report.products) {
    std::snprintf(buf, sizeof(buf), "%-15s %-10d %-6d %-7s %-8s %-7s\n", p.product.c_str(),
                  p.n_questions, p.n_gold_bearing, p.yesno_accuracy.fixed(3).c_str(),
                  p.answer_accuracy.fixed(3).c_str(), p.overall_accuracy.fixed(3).c_str());
    os << buf;
  }
  return os.str();
}

namespace {

json rational_json(const Rational& r) {
  return {{"num", r.num}, {"den", r.den}, {"value_3dp", r.fixed(3)}};
}

json prf_json(const PRF& p) {
  return {{"tp", p.tp},
          {"fp", p.fp},
          {"fn", p.fn},
          {"precision", rational_json(p.precision())},
          {"recall", rational_json(p.recall())},
          {"f1", rational_json(p.f1())}};
}

}  // namespace

std::string eval_report_to_json(const EvalReport& report) {
  json products = json::array();
  for (const ProductEval& p : report.products) {
    products.push_back({{"product", p.product},
                        {"n_questions", p.n_questions},
                        {"n_gold_bearing", p.n_gold_bearing},
                        {"cer", prf_json(p.cer)},
                        {"np_baseline", prf_json(p.np_baseline)},
                        {"answer_accuracy", rational_json(p.answer_accuracy)},
                        {"yesno_baseline_accuracy", rational_json(p.yesno_accuracy)},
                        {"overall_accuracy", rational_json(p.overall_accuracy)}});
  }
  json out = {{"products", products}};
  if (!report.config_json.empty()) out["config"] = json::parse(report.config_json);
  return out.dump(2) + "\n";
}

}  // namespace pcqa

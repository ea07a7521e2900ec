#include "pcqa/corpus.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace pcqa {

using nlohmann::json;

ParseIndex ParseIndex::from_conllu(const std::string& text, LoadStats* stats) {
  ParseIndex idx;
  for (KeyedSentence& ks : parse_conllu_keyed(text, stats)) {
    auto it = ks.comments.find("sent_id");
    if (it == ks.comments.end()) {
      std::string msg = "line " + std::to_string(ks.first_line) + ": sentence without sent_id";
      if (!stats) throw ParseError(ks.first_line, "sentence without sent_id");
      stats->n_skipped++;
      stats->errors.push_back(msg);
      continue;
    }
    idx.by_key[it->second] = std::move(ks.graph);
  }
  return idx;
}

const DependencyGraph* ParseIndex::find(const std::string& key) const {
  auto it = by_key.find(key);
  return it == by_key.end() ? nullptr : &it->second;
}

std::vector<QAPair> load_qa_corpus(std::istream& in, const ParseIndex* parses,
                                   const LoadOptions& opts, LoadStats* stats) {
  std::vector<QAPair> out;
  std::string line;
  int line_no = 0;

  auto fail = [&](int line, const std::string& msg) {
    if (opts.strict || !stats) throw CorpusError(line, msg);
    stats->n_skipped++;
    stats->errors.push_back("line " + std::to_string(line) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      fail(line_no, "invalid JSON object");
      continue;
    }
    QAPair qa;
    bool ok = true;
    for (const char* key : {"qa_id", "product_id", "category", "question", "n_question_sentences", "answers"}) {
      if (!j.contains(key)) {
        fail(line_no, std::string("missing required key '") + key + "'");
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    try {
      qa.qa_id = j.at("qa_id").get<std::string>();
      qa.product_id = j.at("product_id").get<std::string>();
      qa.category = j.at("category").get<std::string>();
      qa.question_text = j.at("question").get<std::string>();
      qa.n_question_sentences = j.at("n_question_sentences").get<int>();
      qa.answers = j.at("answers").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
      fail(line_no, std::string("bad field type: ") + e.what());
      continue;
    }
    if (qa.n_question_sentences < 1) {
      fail(line_no, "n_question_sentences must be >= 1 (qa_id " + qa.qa_id + ")");
      continue;
    }
    if (qa.answers.empty()) {
      fail(line_no, "no answers (qa_id " + qa.qa_id + ")");
      continue;
    }
    if (j.contains("gold") && !j.at("gold").is_null()) {
      const json& g = j.at("gold");
      Gold gold;
      if (!g.contains("entities") || !g.contains("polarity")) {
        fail(line_no, "gold must have entities and polarity (qa_id " + qa.qa_id + ")");
        continue;
      }
      try {
        gold.entities = g.at("entities").get<std::vector<std::string>>();
      } catch (const json::exception& e) {
        fail(line_no, std::string("bad gold entities: ") + e.what());
        continue;
      }
      auto pol = parse_polarity(g.at("polarity").get<std::string>());
      if (!pol) {
        fail(line_no, "bad gold polarity '" + g.at("polarity").get<std::string>() + "'");
        continue;
      }
      gold.polarity = *pol;
      qa.gold = std::move(gold);
    }
    if (opts.resolve_parses) {
      if (!parses) throw CorpusError(line_no, "parse resolution requested but no parse index given");
      bool resolved = true;
      for (int ord = 1; ord <= qa.n_question_sentences; ++ord) {
        std::string key = qa.qa_id + ":" + std::to_string(ord);
        const DependencyGraph* g = parses->find(key);
        if (!g) {
          fail(line_no, "unresolvable parse key '" + key + "'");
          resolved = false;
          break;
        }
        qa.question_sentences.push_back(*g);
      }
      if (!resolved) continue;
    }
    out.push_back(std::move(qa));
    if (stats) stats->n_loaded++;
  }
  return out;
}

std::vector<ReviewSentence> load_review_corpus(std::istream& in, const LoadOptions& opts,
                                               LoadStats* stats) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  LoadStats local;
  LoadStats* effective = opts.strict ? nullptr : (stats ? stats : &local);
  std::vector<ReviewSentence> out;
  for (KeyedSentence& ks : parse_conllu_keyed(text, effective)) {
    ReviewSentence rs;
    auto id = ks.comments.find("review_id");
    if (id != ks.comments.end()) {
      // "<id>:<ordinal>" -> id
      std::string v = id->second;
      size_t colon = v.rfind(':');
      rs.review_id = colon == std::string::npos ? v : v.substr(0, colon);
    }
    auto cat = ks.comments.find("category");
    if (cat != ks.comments.end()) rs.product_category = cat->second;
    rs.graph = std::move(ks.graph);
    out.push_back(std::move(rs));
  }
  return out;
}

DatasetStats corpus_stats(const std::vector<QAPair>& corpus) {
  DatasetStats s;
  std::set<std::string> unique;
  for (const QAPair& qa : corpus) {
    if (!qa.gold) throw CorpusError(0, "missing gold annotation on qa_id " + qa.qa_id);
    s.n_questions++;
    s.n_question_sentences += qa.n_question_sentences;
    int mentions = static_cast<int>(qa.gold->entities.size());
    s.n_cp_mentions += mentions;
    for (const std::string& e : qa.gold->entities) unique.insert(to_lower(e));
    switch (qa.gold->polarity) {
      case Polarity::Yes: s.n_pos += mentions; break;
      case Polarity::No: s.n_neg += mentions; break;
      case Polarity::Neutral: s.n_neu += mentions; break;
    }
  }
  s.n_unique_cp = static_cast<int>(unique.size());
  return s;
}

std::string render_stats_table(const std::vector<std::pair<std::string, DatasetStats>>& rows) {
  std::ostringstream os;
  os << "Product         Q     QSent.  CP    Density  Uniq.CP  Pos.  Neg.  Neu.\n";
  char buf[160];
  for (const auto& [name, s] : rows) {
    std::snprintf(buf, sizeof(buf), "%-15s %-5d %-7d %-5d %-8s %-8d %-5d %-5d %-5d\n", name.c_str(),
                  s.n_questions, s.n_question_sentences, s.n_cp_mentions, s.density().fixed(2).c_str(),
                  s.n_unique_cp, s.n_pos, s.n_neg, s.n_neu);
    os << buf;
  }
  return os.str();
}

std::string stats_to_json(const std::vector<std::pair<std::string, DatasetStats>>& rows) {
  json out = json::array();
  for (const auto& [name, s] : rows) {
    Rational d = s.density();
    out.push_back({{"product", name},
                   {"n_questions", s.n_questions},
                   {"n_question_sentences", s.n_question_sentences},
                   {"n_cp_mentions", s.n_cp_mentions},
                   {"density", {{"num", d.num}, {"den", d.den}}},
                   {"density_2dp", d.fixed(2)},
                   {"n_unique_cp", s.n_unique_cp},
                   {"n_pos", s.n_pos},
                   {"n_neg", s.n_neg},
                   {"n_neu", s.n_neu}});
  }
  return out.dump(2) + "\n";
}

}  // namespace pcqa

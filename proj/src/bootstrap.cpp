#include "pcqa/bootstrap.hpp"

#include <algorithm>
#include <stdexcept>

#include "pcqa/chunk.hpp"
#include "pcqa/util.hpp"

namespace pcqa {

namespace {

bool has_target_pronoun_arg(const DependencyGraph& g, int verb_index) {
  for (int d : g.dependents(verb_index)) {
    const Token& t = g.token(d);
    if (t.deprel != "nsubj" && t.deprel != "dobj") continue;
    std::string l = to_lower(t.lemma);
    if (l == "it" || l == "this") return true;
  }
  return false;
}

// Anchor verbs are being discovered in phase (b), so the lemma constraint is
// dropped while POS (and everything else) stays.
std::vector<DepPattern> freed_verb_patterns(const std::vector<DepPattern>& patterns) {
  std::vector<DepPattern> out;
  for (const DepPattern& p : patterns) {
    if (p.tier != Tier::Extraction) continue;
    if (std::find(p.anchor.pos.begin(), p.anchor.pos.end(), "VERB") == p.anchor.pos.end()) continue;
    DepPattern freed = p;
    freed.anchor.lemma = LemmaConstraint{};
    out.push_back(std::move(freed));
  }
  return out;
}

// Case-folded entity surfaces matched by hp patterns in one sentence.
std::set<std::string> sentence_entity_evidence(const DependencyGraph& g,
                                               const std::vector<DepPattern>& hp,
                                               const LexiconBindings& lex) {
  std::set<std::string> out;
  for (const DepPattern& p : hp) {
    for (const PatternMatch& m : match_pattern(p, g, lex)) {
      const Token& cap = g.token(m.captured_index);
      if (!is_nominal(cap)) continue;
      out.insert(to_lower(chunk_noun_phrase(g, m.captured_index).surface));
    }
  }
  return out;
}

// Lemmas of candidate verbs evidenced by one sentence, subject to the
// pronoun-or-known-entity guard.
std::set<std::string> sentence_verb_evidence(const DependencyGraph& g,
                                             const std::vector<DepPattern>& freed,
                                             const LexiconBindings& lex,
                                             const std::set<std::string>& known_verbs,
                                             const std::set<std::string>& stopwords,
                                             const EntityLexicon& entities) {
  std::set<std::string> out;
  for (const DepPattern& p : freed) {
    for (const PatternMatch& m : match_pattern(p, g, lex)) {
      std::string lemma = to_lower(g.token(m.anchor_index).lemma);
      if (known_verbs.count(lemma) || stopwords.count(lemma)) continue;
      const Token& cap = g.token(m.captured_index);
      if (!is_nominal(cap)) continue;
      bool guard = has_target_pronoun_arg(g, m.anchor_index);
      if (!guard) {
        std::string surface = to_lower(chunk_noun_phrase(g, m.captured_index).surface);
        guard = entities.contains(surface);
      }
      if (guard) out.insert(lemma);
    }
  }
  return out;
}

}  // namespace

BootstrapResult bootstrap(const std::vector<ReviewSentence>& reviews,
                          const std::set<std::string>& seeds,
                          const std::vector<DepPattern>& patterns, const BootstrapParams& params,
                          unsigned jobs) {
  if (seeds.empty()) throw std::invalid_argument("bootstrap needs at least one seed verb");
  std::vector<DepPattern> hp;
  for (const DepPattern& p : patterns)
    if (p.tier == Tier::HighPrecision) hp.push_back(p);
  if (hp.empty()) throw std::invalid_argument("bootstrap needs at least one high-precision pattern");
  std::vector<DepPattern> freed = freed_verb_patterns(patterns);

  BootstrapResult res;
  std::set<std::string> seed_folded;
  for (const std::string& s : seeds) seed_folded.insert(to_lower(s));
  for (const std::string& s : seed_folded) res.verbs.entries[s] = {0, LexOrigin::Seed, 0};

  const size_t n = reviews.size();
  for (int iter = 1; iter <= params.max_iterations; ++iter) {
    res.iterations_run = iter;
    bool grew = false;

    LexiconBindings lex;
    lex["VERBS"] = res.verbs.lemmas();
    lex["SEEDS"] = seed_folded;
    lex["ENTITIES"] = res.entities.surfaces();

    // (a) entity expansion: count distinct sentences per candidate surface.
    std::vector<std::set<std::string>> per_sentence(n);
    parallel_for(n, jobs, [&](size_t i) {
      per_sentence[i] = sentence_entity_evidence(reviews[i].graph, hp, lex);
    });
    std::map<std::string, int> entity_support;
    for (const auto& ev : per_sentence)
      for (const std::string& s : ev) entity_support[s]++;
    for (const auto& [surface, support] : entity_support) {
      if (support < params.min_entity_support) continue;
      auto it = res.entities.entries.find(surface);
      if (it == res.entities.entries.end()) {
        res.entities.entries[surface] = {support, LexOrigin::Learned, iter};
        grew = true;
      } else if (support > it->second.support) {
        it->second.support = support;
      }
    }

    // (b) verb expansion against the grown entity lexicon.
    lex["ENTITIES"] = res.entities.surfaces();
    std::set<std::string> known = res.verbs.lemmas();
    parallel_for(n, jobs, [&](size_t i) {
      per_sentence[i] = sentence_verb_evidence(reviews[i].graph, freed, lex, known,
                                               params.stopword_verbs, res.entities);
    });
    std::map<std::string, int> verb_support;
    for (const auto& ev : per_sentence)
      for (const std::string& s : ev) verb_support[s]++;
    for (const auto& [lemma, support] : verb_support) {
      if (support < params.min_verb_support) continue;
      res.verbs.entries[lemma] = {support, LexOrigin::Learned, iter};
      grew = true;
    }

    if (!grew) break;
  }
  return res;
}

QuestionExtraction extract_from_question(const QAPair& qa, const VerbLexicon& verbs,
                                         const std::vector<DepPattern>& patterns) {
  LexiconBindings lex;
  lex["VERBS"] = verbs.lemmas();
  lex["SEEDS"] = verbs.seed_lemmas();

  QuestionExtraction out;
  out.qa_id = qa.qa_id;
  std::set<std::string> seen;  // case-folded

  for (const DependencyGraph& g : qa.question_sentences) {
    // All chunked captures in this sentence, grouped by span.
    struct Cand {
      int begin, end;
      std::string surface;
      std::vector<std::string> pattern_ids;
    };
    std::vector<Cand> cands;
    for (const DepPattern& p : patterns) {
      if (p.tier != Tier::Extraction) continue;
      for (const PatternMatch& m : match_pattern(p, g, lex)) {
        const Token& cap = g.token(m.captured_index);
        if (!is_nominal(cap)) continue;
        EntityMention em = chunk_noun_phrase(g, m.captured_index);
        auto same = std::find_if(cands.begin(), cands.end(), [&](const Cand& c) {
          return c.begin == em.span_begin && c.end == em.span_end;
        });
        if (same == cands.end()) {
          cands.push_back({em.span_begin, em.span_end, em.surface, {p.id}});
        } else if (std::find(same->pattern_ids.begin(), same->pattern_ids.end(), p.id) ==
                   same->pattern_ids.end()) {
          same->pattern_ids.push_back(p.id);
        }
      }
    }
    // Overlap resolution: longer span wins, equal length goes leftmost.
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      int la = a.end - a.begin, lb = b.end - b.begin;
      if (la != lb) return la > lb;
      return a.begin < b.begin;
    });
    std::vector<const Cand*> kept;
    for (const Cand& c : cands) {
      bool overlaps = std::any_of(kept.begin(), kept.end(), [&](const Cand* k) {
        return c.begin <= k->end && k->begin <= c.end;
      });
      if (!overlaps) kept.push_back(&c);
    }
    // Merge into the question-level prediction in sentence position order.
    std::sort(kept.begin(), kept.end(),
              [](const Cand* a, const Cand* b) { return a->begin < b->begin; });
    for (const Cand* c : kept) {
      std::string key = to_lower(c->surface);
      if (seen.insert(key).second) {
        out.mentions.push_back({c->surface, c->pattern_ids});
      } else {
        for (ExtractedMention& m : out.mentions) {
          if (to_lower(m.surface) != key) continue;
          for (const std::string& pid : c->pattern_ids)
            if (std::find(m.pattern_ids.begin(), m.pattern_ids.end(), pid) == m.pattern_ids.end())
              m.pattern_ids.push_back(pid);
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace pcqa

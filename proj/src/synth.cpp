#include "pcqa/synth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "pcqa/conllu.hpp"
#include "pcqa/util.hpp"

namespace pcqa {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Parse building
// ---------------------------------------------------------------------------

struct SentenceBuilder {
  std::vector<Token> toks;

  // head: 1-based index of the governor, 0 for root; returns this token's index.
  int add(std::string form, std::string lemma, std::string upos, std::string xpos, int head,
          std::string deprel) {
    Token t;
    int index = static_cast<int>(toks.size()) + 1;
    t.index = index;
    t.form = std::move(form);
    t.lemma = std::move(lemma);
    t.upos = std::move(upos);
    t.xpos = std::move(xpos);
    t.head = head;
    t.deprel = std::move(deprel);
    toks.push_back(std::move(t));
    return index;
  }

  // Multiword product name: the first token heads the phrase (flat/nummod
  // attach to it) and carries `deprel` to `governor`.
  int add_name(const std::vector<std::string>& words, int governor, const std::string& deprel) {
    int first = 0;
    for (const std::string& w : words) {
      bool numeric = !w.empty() && (std::isdigit(static_cast<unsigned char>(w[0])) != 0);
      if (first == 0) {
        first = add(w, to_lower(w), numeric ? "NUM" : "PROPN", numeric ? "CD" : "NNP", governor,
                    deprel);
      } else {
        add(w, to_lower(w), numeric ? "NUM" : "PROPN", numeric ? "CD" : "NNP", first,
            numeric ? "nummod" : "flat");
      }
    }
    return first;
  }

  DependencyGraph graph() const {
    DependencyGraph g;
    g.tokens = toks;
    std::vector<std::string> forms;
    for (const Token& t : toks) forms.push_back(t.form);
    g.sentence_text = join(forms, " ");
    return g;
  }
};

std::string third_person(const std::string& verb) {
  if (verb.size() >= 2) {
    std::string tail = verb.substr(verb.size() - 2);
    if (tail == "ch" || tail == "sh") return verb + "es";
  }
  char last = verb.back();
  if (last == 's' || last == 'x' || last == 'z' || last == 'o') return verb + "es";
  return verb + "s";
}

// ---------------------------------------------------------------------------
// Vocabulary
// ---------------------------------------------------------------------------

const std::vector<std::string> kBrands = {"Vion",   "Nexa",   "Korvo", "Zintel", "Orbis",
                                          "Dalton", "Prisma", "Quanta", "Helix", "Mirex"};
const std::vector<std::string> kModels = {"Pro", "Max", "Air", "Ultra", "Mini", "Neo", "Prime", "Flex"};
const std::vector<std::string> kNumbers = {"2", "3", "4", "5", "7", "9", "10", "11"};
const std::vector<std::string> kReviewEntities = {"tablet",  "phone",   "laptop", "keyboard",
                                                  "monitor", "camera",  "printer", "router",
                                                  "speaker", "headset"};
const std::vector<std::string> kVerbPool = {"hold",  "insert", "attach", "connect", "support",
                                            "mount", "pair",   "sync",   "charge",  "dock"};
const std::vector<std::string> kDecoyPool = {"grip", "balance", "wrap", "fold", "stack", "tilt"};

enum class AnswerClass { ExplicitYes, ExplicitNo, ImplicitYes, ImplicitNo, Neutral };

const std::vector<std::string> kExplicitYes = {
    "Yes , it works great .", "Yes it fits perfectly .", "Yes , works fine on mine .",
    "Yes , it fits well ."};
const std::vector<std::string> kExplicitNo = {
    "No , it does not work .", "No it will not fit .", "No , sadly it did not work .",
    "No , not compatible with that ."};
const std::vector<std::string> kImplicitYes = {
    "It works great .", "Fits perfectly .", "It works fine on mine .", "Works well for me .",
    "It runs smoothly ."};
const std::vector<std::string> kImplicitNo = {
    "It does not work at all .", "Sadly it will not fit .", "Unfortunately it did not work .",
    "It is not compatible with that model ."};
const std::vector<std::string> kNeutral = {
    "I am not sure , sorry .", "Not sure , I never tried that .", "It depends on your setup .",
    "You should ask the seller .", "Hard to say without trying ."};
const std::vector<std::string> kDistractorAnswers = {
    "Please check the description .", "See the product page for details .",
    "The seller can confirm that ."};

// ---------------------------------------------------------------------------
// Question templates
// ---------------------------------------------------------------------------

struct QuestionParts {
  std::string text;
  DependencyGraph graph;
};

// "will it <verb> with the <ENT> ?" and friends; rel picks the attachment of
// the entity: nmod:with/on/for, or dobj.
QuestionParts entity_question(Rng& rng, const std::string& verb,
                              const std::vector<std::string>& name) {
  SentenceBuilder b;
  int kind = static_cast<int>(rng.below(6));
  bool the = rng.below(2) == 0;
  auto name_with_det = [&](int governor, const std::string& rel) {
    if (the) b.add("the", "the", "DET", "DT", static_cast<int>(b.toks.size()) + 2, "det");
    // det's head is the first name token, added right after it
    int first = b.add_name(name, governor, rel);
    if (the) b.toks[static_cast<size_t>(first - 2)].head = first;
    return first;
  };
  switch (kind) {
    case 0: {  // will it VERB with the ENT ?
      b.add("will", "will", "AUX", "MD", 3, "aux");
      b.add("it", "it", "PRON", "PRP", 3, "nsubj");
      int v = b.add(verb, verb, "VERB", "VB", 0, "root");
      b.add("with", "with", "ADP", "IN", static_cast<int>(b.toks.size()) + 2 + (the ? 1 : 0), "case");
      name_with_det(v, "nmod:with");
      b.add("?", "?", "PUNCT", ".", v, "punct");
      break;
    }
    case 1: {  // does it VERB with ENT ?
      b.add("does", "do", "AUX", "VBZ", 3, "aux");
      b.add("it", "it", "PRON", "PRP", 3, "nsubj");
      int v = b.add(verb, verb, "VERB", "VB", 0, "root");
      b.add("with", "with", "ADP", "IN", static_cast<int>(b.toks.size()) + 2 + (the ? 1 : 0), "case");
      name_with_det(v, "nmod:with");
      b.add("?", "?", "PUNCT", ".", v, "punct");
      break;
    }
    case 2: {  // is this compatible with the ENT ?
      b.add("is", "be", "AUX", "VBZ", 3, "cop");
      b.add("this", "this", "PRON", "DT", 3, "nsubj");
      int a = b.add("compatible", "compatible", "ADJ", "JJ", 0, "root");
      b.add("with", "with", "ADP", "IN", static_cast<int>(b.toks.size()) + 2 + (the ? 1 : 0), "case");
      name_with_det(a, "nmod:with");
      b.add("?", "?", "PUNCT", ".", a, "punct");
      break;
    }
    case 3: {  // will this VERB on the ENT ?
      b.add("will", "will", "AUX", "MD", 3, "aux");
      b.add("this", "this", "PRON", "DT", 3, "nsubj");
      int v = b.add(verb, verb, "VERB", "VB", 0, "root");
      b.add("on", "on", "ADP", "IN", static_cast<int>(b.toks.size()) + 2 + (the ? 1 : 0), "case");
      name_with_det(v, "nmod:on");
      b.add("?", "?", "PUNCT", ".", v, "punct");
      break;
    }
    case 4: {  // does it VERB for the ENT ?
      b.add("does", "do", "AUX", "VBZ", 3, "aux");
      b.add("it", "it", "PRON", "PRP", 3, "nsubj");
      int v = b.add(verb, verb, "VERB", "VB", 0, "root");
      b.add("for", "for", "ADP", "IN", static_cast<int>(b.toks.size()) + 2 + (the ? 1 : 0), "case");
      name_with_det(v, "nmod:for");
      b.add("?", "?", "PUNCT", ".", v, "punct");
      break;
    }
    default: {  // can it VERB the ENT ?
      b.add("can", "can", "AUX", "MD", 3, "aux");
      b.add("it", "it", "PRON", "PRP", 3, "nsubj");
      int v = b.add(verb, verb, "VERB", "VB", 0, "root");
      name_with_det(v, "dobj");
      b.add("?", "?", "PUNCT", ".", v, "punct");
      break;
    }
  }
  QuestionParts out;
  out.graph = b.graph();
  out.text = out.graph.sentence_text;
  return out;
}

QuestionParts lead_in_sentence() {
  SentenceBuilder b;
  b.add("i", "i", "PRON", "PRP", 2, "nsubj");
  b.add("have", "have", "VERB", "VBP", 0, "root");
  b.add("a", "a", "DET", "DT", 5, "det");
  b.add("quick", "quick", "ADJ", "JJ", 5, "amod");
  b.add("question", "question", "NOUN", "NN", 2, "dobj");
  b.add(".", ".", "PUNCT", ".", 2, "punct");
  QuestionParts out;
  out.graph = b.graph();
  out.text = out.graph.sentence_text;
  return out;
}

QuestionParts distractor_question(Rng& rng) {
  SentenceBuilder b;
  switch (rng.below(4)) {
    case 0: {  // is this any good ?
      b.add("is", "be", "AUX", "VBZ", 4, "cop");
      b.add("this", "this", "PRON", "DT", 4, "nsubj");
      b.add("any", "any", "ADV", "RB", 4, "advmod");
      b.add("good", "good", "ADJ", "JJ", 0, "root");
      b.add("?", "?", "PUNCT", ".", 4, "punct");
      break;
    }
    case 1: {  // what color is it ?
      b.add("what", "what", "DET", "WDT", 2, "det");
      b.add("color", "color", "NOUN", "NN", 0, "root");
      b.add("is", "be", "AUX", "VBZ", 2, "cop");
      b.add("it", "it", "PRON", "PRP", 2, "nsubj");
      b.add("?", "?", "PUNCT", ".", 2, "punct");
      break;
    }
    case 2: {  // how long does the battery last ?
      b.add("how", "how", "ADV", "WRB", 2, "advmod");
      b.add("long", "long", "ADV", "RB", 6, "advmod");
      b.add("does", "do", "AUX", "VBZ", 6, "aux");
      b.add("the", "the", "DET", "DT", 5, "det");
      b.add("battery", "battery", "NOUN", "NN", 6, "nsubj");
      b.add("last", "last", "VERB", "VB", 0, "root");
      b.add("?", "?", "PUNCT", ".", 6, "punct");
      break;
    }
    default: {  // does it come with a manual ?
      b.add("does", "do", "AUX", "VBZ", 3, "aux");
      b.add("it", "it", "PRON", "PRP", 3, "nsubj");
      b.add("come", "come", "VERB", "VB", 0, "root");
      b.add("with", "with", "ADP", "IN", 6, "case");
      b.add("a", "a", "DET", "DT", 6, "det");
      b.add("manual", "manual", "NOUN", "NN", 3, "nmod:with");
      b.add("?", "?", "PUNCT", ".", 3, "punct");
      break;
    }
  }
  QuestionParts out;
  out.graph = b.graph();
  out.text = out.graph.sentence_text;
  return out;
}

// ---------------------------------------------------------------------------
// Review templates
// ---------------------------------------------------------------------------

// "It <verb>s with my <entity> ." — matches the pronoun-subject hp pattern.
DependencyGraph review_verb_with(const std::string& verb, const std::string& entity, bool use_this) {
  SentenceBuilder b;
  b.add(use_this ? "This" : "It", use_this ? "this" : "it", "PRON", use_this ? "DT" : "PRP", 2,
        "nsubj");
  b.add(third_person(verb), verb, "VERB", "VBZ", 0, "root");
  b.add("with", "with", "ADP", "IN", 5, "case");
  b.add("my", "my", "PRON", "PRP$", 5, "nmod:poss");
  b.add(entity, entity, "NOUN", "NN", 2, "nmod:with");
  b.add(".", ".", "PUNCT", ".", 2, "punct");
  return b.graph();
}

// "It <verb>s my <entity> ." — direct object variant.
DependencyGraph review_verb_dobj(const std::string& verb, const std::string& entity, bool use_this) {
  SentenceBuilder b;
  b.add(use_this ? "This" : "It", use_this ? "this" : "it", "PRON", use_this ? "DT" : "PRP", 2,
        "nsubj");
  b.add(third_person(verb), verb, "VERB", "VBZ", 0, "root");
  b.add("my", "my", "PRON", "PRP$", 4, "nmod:poss");
  b.add(entity, entity, "NOUN", "NN", 2, "dobj");
  b.add(".", ".", "PUNCT", ".", 2, "punct");
  return b.graph();
}

// "It is compatible with my <entity> ."
DependencyGraph review_compatible(const std::string& entity) {
  SentenceBuilder b;
  b.add("It", "it", "PRON", "PRP", 3, "nsubj");
  b.add("is", "be", "AUX", "VBZ", 3, "cop");
  b.add("compatible", "compatible", "ADJ", "JJ", 0, "root");
  b.add("with", "with", "ADP", "IN", 6, "case");
  b.add("my", "my", "PRON", "PRP$", 6, "nmod:poss");
  b.add(entity, entity, "NOUN", "NN", 3, "nmod:with");
  b.add(".", ".", "PUNCT", ".", 3, "punct");
  return b.graph();
}

DependencyGraph noise_review(Rng& rng) {
  SentenceBuilder b;
  switch (rng.below(4)) {
    case 0: {  // Great product overall .
      b.add("Great", "great", "ADJ", "JJ", 2, "amod");
      b.add("product", "product", "NOUN", "NN", 0, "root");
      b.add("overall", "overall", "ADV", "RB", 2, "advmod");
      b.add(".", ".", "PUNCT", ".", 2, "punct");
      break;
    }
    case 1: {  // I love it .
      b.add("I", "i", "PRON", "PRP", 2, "nsubj");
      b.add("love", "love", "VERB", "VBP", 0, "root");
      b.add("it", "it", "PRON", "PRP", 2, "dobj");
      b.add(".", ".", "PUNCT", ".", 2, "punct");
      break;
    }
    case 2: {  // The price is great .
      b.add("The", "the", "DET", "DT", 2, "det");
      b.add("price", "price", "NOUN", "NN", 4, "nsubj");
      b.add("is", "be", "AUX", "VBZ", 4, "cop");
      b.add("great", "great", "ADJ", "JJ", 0, "root");
      b.add(".", ".", "PUNCT", ".", 4, "punct");
      break;
    }
    default: {  // Arrived quickly and looks nice .
      b.add("Arrived", "arrive", "VERB", "VBD", 0, "root");
      b.add("quickly", "quickly", "ADV", "RB", 1, "advmod");
      b.add("and", "and", "CCONJ", "CC", 4, "cc");
      b.add("looks", "look", "VERB", "VBZ", 1, "conj");
      b.add("nice", "nice", "ADJ", "JJ", 4, "xcomp");
      b.add(".", ".", "PUNCT", ".", 1, "punct");
      break;
    }
  }
  return b.graph();
}

std::string conllu_block(const std::string& id_comment, const std::string& id_value,
                         const DependencyGraph& g) {
  std::string out = "# " + id_comment + " = " + id_value + "\n";
  std::string body = serialize_conllu({g});
  return out + body;
}

}  // namespace

SynthOutput generate_synthetic_corpus(const SynthSpec& spec) {
  if (spec.n_questions < 1) throw std::invalid_argument("synth: n_questions must be >= 1");
  if (spec.fraction_explicit < 0.0 || spec.fraction_explicit > 1.0 || spec.fraction_neutral < 0.0 ||
      spec.fraction_neutral > 1.0 || spec.fraction_explicit + spec.fraction_neutral > 1.0)
    throw std::invalid_argument(
        "synth: fractions must be in [0,1] and fraction_explicit + fraction_neutral <= 1");
  const SynthTemplates& tpl = spec.templates;
  if (tpl.entity_question_fraction < 0.0 || tpl.entity_question_fraction > 1.0 ||
      tpl.yes_ratio < 0.0 || tpl.yes_ratio > 1.0)
    throw std::invalid_argument("synth: template fractions must be in [0,1]");

  const SynthVocab& vocab = spec.vocab;
  const int n_review_entities = std::min<int>(vocab.n_review_entities, static_cast<int>(kReviewEntities.size()));
  const int n_verbs = std::min<int>(vocab.n_verbs, static_cast<int>(kVerbPool.size()));
  const int n_decoys = std::min<int>(vocab.n_decoy_verbs, static_cast<int>(kDecoyPool.size()));

  SynthOutput out;
  Rng rng(derive_seed(spec.seed, "synth"));

  // Distinct specific product names for questions.
  std::vector<std::vector<std::string>> names;
  {
    std::set<std::string> seen;
    Rng name_rng(derive_seed(spec.seed, "synth.names"));
    int want = std::max(1, vocab.n_question_entities);
    int guard = 0;
    while (static_cast<int>(names.size()) < want && ++guard < 10000) {
      std::vector<std::string> name;
      name.push_back(name_rng.pick(kBrands));
      uint64_t shape = name_rng.below(4);
      if (shape <= 1) {
        name.push_back(name_rng.pick(kModels));
        if (shape == 0) name.push_back(name_rng.pick(kNumbers));
      } else if (shape == 2) {
        name.push_back(name_rng.pick(kNumbers));
      }
      std::string key = to_lower(join(name, " "));
      if (seen.insert(key).second) names.push_back(std::move(name));
    }
  }

  const std::vector<std::string> seeds = {"work", "fit"};

  // ---- Reviews: planted supports are exact sentence counts. -------------
  std::vector<DependencyGraph> review_sentences;
  std::map<std::string, int> planted_entities, planted_verbs, decoy_verbs;
  Rng review_rng(derive_seed(spec.seed, "synth.reviews"));

  for (int i = 0; i < n_review_entities; ++i) {
    const std::string& entity = kReviewEntities[static_cast<size_t>(i)];
    planted_entities[entity] = vocab.entity_support;
    for (int k = 0; k < vocab.entity_support; ++k) {
      if (review_rng.below(3) == 0) {
        review_sentences.push_back(review_compatible(entity));
      } else {
        review_sentences.push_back(
            review_verb_with(review_rng.pick(seeds), entity, review_rng.below(2) == 0));
      }
    }
  }
  for (int i = 0; i < n_verbs; ++i) {
    const std::string& verb = kVerbPool[static_cast<size_t>(i)];
    planted_verbs[verb] = vocab.verb_support;
    for (int k = 0; k < vocab.verb_support; ++k) {
      const std::string& entity = kReviewEntities[review_rng.below(static_cast<uint64_t>(
          std::max(1, n_review_entities)))];
      if (review_rng.below(2) == 0)
        review_sentences.push_back(review_verb_with(verb, entity, review_rng.below(2) == 0));
      else
        review_sentences.push_back(review_verb_dobj(verb, entity, review_rng.below(2) == 0));
    }
  }
  for (int i = 0; i < n_decoys; ++i) {
    const std::string& verb = kDecoyPool[static_cast<size_t>(i)];
    decoy_verbs[verb] = vocab.decoy_support;
    for (int k = 0; k < vocab.decoy_support; ++k) {
      const std::string& entity = kReviewEntities[review_rng.below(static_cast<uint64_t>(
          std::max(1, n_review_entities)))];
      if (review_rng.below(2) == 0)
        review_sentences.push_back(review_verb_with(verb, entity, review_rng.below(2) == 0));
      else
        review_sentences.push_back(review_verb_dobj(verb, entity, review_rng.below(2) == 0));
    }
  }
  for (int i = 0; i < vocab.n_noise_reviews; ++i) review_sentences.push_back(noise_review(review_rng));
  review_rng.shuffle(review_sentences);

  // Group into 1-3 sentence reviews.
  {
    size_t i = 0;
    int review_no = 0;
    while (i < review_sentences.size()) {
      ++review_no;
      size_t take = 1 + review_rng.below(3);
      take = std::min(take, review_sentences.size() - i);
      char rid[32];
      std::snprintf(rid, sizeof(rid), "r%04d", review_no);
      for (size_t k = 0; k < take; ++k) {
        out.review_conllu += conllu_block(
            "review_id", std::string(rid) + ":" + std::to_string(k + 1), review_sentences[i + k]);
      }
      i += take;
    }
  }

  // ---- Questions. --------------------------------------------------------
  const int n_entity_q = static_cast<int>(llround(tpl.entity_question_fraction * spec.n_questions));
  const int n_explicit = static_cast<int>(spec.fraction_explicit * n_entity_q);
  const int n_neutral = static_cast<int>(spec.fraction_neutral * n_entity_q);
  const int n_implicit = n_entity_q - n_explicit - n_neutral;

  std::vector<AnswerClass> classes;
  classes.reserve(static_cast<size_t>(n_entity_q));
  int n_exp_yes = static_cast<int>(llround(tpl.yes_ratio * n_explicit));
  int n_imp_yes = static_cast<int>(llround(tpl.yes_ratio * n_implicit));
  for (int i = 0; i < n_exp_yes; ++i) classes.push_back(AnswerClass::ExplicitYes);
  for (int i = 0; i < n_explicit - n_exp_yes; ++i) classes.push_back(AnswerClass::ExplicitNo);
  for (int i = 0; i < n_imp_yes; ++i) classes.push_back(AnswerClass::ImplicitYes);
  for (int i = 0; i < n_implicit - n_imp_yes; ++i) classes.push_back(AnswerClass::ImplicitNo);
  for (int i = 0; i < n_neutral; ++i) classes.push_back(AnswerClass::Neutral);
  Rng class_rng(derive_seed(spec.seed, "synth.classes"));
  class_rng.shuffle(classes);

  // Entity-question slots among all questions.
  std::vector<char> is_entity(static_cast<size_t>(spec.n_questions), 0);
  for (int i = 0; i < n_entity_q; ++i) is_entity[static_cast<size_t>(i)] = 1;
  class_rng.shuffle(is_entity);

  std::vector<std::string> askable_verbs = seeds;
  for (int i = 0; i < n_verbs; ++i) askable_verbs.push_back(kVerbPool[static_cast<size_t>(i)]);

  Rng q_rng(derive_seed(spec.seed, "synth.questions"));
  int class_cursor = 0;
  std::map<std::string, int> class_counts;
  for (int qi = 0; qi < spec.n_questions; ++qi) {
    char qid[32];
    std::snprintf(qid, sizeof(qid), "q%05d", qi + 1);
    json j;
    j["qa_id"] = qid;
    j["product_id"] = "p001";
    j["category"] = "gadget";

    std::vector<QuestionParts> sentences;
    json gold;
    std::string answer;
    if (is_entity[static_cast<size_t>(qi)]) {
      AnswerClass cls = classes[static_cast<size_t>(class_cursor++)];
      // seeds stay frequent; learned verbs appear in a minority of questions
      const std::string& verb = q_rng.below(10) < 6
                                    ? seeds[q_rng.below(seeds.size())]
                                    : askable_verbs[q_rng.below(askable_verbs.size())];
      const std::vector<std::string>& name = names[q_rng.below(names.size())];
      if (q_rng.unit() < tpl.two_sentence_fraction) sentences.push_back(lead_in_sentence());
      sentences.push_back(entity_question(q_rng, verb, name));
      gold["entities"] = json::array({join(name, " ")});
      switch (cls) {
        case AnswerClass::ExplicitYes:
          answer = q_rng.pick(kExplicitYes);
          gold["polarity"] = "yes";
          class_counts["explicit_yes"]++;
          break;
        case AnswerClass::ExplicitNo:
          answer = q_rng.pick(kExplicitNo);
          gold["polarity"] = "no";
          class_counts["explicit_no"]++;
          break;
        case AnswerClass::ImplicitYes:
          answer = q_rng.pick(kImplicitYes);
          gold["polarity"] = "yes";
          class_counts["implicit_yes"]++;
          break;
        case AnswerClass::ImplicitNo:
          answer = q_rng.pick(kImplicitNo);
          gold["polarity"] = "no";
          class_counts["implicit_no"]++;
          break;
        case AnswerClass::Neutral:
          answer = q_rng.pick(kNeutral);
          gold["polarity"] = "neutral";
          class_counts["neutral"]++;
          break;
      }
    } else {
      sentences.push_back(distractor_question(q_rng));
      answer = q_rng.pick(kDistractorAnswers);
      gold["entities"] = json::array();
      gold["polarity"] = "neutral";
      class_counts["distractor"]++;
    }

    std::vector<std::string> texts;
    for (size_t s = 0; s < sentences.size(); ++s) {
      texts.push_back(sentences[s].text);
      out.question_conllu += conllu_block("sent_id", std::string(qid) + ":" + std::to_string(s + 1),
                                          sentences[s].graph);
    }
    j["question"] = join(texts, " ");
    j["n_question_sentences"] = sentences.size();
    j["answers"] = json::array({answer});
    j["gold"] = gold;
    out.qa_jsonl += j.dump();
    out.qa_jsonl += '\n';
  }

  json manifest;
  manifest["seed"] = spec.seed;
  manifest["n_questions"] = spec.n_questions;
  manifest["n_entity_questions"] = n_entity_q;
  manifest["fractions"] = {{"explicit", spec.fraction_explicit},
                           {"neutral", spec.fraction_neutral},
                           {"entity_questions", tpl.entity_question_fraction}};
  manifest["seeds"] = seeds;
  manifest["planted_entities"] = planted_entities;
  manifest["planted_verbs"] = planted_verbs;
  manifest["decoy_verbs"] = decoy_verbs;
  manifest["class_counts"] = class_counts;
  out.manifest_json = manifest.dump(2) + "\n";
  return out;
}

}  // namespace pcqa

#include "pcqa/pattern.hpp"

#include <algorithm>
#include <sstream>

#include "pcqa/util.hpp"

namespace pcqa {

bool LemmaConstraint::admits(const std::string& folded_lemma, const LexiconBindings& lex,
                             const std::string& pattern_id) const {
  if (empty()) return true;
  if (!lexicon.empty()) {
    auto it = lex.find(lexicon);
    if (it == lex.end())
      throw std::runtime_error("pattern " + pattern_id + " references undefined lexicon $" + lexicon);
    return it->second.count(folded_lemma) > 0;
  }
  return std::binary_search(lemmas.begin(), lemmas.end(), folded_lemma);
}

bool TokenConstraint::admits(const Token& t, const LexiconBindings& lex,
                             const std::string& pattern_id) const {
  if (!pos.empty() && std::find(pos.begin(), pos.end(), t.upos) == pos.end()) return false;
  return lemma.admits(to_lower(t.lemma), lex, pattern_id);
}

bool DeprelConstraint::wildcard() const {
  for (const std::string& a : alts)
    if (a != "*") return false;
  return true;
}

bool DeprelConstraint::admits(const std::string& deprel) const {
  for (const std::string& a : alts) {
    if (a == "*") return true;
    if (a.size() >= 2 && a.back() == '*' && a[a.size() - 2] == ':') {
      // nmod:* accepts both bare nmod and any nmod:<case>
      std::string_view prefix(a.data(), a.size() - 2);
      if (deprel == prefix) return true;
      if (deprel.size() > prefix.size() && starts_with(deprel, a.substr(0, a.size() - 1)))
        return true;
    } else if (deprel == a) {
      return true;
    }
  }
  return false;
}

namespace {

// Per-line cursor with column tracking for error reporting.
struct Cursor {
  const std::string& s;
  int line;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw PatternError(line, static_cast<int>(pos) + 1, msg);
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  // Identifier-ish token: letters, digits and the given extra characters.
  std::string word(std::string_view extra = "") {
    size_t start = pos;
    while (pos < s.size()) {
      char c = s[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          extra.find(c) != std::string_view::npos)
        ++pos;
      else
        break;
    }
    if (pos == start) fail("expected identifier");
    return s.substr(start, pos - start);
  }
};

LemmaConstraint parse_lemma_part(Cursor& c) {
  LemmaConstraint out;
  if (!c.eat('[')) return out;
  if (c.eat('$')) {
    out.lexicon = c.word();
  } else {
    while (true) {
      out.lemmas.push_back(to_lower(c.word("-'.")));
      if (!c.eat('|')) break;
    }
    std::sort(out.lemmas.begin(), out.lemmas.end());
  }
  if (!c.eat(']')) c.fail("expected ']'");
  return out;
}

TokenConstraint parse_token_constraint(Cursor& c) {
  TokenConstraint out;
  if (c.eat('*')) {
    // any POS
  } else {
    while (true) {
      out.pos.push_back(c.word());
      if (!c.eat('|')) break;
    }
  }
  out.lemma = parse_lemma_part(c);
  return out;
}

DeprelConstraint parse_deprel(Cursor& c) {
  DeprelConstraint out;
  while (true) {
    if (c.eat('*')) {
      out.alts.push_back("*");
    } else {
      std::string label = c.word(":");
      if (c.eat('*')) label += "*";  // nmod:* — word() stops before '*'
      out.alts.push_back(label);
    }
    if (!c.eat('|')) break;
  }
  return out;
}

}  // namespace

std::vector<DepPattern> parse_pattern_file(const std::string& text) {
  std::vector<DepPattern> out;
  std::set<std::string> seen_ids;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    size_t hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    if (trim(line).empty()) continue;

    Cursor c{line, line_no};
    c.skip_ws();
    DepPattern p;
    p.id = c.word();
    if (!seen_ids.insert(p.id).second) c.fail("duplicate pattern id '" + p.id + "'");
    c.skip_ws();
    std::string tier = c.word();
    if (tier == "hp")
      p.tier = Tier::HighPrecision;
    else if (tier == "ex")
      p.tier = Tier::Extraction;
    else
      c.fail("unknown tier '" + tier + "' (expected hp or ex)");
    if (!c.eat(':')) c.fail("expected ':' after tier");
    c.skip_ws();
    p.anchor = parse_token_constraint(c);

    while (!c.done()) {
      PatternStep step;
      if (c.eat('>'))
        step.direction = StepDirection::Down;
      else if (c.eat('<'))
        step.direction = StepDirection::Up;
      else
        c.fail("expected step direction '>' or '<'");
      step.deprel = parse_deprel(c);
      c.skip_ws();
      size_t mark = c.pos;
      std::string head_word;
      if (std::isalpha(static_cast<unsigned char>(c.peek()))) head_word = c.word();
      if (head_word == "CAPTURE") {
        if (!c.eat('(')) c.fail("expected '(' after CAPTURE");
        step.is_capture = true;
        step.cons = parse_token_constraint(c);
        if (!c.eat(')')) c.fail("expected ')'");
        if (p.capture_index >= 0) c.fail("more than one CAPTURE step");
        p.capture_index = static_cast<int>(p.steps.size());
      } else {
        c.pos = mark;
        step.cons = parse_token_constraint(c);
      }
      if (!step.is_capture && step.deprel.wildcard() && step.cons.wildcard())
        c.fail("fully unconstrained step (give a relation, POS or lemma)");
      p.steps.push_back(std::move(step));
    }
    if (p.steps.empty()) c.fail("pattern has no steps");
    if (p.capture_index < 0) c.fail("pattern has no CAPTURE step");
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

void walk(const DepPattern& p, const DependencyGraph& g, const LexiconBindings& lex, int current,
          size_t step_idx, int captured, std::vector<std::pair<int, int>>& hits, int anchor) {
  if (step_idx == p.steps.size()) {
    hits.emplace_back(anchor, captured);
    return;
  }
  const PatternStep& step = p.steps[step_idx];
  const Token& cur = g.token(current);
  if (step.direction == StepDirection::Down) {
    for (int d : g.dependents(current)) {
      const Token& dep = g.token(d);
      if (!step.deprel.admits(dep.deprel)) continue;
      if (!step.cons.admits(dep, lex, p.id)) continue;
      walk(p, g, lex, d, step_idx + 1, step.is_capture ? d : captured, hits, anchor);
    }
  } else {
    if (cur.head == 0) return;
    if (!step.deprel.admits(cur.deprel)) return;  // edge between current and its head
    const Token& head = g.token(cur.head);
    if (!step.cons.admits(head, lex, p.id)) return;
    walk(p, g, lex, cur.head, step_idx + 1, step.is_capture ? cur.head : captured, hits, anchor);
  }
}

}  // namespace

std::vector<PatternMatch> match_pattern(const DepPattern& pattern, const DependencyGraph& graph,
                                        const LexiconBindings& lex) {
  std::vector<std::pair<int, int>> hits;
  for (const Token& t : graph.tokens) {
    if (!pattern.anchor.admits(t, lex, pattern.id)) continue;
    walk(pattern, graph, lex, t.index, 0, 0, hits, t.index);
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  std::vector<PatternMatch> out;
  out.reserve(hits.size());
  for (auto [a, cap] : hits) out.push_back({pattern.id, a, cap});
  return out;
}

const std::string& default_pattern_text() {
  static const std::string text =
      "# Default dependency-path patterns (Stanford-style UD v1 labels).\n"
      "# ex = extraction tier, applied to question sentences.\n"
      "# hp = high-precision tier, used to harvest entities from reviews\n"
      "#      during lexicon bootstrapping.\n"
      "\n"
      "E1 ex: VERB[$VERBS] >nmod:with CAPTURE(NOUN|PROPN)\n"
      "E2 ex: VERB[$VERBS] >nmod:on CAPTURE(NOUN|PROPN)\n"
      "E3 ex: VERB[$VERBS] >nmod:for CAPTURE(NOUN|PROPN)\n"
      "E4 ex: VERB[$VERBS] >nmod:in CAPTURE(NOUN|PROPN)\n"
      "E5 ex: VERB[$VERBS] >dobj CAPTURE(NOUN|PROPN)\n"
      "E6 ex: ADJ[compatible] >nmod:with CAPTURE(NOUN|PROPN)\n"
      "\n"
      "# Verb anchored on an it/this subject or object, then back to the verb\n"
      "# and down to the mention; precise enough to trust on raw reviews.\n"
      "H1 hp: VERB[$VERBS] >nsubj|dobj *[it|this] <nsubj|dobj VERB >nmod:with CAPTURE(NOUN|PROPN)\n"
      "H2 hp: ADJ[compatible] >nmod:with CAPTURE(NOUN|PROPN)\n";
  return text;
}

}  // namespace pcqa

#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcqa/conllu.hpp"

namespace pcqa {

// Named lemma sets referenced from patterns as $NAME. Entries are case-folded.
using LexiconBindings = std::map<std::string, std::set<std::string>>;

enum class Tier { HighPrecision, Extraction };
enum class StepDirection { Down, Up };  // dependent-ward / head-ward

// Lemma side of a token constraint: either an inline set or a $lexicon
// reference, resolved at match time.
struct LemmaConstraint {
  std::vector<std::string> lemmas;  // case-folded, sorted
  std::string lexicon;              // non-empty: named lexicon reference

  bool empty() const { return lemmas.empty() && lexicon.empty(); }
  bool admits(const std::string& folded_lemma, const LexiconBindings& lex,
              const std::string& pattern_id) const;
};

struct TokenConstraint {
  std::vector<std::string> pos;  // empty: any POS
  LemmaConstraint lemma;

  bool wildcard() const { return pos.empty() && lemma.empty(); }
  bool admits(const Token& t, const LexiconBindings& lex, const std::string& pattern_id) const;
};

// Relation label alternatives; each alternative is an exact label, a
// "prefix:*" wildcard (nmod:* matches nmod:with) or "*".
struct DeprelConstraint {
  std::vector<std::string> alts;

  bool wildcard() const;
  bool admits(const std::string& deprel) const;
};

struct PatternStep {
  StepDirection direction = StepDirection::Down;
  DeprelConstraint deprel;
  TokenConstraint cons;
  bool is_capture = false;
};

// One dependency-path pattern: anchored at a token matching `anchor`, walking
// `steps` edge by edge; the capture step's token is the entity head.
struct DepPattern {
  std::string id;
  Tier tier = Tier::Extraction;
  TokenConstraint anchor;
  std::vector<PatternStep> steps;
  int capture_index = -1;  // index into steps
};

struct PatternMatch {
  std::string pattern_id;
  int anchor_index = 0;    // 1-based token index
  int captured_index = 0;  // 1-based token index
};

struct PatternError : std::runtime_error {
  int line, column;
  PatternError(int line_, int column_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(column_) +
                           ": " + msg),
        line(line_),
        column(column_) {}
};

// Line-oriented DSL, one pattern per line:
//
//   <id> <tier>: <anchor> (<dir><deprel> <constraints>)+
//
//   tier        hp | ex
//   dir         > (to a dependent) | < (to the head)
//   deprel      label alternatives: nsubj|dobj, nmod:* (prefix wildcard), *
//   constraints POS alternatives with an optional [lemma] part:
//                 VERB[$VERBS]  NOUN|PROPN  *[it|this]  ADJ[compatible]
//               CAPTURE(...) marks the step whose token is the entity head.
//
// '#' starts a comment. See README for the full grammar.
std::vector<DepPattern> parse_pattern_file(const std::string& text);

// All matches of `pattern` in `graph`, deduplicated on (anchor, captured) and
// ordered by anchor index then captured index. Pure; throws on a $lexicon
// reference missing from `lex`.
std::vector<PatternMatch> match_pattern(const DepPattern& pattern, const DependencyGraph& graph,
                                        const LexiconBindings& lex);

// The pattern set shipped with the tool (also at patterns/default.patterns).
// Uses Stanford-style UD v1 labels (nmod:with, dobj); swap the file when your
// parser emits a different inventory.
const std::string& default_pattern_text();

}  // namespace pcqa

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcqa {

// One token of a parsed sentence. `index` is 1-based; `head` is the 1-based
// index of the governing token, 0 for the root.
struct Token {
  int index = 0;
  std::string form;
  std::string lemma;
  std::string upos;    // CoNLL-U column 4, the canonical POS
  std::string xpos;    // column 5, used by the NP chunker when present
  int head = 0;
  std::string deprel;  // column 8
};

// A dependency parse of one sentence. Head links always form a tree: exactly
// one root, every head in range, no cycles.
struct DependencyGraph {
  std::vector<Token> tokens;
  std::string sentence_text;

  const Token& token(int index_1based) const { return tokens[static_cast<size_t>(index_1based - 1)]; }
  int size() const { return static_cast<int>(tokens.size()); }

  // Indices of tokens whose head is `index_1based`, in sentence order.
  std::vector<int> dependents(int index_1based) const;
  int root_index() const;  // 1-based
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// A sentence plus the "# key = value" comments preceding it; loaders use the
// sent_id / review_id comments to key sentences.
struct KeyedSentence {
  DependencyGraph graph;
  std::map<std::string, std::string> comments;
  int first_line = 0;
};

struct LoadStats {
  int n_loaded = 0;
  int n_skipped = 0;
  std::vector<std::string> errors;
};

// Throws (strict) or records and skips (stats != nullptr) malformed sentences.
std::vector<KeyedSentence> parse_conllu_keyed(const std::string& text, LoadStats* stats = nullptr);

// Plain form: one DependencyGraph per sentence block. Multiword-token ranges
// ("2-4") and empty nodes ("5.1") are skipped.
std::vector<DependencyGraph> parse_conllu(const std::string& text, LoadStats* stats = nullptr);

// Inverse of parse_conllu for the fields we consume (form, lemma, upos, xpos,
// head, deprel); other columns are written as "_".
std::string serialize_conllu(const std::vector<DependencyGraph>& graphs);

// Validates the tree invariant; returns an error message or empty string.
// `base_line` is used to report positions of offending tokens.
std::string check_tree(const std::vector<Token>& tokens, int base_line);

}  // namespace pcqa

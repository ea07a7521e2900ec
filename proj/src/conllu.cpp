#include "pcqa/conllu.hpp"

#include <charconv>
#include <sstream>

#include "pcqa/util.hpp"

namespace pcqa {

std::vector<int> DependencyGraph::dependents(int index_1based) const {
  std::vector<int> out;
  for (const Token& t : tokens)
    if (t.head == index_1based) out.push_back(t.index);
  return out;
}

int DependencyGraph::root_index() const {
  for (const Token& t : tokens)
    if (t.head == 0) return t.index;
  return 0;
}

namespace {

bool is_integer(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Token id column: plain integer is a word line; "2-4" (multiword range) and
// "5.1" (empty node) lines carry no tree structure and are skipped.
enum class IdKind { Word, Skip, Bad };

IdKind classify_id(std::string_view s) {
  if (is_integer(s)) return IdKind::Word;
  size_t dash = s.find('-');
  size_t dot = s.find('.');
  if (dash != std::string_view::npos && is_integer(s.substr(0, dash)) && is_integer(s.substr(dash + 1)))
    return IdKind::Skip;
  if (dot != std::string_view::npos && is_integer(s.substr(0, dot)) && is_integer(s.substr(dot + 1)))
    return IdKind::Skip;
  return IdKind::Bad;
}

}  // namespace

std::string check_tree(const std::vector<Token>& tokens, int base_line) {
  const int n = static_cast<int>(tokens.size());
  int root = 0;
  for (const Token& t : tokens) {
    if (t.head < 0 || t.head > n)
      return "head out of range at line " + std::to_string(base_line + t.index - 1);
    if (t.head == t.index) return "self-loop at line " + std::to_string(base_line + t.index - 1);
    if (t.head == 0) {
      if (root != 0) return "multiple roots at line " + std::to_string(base_line + t.index - 1);
      root = t.index;
    }
  }
  if (root == 0) return "no root in sentence starting at line " + std::to_string(base_line);
  // Walk up from every token; a chain longer than n tokens means a cycle.
  for (const Token& t : tokens) {
    int cur = t.index, steps = 0;
    while (cur != 0) {
      cur = tokens[static_cast<size_t>(cur - 1)].head;
      if (++steps > n)
        return "cycle detected in sentence starting at line " + std::to_string(base_line);
    }
  }
  return "";
}

std::vector<KeyedSentence> parse_conllu_keyed(const std::string& text, LoadStats* stats) {
  std::vector<KeyedSentence> out;
  std::vector<Token> tokens;
  std::map<std::string, std::string> comments;
  int line_no = 0;
  int first_line = 0;        // sentence start, including comments
  int first_token_line = 0;  // first word line, for token-relative errors
  bool bad_sentence = false;
  std::string pending_error;

  auto flush = [&]() {
    if (!bad_sentence && !tokens.empty()) {
      std::string err = check_tree(tokens, first_token_line);
      if (!err.empty()) {
        bad_sentence = true;
        pending_error = err;
      }
    }
    if (bad_sentence) {
      if (!stats) throw ParseError(first_line, pending_error);
      stats->n_skipped++;
      stats->errors.push_back(pending_error);
    } else if (!tokens.empty()) {
      KeyedSentence ks;
      ks.graph.tokens = std::move(tokens);
      auto it = comments.find("text");
      if (it != comments.end()) {
        ks.graph.sentence_text = it->second;
      } else {
        std::vector<std::string> forms;
        for (const Token& t : ks.graph.tokens) forms.push_back(t.form);
        ks.graph.sentence_text = join(forms, " ");
      }
      ks.comments = std::move(comments);
      ks.first_line = first_line;
      out.push_back(std::move(ks));
      if (stats) stats->n_loaded++;
    }
    tokens.clear();
    comments.clear();
    first_line = 0;
    first_token_line = 0;
    bad_sentence = false;
    pending_error.clear();
  };

  auto fail = [&](int line, const std::string& msg) {
    if (!stats) throw ParseError(line, msg);
    if (!bad_sentence) {
      bad_sentence = true;
      pending_error = "line " + std::to_string(line) + ": " + msg;
    }
  };

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty()) {
      flush();
      continue;
    }
    if (t[0] == '#') {
      if (tokens.empty()) {
        if (first_line == 0) first_line = line_no;
        size_t eq = t.find('=');
        if (eq != std::string::npos)
          comments[trim(t.substr(1, eq - 1))] = trim(t.substr(eq + 1));
      }
      continue;
    }
    if (first_line == 0) first_line = line_no;
    if (first_token_line == 0) first_token_line = line_no;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 10) {
      fail(line_no, "malformed column count (expected 10, got " + std::to_string(cols.size()) + ")");
      continue;
    }
    IdKind kind = classify_id(cols[0]);
    if (kind == IdKind::Skip) continue;
    if (kind == IdKind::Bad) {
      fail(line_no, "bad token id '" + cols[0] + "'");
      continue;
    }
    Token tok;
    tok.index = std::stoi(cols[0]);
    tok.form = cols[1];
    tok.lemma = cols[2] == "_" ? to_lower(cols[1]) : cols[2];
    tok.upos = cols[3];
    tok.xpos = cols[4] == "_" ? "" : cols[4];
    if (!is_integer(cols[6])) {
      fail(line_no, "non-integer head '" + cols[6] + "'");
      continue;
    }
    tok.head = std::stoi(cols[6]);
    tok.deprel = cols[7];
    if (tok.head == tok.index) {
      fail(line_no, "self-loop");
      continue;
    }
    if (tok.index != static_cast<int>(tokens.size()) + 1) {
      fail(line_no, "non-consecutive token id " + cols[0]);
      continue;
    }
    tokens.push_back(std::move(tok));
  }
  flush();
  return out;
}

std::vector<DependencyGraph> parse_conllu(const std::string& text, LoadStats* stats) {
  std::vector<DependencyGraph> out;
  for (KeyedSentence& ks : parse_conllu_keyed(text, stats)) out.push_back(std::move(ks.graph));
  return out;
}

std::string serialize_conllu(const std::vector<DependencyGraph>& graphs) {
  std::string out;
  for (const DependencyGraph& g : graphs) {
    out += "# text = " + g.sentence_text + "\n";
    for (const Token& t : g.tokens) {
      out += std::to_string(t.index);
      out += '\t';
      out += t.form;
      out += '\t';
      out += t.lemma;
      out += '\t';
      out += t.upos;
      out += '\t';
      out += t.xpos.empty() ? "_" : t.xpos;
      out += "\t_\t";
      out += std::to_string(t.head);
      out += '\t';
      out += t.deprel;
      out += "\t_\t_\n";
    }
    out += '\n';
  }
  return out;
}

}  // namespace pcqa

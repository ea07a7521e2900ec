#include "pcqa/chunk.hpp"

#include <stdexcept>
#include <vector>

#include "pcqa/util.hpp"

namespace pcqa {

NPClass np_class(const Token& t) {
  if (!t.xpos.empty()) {
    const std::string& x = t.xpos;
    if (x == "DT") return NPClass::Det;
    if (starts_with(x, "JJ")) return NPClass::Adj;
    if (x == "NNP" || x == "NNPS") return NPClass::Propn;
    if (starts_with(x, "NN")) return NPClass::Noun;
    if (x == "CD") return NPClass::Num;
    return NPClass::Other;
  }
  if (t.upos == "DET") return NPClass::Det;
  if (t.upos == "ADJ") return NPClass::Adj;
  if (t.upos == "NOUN") return NPClass::Noun;
  if (t.upos == "PROPN") return NPClass::Propn;
  if (t.upos == "NUM") return NPClass::Num;
  return NPClass::Other;
}

bool is_nominal(const Token& t) {
  NPClass c = np_class(t);
  return c == NPClass::Noun || c == NPClass::Propn;
}

namespace {

bool is_np_inner(NPClass c) {
  return c == NPClass::Adj || c == NPClass::Noun || c == NPClass::Propn || c == NPClass::Num;
}

bool is_head_class(NPClass c) { return c == NPClass::Noun || c == NPClass::Propn; }

// Full-match of the window [l, r] (0-based) against the NP regex.
bool window_matches(const std::vector<NPClass>& c, int l, int r) {
  int i = l;
  if (c[i] == NPClass::Det) ++i;
  if (i > r) return false;
  for (int j = i; j <= r; ++j)
    if (!is_np_inner(c[j])) return false;
  if (is_head_class(c[r])) return true;
  // trailing NUM needs a nominal right before it
  return c[r] == NPClass::Num && r - 1 >= i && is_head_class(c[r - 1]);
}

}  // namespace

EntityMention chunk_noun_phrase(const DependencyGraph& graph, int head_index) {
  const int n = graph.size();
  if (head_index < 1 || head_index > n) throw std::invalid_argument("chunk head index out of range");
  if (!is_nominal(graph.token(head_index)))
    throw std::invalid_argument("chunk head '" + graph.token(head_index).form + "' is not nominal");

  std::vector<NPClass> classes;
  classes.reserve(static_cast<size_t>(n));
  for (const Token& t : graph.tokens) classes.push_back(np_class(t));

  const int h = head_index - 1;
  int best_l = h, best_r = h;
  int best_len = 0;
  for (int l = 0; l <= h; ++l) {
    for (int r = h; r < n; ++r) {
      if (!window_matches(classes, l, r)) continue;
      int len = r - l + 1;
      if (len > best_len) {  // ties keep the earlier (leftmost) l
        best_len = len;
        best_l = l;
        best_r = r;
      }
    }
  }
  if (best_len == 0) throw std::invalid_argument("no NP window around head");  // unreachable for nominal heads

  EntityMention m;
  m.head_index = head_index;
  m.span_begin = best_l + 1;
  m.span_end = best_r + 1;
  std::vector<std::string> forms;
  for (int i = best_l; i <= best_r; ++i) {
    if (i == best_l && classes[static_cast<size_t>(i)] == NPClass::Det) continue;
    forms.push_back(graph.token(i + 1).form);
  }
  m.surface = join(forms, " ");
  return m;
}

}  // namespace pcqa

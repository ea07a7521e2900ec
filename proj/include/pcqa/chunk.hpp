#pragma once

#include <string>

#include "pcqa/conllu.hpp"

namespace pcqa {

// A contiguous noun-phrase mention around a head token. `span_begin/end` are
// 1-based inclusive token indices and include a leading determiner; `surface`
// has it stripped.
struct EntityMention {
  int head_index = 0;
  int span_begin = 0;
  int span_end = 0;
  std::string surface;
};

// Chunk classes for the NP window. XPOS (PTB tags) decides when present,
// UPOS otherwise.
enum class NPClass { Det, Adj, Noun, Propn, Num, Other };

NPClass np_class(const Token& t);
bool is_nominal(const Token& t);  // Noun or Propn

// Expands a nominal head token to the longest contiguous window containing it
// whose class sequence matches
//
//   (DET)? (ADJ|NOUN|PROPN|NUM)* (NOUN|PROPN) (NUM)?
//
// Ties on length go to the leftmost window. Throws std::invalid_argument if
// the head is not nominal; callers filter first.
EntityMention chunk_noun_phrase(const DependencyGraph& graph, int head_index);

}  // namespace pcqa

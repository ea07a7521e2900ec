#pragma once

#include <map>
#include <set>
#include <string>

namespace pcqa {

enum class LexOrigin { Seed, Learned };

struct LexiconEntry {
  int support = 0;
  LexOrigin origin = LexOrigin::Learned;
  int iteration_added = 0;
};

// Domain-specific complementary-relation verbs, seeds plus bootstrapped
// additions. Keys are case-folded lemmas.
struct VerbLexicon {
  std::map<std::string, LexiconEntry> entries;

  bool contains(const std::string& lemma) const { return entries.count(lemma) > 0; }
  std::set<std::string> lemmas() const;
  std::set<std::string> seed_lemmas() const;
};

// Candidate complementary entities harvested from reviews. Keys are
// case-folded chunked surfaces.
struct EntityLexicon {
  std::map<std::string, LexiconEntry> entries;

  bool contains(const std::string& surface) const { return entries.count(surface) > 0; }
  std::set<std::string> surfaces() const;
};

// Line format: lemma<TAB>support<TAB>origin<TAB>iteration, sorted by lemma.
std::string lexicon_to_text(const std::map<std::string, LexiconEntry>& entries);
std::map<std::string, LexiconEntry> lexicon_from_text(const std::string& text);

}  // namespace pcqa

#include "pcqa/lexicon.hpp"

#include <sstream>
#include <stdexcept>

#include "pcqa/util.hpp"

namespace pcqa {

std::set<std::string> VerbLexicon::lemmas() const {
  std::set<std::string> out;
  for (const auto& [k, v] : entries) out.insert(k);
  return out;
}

std::set<std::string> VerbLexicon::seed_lemmas() const {
  std::set<std::string> out;
  for (const auto& [k, v] : entries)
    if (v.origin == LexOrigin::Seed) out.insert(k);
  return out;
}

std::set<std::string> EntityLexicon::surfaces() const {
  std::set<std::string> out;
  for (const auto& [k, v] : entries) out.insert(k);
  return out;
}

std::string lexicon_to_text(const std::map<std::string, LexiconEntry>& entries) {
  std::string out;
  for (const auto& [key, e] : entries) {
    out += key;
    out += '\t';
    out += std::to_string(e.support);
    out += '\t';
    out += e.origin == LexOrigin::Seed ? "seed" : "learned";
    out += '\t';
    out += std::to_string(e.iteration_added);
    out += '\n';
  }
  return out;
}

std::map<std::string, LexiconEntry> lexicon_from_text(const std::string& text) {
  std::map<std::string, LexiconEntry> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 4)
      throw std::runtime_error("lexicon line " + std::to_string(line_no) + ": expected 4 columns");
    LexiconEntry e;
    e.support = std::stoi(cols[1]);
    if (cols[2] == "seed")
      e.origin = LexOrigin::Seed;
    else if (cols[2] == "learned")
      e.origin = LexOrigin::Learned;
    else
      throw std::runtime_error("lexicon line " + std::to_string(line_no) + ": bad origin '" + cols[2] + "'");
    e.iteration_added = std::stoi(cols[3]);
    out[cols[0]] = e;
  }
  return out;
}

}  // namespace pcqa

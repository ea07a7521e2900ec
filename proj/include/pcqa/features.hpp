#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcqa/types.hpp"

namespace pcqa {

// Whitespace-split tokens with leading/trailing punctuation stripped and
// case folded; tokens that strip to nothing are dropped.
std::vector<std::string> answer_tokens(std::string_view answer);

// yes/no iff the first token is exactly "yes"/"no" after normalization.
std::optional<Polarity> detect_explicit_polarity(std::string_view answer);

// Bigram (optionally plus unigram) feature inventory with dense ids in
// insertion order. Once frozen, unknown features are dropped instead of added.
struct FeatureSpace {
  std::map<std::string, int> ids;
  std::vector<std::string> names;  // names[id] inverts ids
  bool frozen = false;

  size_t size() const { return names.size(); }
  int add_or_get(const std::string& feature);  // -1 when frozen and unknown
  int lookup(const std::string& feature) const;
  void freeze() { frozen = true; }
};

// Binary-weighted sparse vector; ids strictly increasing.
struct SparseVector {
  std::vector<std::pair<int, double>> elems;

  bool empty() const { return elems.empty(); }
  bool operator==(const SparseVector& o) const { return elems == o.elems; }
};

struct FeatureConfig {
  bool unigrams = false;  // bigrams only by default
};

inline constexpr const char* kBosMark = "<s>";
inline constexpr const char* kEosMark = "</s>";

// Bigrams over normalized tokens with sentence-boundary markers; empty token
// list yields an empty vector. With strip_leading_polarity a first yes/no
// token is removed before bigramming, so "Yes, it works." featurizes like
// "It works.".
SparseVector featurize(std::string_view answer, FeatureSpace& space, bool strip_leading_polarity,
                       const FeatureConfig& cfg = {});
SparseVector featurize(std::string_view answer, const FeatureSpace& space,
                       bool strip_leading_polarity, const FeatureConfig& cfg = {});

// Distant supervision from leading yes/no tokens. Positives keep the token as
// the label and drop it from features; everything else is unlabeled.
struct DistantTrainingSet {
  std::vector<std::pair<SparseVector, Polarity>> positives;  // polarity is yes or no
  std::vector<SparseVector> unlabeled;
};

DistantTrainingSet build_distant_training_set(const std::vector<std::string>& answers,
                                              FeatureSpace& space, const FeatureConfig& cfg = {});

}  // namespace pcqa

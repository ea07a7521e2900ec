#include "pcqa/features.hpp"

#include <algorithm>
#include <set>

#include "pcqa/util.hpp"

namespace pcqa {

std::vector<std::string> answer_tokens(std::string_view answer) {
  std::vector<std::string> out;
  for (const std::string& raw : split_ws(answer)) {
    std::string tok = to_lower(strip_edge_punct(raw));
    if (!tok.empty()) out.push_back(std::move(tok));
  }
  return out;
}

std::optional<Polarity> detect_explicit_polarity(std::string_view answer) {
  std::vector<std::string> toks = answer_tokens(answer);
  if (toks.empty()) return std::nullopt;
  if (toks.front() == "yes") return Polarity::Yes;
  if (toks.front() == "no") return Polarity::No;
  return std::nullopt;
}

int FeatureSpace::add_or_get(const std::string& feature) {
  auto it = ids.find(feature);
  if (it != ids.end()) return it->second;
  if (frozen) return -1;
  int id = static_cast<int>(names.size());
  ids.emplace(feature, id);
  names.push_back(feature);
  return id;
}

int FeatureSpace::lookup(const std::string& feature) const {
  auto it = ids.find(feature);
  return it == ids.end() ? -1 : it->second;
}

namespace {

std::set<std::string> feature_strings(std::string_view answer, bool strip, const FeatureConfig& cfg) {
  std::vector<std::string> toks = answer_tokens(answer);
  if (strip && !toks.empty() && (toks.front() == "yes" || toks.front() == "no"))
    toks.erase(toks.begin());
  std::set<std::string> feats;
  if (toks.empty()) return feats;
  std::vector<std::string> seq;
  seq.reserve(toks.size() + 2);
  seq.push_back(kBosMark);
  for (std::string& t : toks) seq.push_back(std::move(t));
  seq.push_back(kEosMark);
  for (size_t i = 0; i + 1 < seq.size(); ++i) feats.insert(seq[i] + " " + seq[i + 1]);
  if (cfg.unigrams)
    for (size_t i = 1; i + 1 < seq.size(); ++i) feats.insert(seq[i]);
  return feats;
}

SparseVector to_vector(const std::vector<int>& ids) {
  SparseVector v;
  std::vector<int> sorted(ids);
  std::sort(sorted.begin(), sorted.end());
  for (int id : sorted)
    if (id >= 0) v.elems.emplace_back(id, 1.0);
  return v;
}

}  // namespace

SparseVector featurize(std::string_view answer, FeatureSpace& space, bool strip_leading_polarity,
                       const FeatureConfig& cfg) {
  std::set<std::string> feats = feature_strings(answer, strip_leading_polarity, cfg);
  std::vector<int> ids;
  ids.reserve(feats.size());
  for (const std::string& f : feats) ids.push_back(space.add_or_get(f));
  return to_vector(ids);
}

SparseVector featurize(std::string_view answer, const FeatureSpace& space,
                       bool strip_leading_polarity, const FeatureConfig& cfg) {
  std::set<std::string> feats = feature_strings(answer, strip_leading_polarity, cfg);
  std::vector<int> ids;
  ids.reserve(feats.size());
  for (const std::string& f : feats) ids.push_back(space.lookup(f));
  return to_vector(ids);
}

DistantTrainingSet build_distant_training_set(const std::vector<std::string>& answers,
                                              FeatureSpace& space, const FeatureConfig& cfg) {
  DistantTrainingSet ts;
  for (const std::string& a : answers) {
    std::optional<Polarity> pol = detect_explicit_polarity(a);
    if (pol) {
      ts.positives.emplace_back(featurize(a, space, /*strip=*/true, cfg), *pol);
    } else {
      ts.unlabeled.push_back(featurize(a, space, /*strip=*/false, cfg));
    }
  }
  return ts;
}

}  // namespace pcqa

#pragma once

#include <string>

#include "pcqa/features.hpp"
#include "pcqa/pu.hpp"

namespace pcqa {

// Trains the full answer model from raw answer strings: grows and freezes the
// feature space, builds the distant training set, then PU + binary models.
// Per-component seeds are derived from `seed`.
AnswerModel train_answer_model(const std::vector<std::string>& answers, uint64_t seed,
                               const PUParams& pu_params, const LinearHyperParams& binary_params,
                               const FeatureConfig& cfg = {});

// Versioned text format; saving a loaded model reproduces the file byte for
// byte (doubles are written with round-trip precision).
std::string save_answer_model(const AnswerModel& model);
AnswerModel load_answer_model(const std::string& text);

inline constexpr const char* kModelMagic = "compatminer-model";
inline constexpr int kModelVersion = 1;

}  // namespace pcqa

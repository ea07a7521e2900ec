#pragma once

#include <cstdint>
#include <vector>

#include "pcqa/linear.hpp"

namespace pcqa {

struct PUParams {
  double spy_fraction = 0.15;     // share of positives hidden among the unlabeled
  double noise_percentile = 5.0;  // spy-score percentile that sets the threshold
  int max_step2_iters = 10;
  uint64_t seed = 1;
  LinearHyperParams base;  // per-step seeds are derived from `seed`
};

struct PUIterationDiag {
  int iteration = 0;
  int n_negatives = 0;  // negative set size used for training this iterate
  int n_added = 0;      // unlabeled items pushed to negative afterwards
  double spy_recall = 0.0;
};

// Spy-based positive/unlabeled learner: positive = implicit yes/no answer,
// negative = neutral.
struct PUModel {
  LinearModel model;
  double spy_threshold = 0.0;  // sigmoid-calibrated score; unlabeled below it seed the negatives

  int n_spies = 0;
  std::vector<int> spy_ids;                // indices into the positive set
  std::vector<int> reliable_negatives;     // indices into the unlabeled set (step 1)
  std::vector<int> final_negatives;        // indices into the unlabeled set (step 2 end)
  std::vector<PUIterationDiag> step2;      // not persisted in model files
  int selected_iteration = 0;
  bool degenerate = false;  // every unlabeled item ended up negative
};

// Step 1: hide a seeded sample of positives among the unlabeled, train
// positive-vs-unlabeled, and take the noise_percentile-th percentile of spy
// scores as the reliable-negative threshold. Step 2: retrain
// positive-vs-negative, growing the negative set with unlabeled items scoring
// below the boundary, to fixpoint or max_step2_iters. The returned model is
// the last iterate whose spy recall is >= 1 - noise_percentile/100, else the
// first. Requires >= 20 positives and >= 20 unlabeled. `dim` is the size of
// the (frozen) feature space.
PUModel train_pu(const DistantTrainingSet& ts, size_t dim, const PUParams& params);

// yes-vs-no classifier over the positives only (yes = +1, no = -1).
LinearModel train_binary_yesno(const DistantTrainingSet& ts, size_t dim,
                               const LinearHyperParams& hp);

// Everything classification needs, as trained by `train` and persisted by
// model_io.
struct AnswerModel {
  FeatureSpace space;  // frozen
  FeatureConfig fconfig;
  PUModel pu;
  LinearModel binary;
  uint64_t seed = 0;
  PUParams pu_params;
  LinearHyperParams binary_params;
};

// Three-way cascade: explicit leading yes/no wins outright; otherwise the PU
// model separates implicit yes/no answers from neutral, and the binary model
// decides yes vs no (exact zero goes to yes, the majority class). Answers with
// no in-vocabulary features are neutral.
Polarity classify_answer(std::string_view answer, const PUModel& pu, const LinearModel& binary,
                         const FeatureSpace& space, const FeatureConfig& cfg = {});
Polarity classify_answer(std::string_view answer, const AnswerModel& model);

}  // namespace pcqa

#pragma once

#include <cstdint>
#include <vector>

#include "pcqa/features.hpp"

namespace pcqa {

struct LinearHyperParams {
  int epochs = 60;
  double learning_rate = 0.5;    // initial step size
  double regularization = 1e-4;  // L2 on the weights, not the bias
  uint64_t seed = 1;
};

// Hinge-loss linear classifier trained by seeded stochastic subgradient
// descent. Given identical inputs, hyperparameters and seed the weights are
// bit-identical.
struct LinearModel {
  std::vector<double> weights;  // dense over the feature space
  double bias = 0.0;
  LinearHyperParams hp;
  double final_objective = 0.0;
};

double margin(const LinearModel& m, const SparseVector& x);
double sigmoid(double z);

// Labels must be +1/-1 and both classes present. `dim` is the feature-space
// size; every feature id must be below it.
LinearModel train_linear(const std::vector<std::pair<SparseVector, int>>& examples, size_t dim,
                         const LinearHyperParams& hp);

}  // namespace pcqa

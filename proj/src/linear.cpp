#include "pcqa/linear.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pcqa/util.hpp"

namespace pcqa {

double margin(const LinearModel& m, const SparseVector& x) {
  double z = m.bias;
  for (auto [id, v] : x.elems) z += m.weights[static_cast<size_t>(id)] * v;
  return z;
}

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

LinearModel train_linear(const std::vector<std::pair<SparseVector, int>>& examples, size_t dim,
                         const LinearHyperParams& hp) {
  if (examples.empty()) throw std::invalid_argument("train_linear: no examples");
  bool has_pos = false, has_neg = false;
  for (const auto& [x, y] : examples) {
    if (y == 1)
      has_pos = true;
    else if (y == -1)
      has_neg = true;
    else
      throw std::invalid_argument("train_linear: labels must be +1/-1");
    if (!x.elems.empty() && static_cast<size_t>(x.elems.back().first) >= dim)
      throw std::invalid_argument("train_linear: feature id beyond dimension");
  }
  if (!has_pos || !has_neg) throw std::invalid_argument("train_linear: single-class input");
  if (hp.learning_rate * hp.regularization >= 1.0)
    throw std::invalid_argument("train_linear: learning_rate * regularization must be < 1");

  // Lazily scaled weights: w = scale * u, so the L2 shrink per step is O(1)
  // and updates stay O(nnz).
  std::vector<double> u(dim, 0.0);
  double scale = 1.0;
  double bias = 0.0;
  Rng rng(hp.seed);
  std::vector<size_t> order(examples.size());
  std::iota(order.begin(), order.end(), 0);

  long long t = 0;
  for (int epoch = 0; epoch < hp.epochs; ++epoch) {
    rng.shuffle(order);
    for (size_t idx : order) {
      ++t;
      const auto& [x, y] = examples[idx];
      double eta = hp.learning_rate / (1.0 + hp.learning_rate * hp.regularization * static_cast<double>(t));
      double z = bias;
      for (auto [id, v] : x.elems) z += scale * u[static_cast<size_t>(id)] * v;
      scale *= 1.0 - eta * hp.regularization;
      if (y * z < 1.0) {
        for (auto [id, v] : x.elems) u[static_cast<size_t>(id)] += eta * y * v / scale;
        bias += eta * y;
      }
      if (scale < 1e-9) {
        for (double& w : u) w *= scale;
        scale = 1.0;
      }
    }
  }

  LinearModel m;
  m.weights.resize(dim);
  for (size_t i = 0; i < dim; ++i) m.weights[i] = scale * u[i];
  m.bias = bias;
  m.hp = hp;

  double hinge = 0.0;
  for (const auto& [x, y] : examples) hinge += std::max(0.0, 1.0 - y * margin(m, x));
  double norm2 = 0.0;
  for (double w : m.weights) norm2 += w * w;
  m.final_objective = hp.regularization / 2.0 * norm2 + hinge / static_cast<double>(examples.size());
  return m;
}

}  // namespace pcqa

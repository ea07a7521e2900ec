#include "pcqa/pu.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pcqa/util.hpp"

namespace pcqa {

namespace {

// Nearest-rank percentile of ascending-sorted scores.
double percentile(std::vector<double> scores, double q) {
  std::sort(scores.begin(), scores.end());
  size_t n = scores.size();
  size_t rank = static_cast<size_t>(std::max(1.0, std::ceil(q / 100.0 * static_cast<double>(n))));
  if (rank > n) rank = n;
  return scores[rank - 1];
}

}  // namespace

PUModel train_pu(const DistantTrainingSet& ts, size_t dim, const PUParams& params) {
  const size_t n_pos = ts.positives.size();
  const size_t n_unl = ts.unlabeled.size();
  if (n_pos < 20) throw std::invalid_argument("train_pu: need at least 20 positives");
  if (n_unl < 20) throw std::invalid_argument("train_pu: need at least 20 unlabeled");
  if (!(params.spy_fraction > 0.0 && params.spy_fraction < 1.0))
    throw std::invalid_argument("train_pu: spy_fraction must be in (0, 1)");
  if (!(params.noise_percentile > 0.0 && params.noise_percentile < 100.0))
    throw std::invalid_argument("train_pu: noise_percentile must be in (0, 100)");
  if (dim == 0) throw std::invalid_argument("train_pu: empty feature space");

  PUModel pu;

  // Step 1: spies into the unlabeled pool, positive-vs-unlabeled classifier.
  size_t n_spies = std::max<size_t>(1, static_cast<size_t>(params.spy_fraction * static_cast<double>(n_pos)));
  std::vector<int> pos_ids(n_pos);
  std::iota(pos_ids.begin(), pos_ids.end(), 0);
  Rng spy_rng(derive_seed(params.seed, "pu.spies"));
  spy_rng.shuffle(pos_ids);
  pu.spy_ids.assign(pos_ids.begin(), pos_ids.begin() + static_cast<long>(n_spies));
  std::sort(pu.spy_ids.begin(), pu.spy_ids.end());
  pu.n_spies = static_cast<int>(n_spies);
  std::set<int> spy_set(pu.spy_ids.begin(), pu.spy_ids.end());

  std::vector<std::pair<SparseVector, int>> step1;
  step1.reserve(n_pos + n_unl);
  for (size_t i = 0; i < n_pos; ++i)
    if (!spy_set.count(static_cast<int>(i))) step1.emplace_back(ts.positives[i].first, 1);
  for (const SparseVector& x : ts.unlabeled) step1.emplace_back(x, -1);
  for (int s : pu.spy_ids) step1.emplace_back(ts.positives[static_cast<size_t>(s)].first, -1);

  LinearHyperParams hp1 = params.base;
  hp1.seed = derive_seed(params.seed, "pu.step1");
  LinearModel m1 = train_linear(step1, dim, hp1);

  std::vector<double> spy_scores;
  spy_scores.reserve(n_spies);
  for (int s : pu.spy_ids) spy_scores.push_back(sigmoid(margin(m1, ts.positives[static_cast<size_t>(s)].first)));
  pu.spy_threshold = percentile(spy_scores, params.noise_percentile);

  for (size_t i = 0; i < n_unl; ++i)
    if (sigmoid(margin(m1, ts.unlabeled[i])) < pu.spy_threshold)
      pu.reliable_negatives.push_back(static_cast<int>(i));
  if (pu.reliable_negatives.empty())
    throw std::runtime_error("train_pu: no reliable negatives below the spy threshold");

  // Step 2: grow the negative set to fixpoint.
  std::set<int> negatives(pu.reliable_negatives.begin(), pu.reliable_negatives.end());
  const double recall_target = 1.0 - params.noise_percentile / 100.0;
  std::vector<LinearModel> iterates;
  for (int iter = 1; iter <= params.max_step2_iters; ++iter) {
    std::vector<std::pair<SparseVector, int>> step2;
    step2.reserve(n_pos + negatives.size());
    for (const auto& [x, y] : ts.positives) step2.emplace_back(x, 1);
    for (int i : negatives) step2.emplace_back(ts.unlabeled[static_cast<size_t>(i)], -1);
    LinearHyperParams hp2 = params.base;
    hp2.seed = derive_seed(params.seed, "pu.step2." + std::to_string(iter));
    LinearModel mi = train_linear(step2, dim, hp2);

    int spy_hits = 0;
    for (int s : pu.spy_ids)
      if (margin(mi, ts.positives[static_cast<size_t>(s)].first) >= 0.0) ++spy_hits;
    PUIterationDiag diag;
    diag.iteration = iter;
    diag.n_negatives = static_cast<int>(negatives.size());
    diag.spy_recall = static_cast<double>(spy_hits) / static_cast<double>(n_spies);

    int added = 0;
    for (size_t i = 0; i < n_unl; ++i) {
      if (negatives.count(static_cast<int>(i))) continue;
      if (margin(mi, ts.unlabeled[i]) < 0.0) {
        negatives.insert(static_cast<int>(i));
        ++added;
      }
    }
    diag.n_added = added;
    pu.step2.push_back(diag);
    iterates.push_back(std::move(mi));
    if (added == 0) break;
  }

  pu.selected_iteration = 1;
  for (size_t k = 0; k < pu.step2.size(); ++k)
    if (pu.step2[k].spy_recall >= recall_target) pu.selected_iteration = static_cast<int>(k + 1);
  pu.model = iterates[static_cast<size_t>(pu.selected_iteration - 1)];
  pu.final_negatives.assign(negatives.begin(), negatives.end());
  pu.degenerate = negatives.size() == n_unl;
  return pu;
}

LinearModel train_binary_yesno(const DistantTrainingSet& ts, size_t dim,
                               const LinearHyperParams& hp) {
  std::vector<std::pair<SparseVector, int>> examples;
  examples.reserve(ts.positives.size());
  for (const auto& [x, pol] : ts.positives)
    examples.emplace_back(x, pol == Polarity::Yes ? 1 : -1);
  return train_linear(examples, dim, hp);  // throws on single-class input
}

Polarity classify_answer(std::string_view answer, const PUModel& pu, const LinearModel& binary,
                         const FeatureSpace& space, const FeatureConfig& cfg) {
  if (std::optional<Polarity> expl = detect_explicit_polarity(answer)) return *expl;
  SparseVector x = featurize(answer, space, /*strip=*/false, cfg);
  if (x.empty()) return Polarity::Neutral;  // no in-vocabulary evidence
  size_t dim = std::min(pu.model.weights.size(), binary.weights.size());
  if (!x.elems.empty() && static_cast<size_t>(x.elems.back().first) >= dim)
    throw std::invalid_argument("classify_answer: feature space does not match models");
  if (margin(pu.model, x) < 0.0) return Polarity::Neutral;
  return margin(binary, x) >= 0.0 ? Polarity::Yes : Polarity::No;
}

Polarity classify_answer(std::string_view answer, const AnswerModel& model) {
  return classify_answer(answer, model.pu, model.binary, model.space, model.fconfig);
}

}  // namespace pcqa

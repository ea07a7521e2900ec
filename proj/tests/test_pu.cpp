#include <doctest.h>

#include <set>

#include "pcqa/model_io.hpp"
#include "pcqa/pu.hpp"
#include "pcqa/util.hpp"

using namespace pcqa;

namespace {

// Distant set with controlled vocabulary: polar answers (yes and no families)
// versus neutrals with disjoint phrasing. Unlabeled mixes implicit polar
// answers and neutrals.
struct Fixture {
  FeatureSpace space;
  DistantTrainingSet ts;
  std::vector<int> neutral_unlabeled;  // indices into ts.unlabeled
  std::vector<std::string> unlabeled_text;
};

Fixture make_fixture(Rng& rng, int n_pos = 60, int n_unl = 60) {
  static const std::vector<std::string> yes_bodies = {"it works great", "it fits perfectly",
                                                      "works fine on mine", "it fits well"};
  static const std::vector<std::string> no_bodies = {"it does not work", "it will not fit",
                                                     "sadly it did not work"};
  static const std::vector<std::string> neutrals = {"i am not sure", "it depends on your setup",
                                                    "you should ask the seller", "never tried that"};
  Fixture f;
  std::vector<std::string> answers;
  for (int i = 0; i < n_pos; ++i) {
    bool yes = rng.below(2) == 0;
    answers.push_back((yes ? "Yes, " : "No, ") +
                      (yes ? yes_bodies[rng.below(yes_bodies.size())] : no_bodies[rng.below(no_bodies.size())]));
  }
  std::vector<std::pair<std::string, bool>> unl;  // text, is_neutral
  for (int i = 0; i < n_unl; ++i) {
    if (i % 2 == 0) {
      unl.emplace_back(neutrals[rng.below(neutrals.size())], true);
    } else {
      bool yes = rng.below(2) == 0;
      unl.emplace_back(yes ? yes_bodies[rng.below(yes_bodies.size())]
                           : no_bodies[rng.below(no_bodies.size())],
                       false);
    }
  }
  for (auto& [text, neutral] : unl) answers.push_back(text);
  f.ts = build_distant_training_set(answers, f.space);
  f.space.freeze();
  for (size_t i = 0; i < unl.size(); ++i) {
    f.unlabeled_text.push_back(unl[i].first);
    if (unl[i].second) f.neutral_unlabeled.push_back(static_cast<int>(i));
  }
  return f;
}

PUParams fast_params(uint64_t seed) {
  PUParams p;
  p.seed = seed;
  p.base.epochs = 20;
  return p;
}

}  // namespace

TEST_SUITE("pu") {
  TEST_CASE("reliable negatives stay within the true neutrals on a separable fixture") {
    Rng rng(17);
    Fixture f = make_fixture(rng);
    PUModel pu = train_pu(f.ts, f.space.size(), fast_params(11));
    std::set<int> neutral(f.neutral_unlabeled.begin(), f.neutral_unlabeled.end());
    for (int id : pu.reliable_negatives) CHECK(neutral.count(id) == 1);
    // and the final model separates the two groups exactly
    for (size_t i = 0; i < f.ts.unlabeled.size(); ++i) {
      bool is_neutral = neutral.count(static_cast<int>(i)) == 1;
      double m = margin(pu.model, f.ts.unlabeled[i]);
      CHECK((is_neutral ? m < 0.0 : m >= 0.0));
    }
  }

  TEST_CASE("spy_fraction 0 and tiny inputs are preconditions") {
    Rng rng(19);
    Fixture f = make_fixture(rng);
    PUParams p = fast_params(1);
    p.spy_fraction = 0.0;
    CHECK_THROWS_AS(train_pu(f.ts, f.space.size(), p), std::invalid_argument);

    DistantTrainingSet tiny;
    for (int i = 0; i < 5; ++i) tiny.positives.emplace_back(f.ts.positives[0]);
    tiny.unlabeled = f.ts.unlabeled;
    CHECK_THROWS_AS(train_pu(tiny, f.space.size(), fast_params(1)), std::invalid_argument);
  }

  TEST_CASE("same seed gives identical negatives and weights; different seed may differ") {
    Rng rng(23);
    Fixture f = make_fixture(rng);
    PUModel a = train_pu(f.ts, f.space.size(), fast_params(7));
    PUModel b = train_pu(f.ts, f.space.size(), fast_params(7));
    CHECK(a.reliable_negatives == b.reliable_negatives);
    CHECK(a.final_negatives == b.final_negatives);
    CHECK(a.spy_ids == b.spy_ids);
    CHECK(a.spy_threshold == b.spy_threshold);
    REQUIRE(a.model.weights.size() == b.model.weights.size());
    for (size_t i = 0; i < a.model.weights.size(); ++i)
      CHECK(a.model.weights[i] == b.model.weights[i]);
  }

  TEST_CASE("spy containment and negative-set monotonicity over many runs") {
    Rng rng(29);
    for (int trial = 0; trial < 1000; ++trial) {
      Fixture f = make_fixture(rng, 24, 24);
      PUParams p = fast_params(derive_seed(1000, std::to_string(trial)));
      p.base.epochs = 6;
      PUModel pu = train_pu(f.ts, f.space.size(), p);

      // spies index positives; negatives index unlabeled; each within range,
      // sorted, unique
      std::set<int> spy_set(pu.spy_ids.begin(), pu.spy_ids.end());
      CHECK(spy_set.size() == pu.spy_ids.size());
      for (int s : pu.spy_ids) CHECK((0 <= s && s < static_cast<int>(f.ts.positives.size())));
      std::set<int> rn(pu.reliable_negatives.begin(), pu.reliable_negatives.end());
      CHECK(rn.size() == pu.reliable_negatives.size());
      for (int id : pu.reliable_negatives)
        CHECK((0 <= id && id < static_cast<int>(f.ts.unlabeled.size())));

      // the negative set only grows across step-2 iterations
      std::set<int> fn(pu.final_negatives.begin(), pu.final_negatives.end());
      for (int id : pu.reliable_negatives) CHECK(fn.count(id) == 1);
      long long expect = static_cast<long long>(pu.reliable_negatives.size());
      for (size_t k = 0; k < pu.step2.size(); ++k) {
        CHECK(pu.step2[k].n_negatives == expect);
        CHECK(pu.step2[k].n_added >= 0);
        expect += pu.step2[k].n_added;
      }
      CHECK(expect == static_cast<long long>(pu.final_negatives.size()));
      CHECK(pu.selected_iteration >= 1);
      CHECK(pu.selected_iteration <= static_cast<int>(pu.step2.size()));
    }
  }

  TEST_CASE("binary model separates the yes and no families") {
    Rng rng(31);
    Fixture f = make_fixture(rng);
    LinearHyperParams hp;
    hp.seed = 3;
    LinearModel bin = train_binary_yesno(f.ts, f.space.size(), hp);
    const FeatureSpace& space = f.space;
    CHECK(margin(bin, featurize("it works great", space, false)) > 0.0);
    CHECK(margin(bin, featurize("it does not work", space, false)) < 0.0);

    DistantTrainingSet yes_only;
    for (const auto& [x, pol] : f.ts.positives)
      if (pol == Polarity::Yes) yes_only.positives.emplace_back(x, pol);
    yes_only.unlabeled = f.ts.unlabeled;
    CHECK_THROWS_AS(train_binary_yesno(yes_only, f.space.size(), hp), std::invalid_argument);
  }

  TEST_CASE("cascade follows explicit, PU, then binary") {
    Rng rng(37);
    Fixture f = make_fixture(rng);
    PUModel pu = train_pu(f.ts, f.space.size(), fast_params(5));
    LinearHyperParams hp;
    hp.seed = 9;
    LinearModel bin = train_binary_yesno(f.ts, f.space.size(), hp);

    CHECK(classify_answer("No.", pu, bin, f.space) == Polarity::No);
    CHECK(classify_answer("Yes, whatever the models say.", pu, bin, f.space) == Polarity::Yes);
    CHECK(classify_answer("I am not sure.", pu, bin, f.space) == Polarity::Neutral);
    CHECK(classify_answer("It works great.", pu, bin, f.space) == Polarity::Yes);
    CHECK(classify_answer("It will not fit.", pu, bin, f.space) == Polarity::No);
    // out-of-vocabulary text has no evidence
    CHECK(classify_answer("zebra quartz flux", pu, bin, f.space) == Polarity::Neutral);
    CHECK(classify_answer("", pu, bin, f.space) == Polarity::Neutral);
  }

  TEST_CASE("cascade short-circuit is invariant under arbitrary model weights") {
    Rng rng(41);
    FeatureSpace space;
    featurize("it works fine today", space, false);
    featurize("not sure about that", space, false);
    space.freeze();
    static const std::vector<std::string> polar_prefix = {"Yes", "No"};
    static const std::vector<std::string> tails = {"", ", it works fine", " not sure about that",
                                                   "!!!", " zebra"};
    for (int trial = 0; trial < 1000; ++trial) {
      PUModel pu;
      pu.model.weights.resize(space.size());
      LinearModel bin;
      bin.weights.resize(space.size());
      for (size_t i = 0; i < space.size(); ++i) {
        pu.model.weights[i] = rng.unit() * 20.0 - 10.0;
        bin.weights[i] = rng.unit() * 20.0 - 10.0;
      }
      pu.model.bias = rng.unit() * 10.0 - 5.0;
      bin.bias = rng.unit() * 10.0 - 5.0;
      bool yes = rng.below(2) == 0;
      std::string answer = polar_prefix[yes ? 0 : 1] + tails[rng.below(tails.size())];
      CHECK(classify_answer(answer, pu, bin, space) == (yes ? Polarity::Yes : Polarity::No));
    }
  }

  TEST_CASE("totality: every answer maps to exactly one of the three classes") {
    Rng rng(43);
    Fixture f = make_fixture(rng);
    PUModel pu = train_pu(f.ts, f.space.size(), fast_params(2));
    LinearHyperParams hp;
    LinearModel bin = train_binary_yesno(f.ts, f.space.size(), hp);
    static const std::vector<std::string> pool = {"yes", "no", "it", "works", "not", "sure", "???",
                                                  "zebra", ""};
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<std::string> toks;
      for (size_t i = rng.below(5); i > 0; --i) toks.push_back(pool[rng.below(pool.size())]);
      Polarity p = classify_answer(join(toks, " "), pu, bin, f.space);
      CHECK((p == Polarity::Yes || p == Polarity::No || p == Polarity::Neutral));
    }
  }

  TEST_CASE("model file round-trips byte for byte with identical behavior") {
    Rng rng(47);
    Fixture f = make_fixture(rng);
    std::vector<std::string> answers;
    answers.insert(answers.end(), {"Yes, it works great", "Yes, it fits well", "No, it does not work",
                                   "No, it will not fit"});
    for (int i = 0; i < 10; ++i) {
      answers.push_back("Yes, it works great " + std::to_string(i));
      answers.push_back("No, it does not work " + std::to_string(i));
      answers.push_back("i am not sure " + std::to_string(i));
      answers.push_back("it works great " + std::to_string(i));
    }
    PUParams pu_params;
    pu_params.base.epochs = 15;
    LinearHyperParams bin_params;
    bin_params.epochs = 15;
    AnswerModel model = train_answer_model(answers, 99, pu_params, bin_params);
    std::string text = save_answer_model(model);
    AnswerModel loaded = load_answer_model(text);
    CHECK(save_answer_model(loaded) == text);
    REQUIRE(loaded.space.size() == model.space.size());
    REQUIRE(loaded.pu.model.weights.size() == model.pu.model.weights.size());
    for (size_t i = 0; i < model.pu.model.weights.size(); ++i)
      CHECK(loaded.pu.model.weights[i] == model.pu.model.weights[i]);
    for (size_t i = 0; i < model.binary.weights.size(); ++i)
      CHECK(loaded.binary.weights[i] == model.binary.weights[i]);
    for (const std::string& a : {"It works great.", "it will not fit", "no idea, never tried",
                                 "Yes.", "No way."})
      CHECK(classify_answer(a, loaded) == classify_answer(a, model));
  }

  TEST_CASE("version mismatch is rejected") {
    CHECK_THROWS_WITH(static_cast<void>(load_answer_model("compatminer-model v999\n")),
                      doctest::Contains("unsupported header"));
    CHECK_THROWS_AS(static_cast<void>(load_answer_model("garbage")), std::runtime_error);
  }
}

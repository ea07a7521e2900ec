#include <doctest.h>

#include "pcqa/features.hpp"
#include "pcqa/util.hpp"

using namespace pcqa;

namespace {

std::set<std::string> feature_names(const SparseVector& v, const FeatureSpace& space) {
  std::set<std::string> out;
  for (auto [id, w] : v.elems) out.insert(space.names[static_cast<size_t>(id)]);
  return out;
}

}  // namespace

TEST_SUITE("features") {
  TEST_CASE("explicit polarity detection follows the first normalized token") {
    CHECK(detect_explicit_polarity("Yes, it works.") == Polarity::Yes);
    CHECK(detect_explicit_polarity("No.") == Polarity::No);
    CHECK(detect_explicit_polarity("It works.") == std::nullopt);
    CHECK(detect_explicit_polarity("Yesterday I tried it") == std::nullopt);
    CHECK(detect_explicit_polarity("") == std::nullopt);
    CHECK(detect_explicit_polarity("  \t ") == std::nullopt);
    CHECK(detect_explicit_polarity("YES!!!") == Polarity::Yes);
    CHECK(detect_explicit_polarity("\"No\", sorry") == Polarity::No);
  }

  TEST_CASE("answer tokens strip edge punctuation but keep inner") {
    CHECK(answer_tokens("It works.") == std::vector<std::string>{"it", "works"});
    CHECK(answer_tokens("v10.0, (really)") == std::vector<std::string>{"v10.0", "really"});
    CHECK(answer_tokens("--- ...") == std::vector<std::string>{});
  }

  TEST_CASE("bigrams carry boundary markers") {
    FeatureSpace space;
    SparseVector v = featurize("it works well", space, false);
    CHECK(feature_names(v, space) ==
          std::set<std::string>{"<s> it", "it works", "works well", "well </s>"});
    for (auto [id, w] : v.elems) CHECK(w == 1.0);
  }

  TEST_CASE("empty answer gives an empty vector even unfrozen") {
    FeatureSpace space;
    CHECK(featurize("", space, false).empty());
    CHECK(featurize("?!", space, true).empty());
    CHECK(space.size() == 0);
  }

  TEST_CASE("stripping the leading yes reproduces the implicit answer's features") {
    FeatureSpace space;
    SparseVector stripped = featurize("Yes, it works.", space, true);
    SparseVector implicit = featurize("It works.", space, false);
    CHECK(stripped == implicit);
    CHECK(feature_names(stripped, space) == std::set<std::string>{"<s> it", "it works", "works </s>"});
  }

  TEST_CASE("distant-label consistency holds for random token strings") {
    static const std::vector<std::string> pool = {"it",  "works", "fine", "not", "sure",
                                                  "ok",  "great", "fits", "the", "case"};
    Rng rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<std::string> toks;
      size_t n = rng.below(6);
      for (size_t i = 0; i < n; ++i) {
        std::string t = pool[rng.below(pool.size())];
        if (rng.below(3) == 0) t[0] = static_cast<char>(std::toupper(t[0]));
        if (rng.below(4) == 0) t += ",";
        toks.push_back(t);
      }
      std::string s = join(toks, " ");
      FeatureSpace space;
      SparseVector a = featurize("Yes, " + s, space, true);
      SparseVector b = featurize(s, space, false);
      CHECK(a == b);
    }
  }

  TEST_CASE("frozen space drops unknown bigrams, unfrozen grows") {
    FeatureSpace space;
    featurize("it works", space, false);
    size_t before = space.size();
    space.freeze();
    SparseVector v = featurize("it works badly", space, false);
    CHECK(space.size() == before);
    CHECK(feature_names(v, space) == std::set<std::string>{"<s> it", "it works"});

    const FeatureSpace& cspace = space;
    SparseVector cv = featurize("it works badly", cspace, false);
    CHECK(cv == v);
  }

  TEST_CASE("unigram augmentation adds tokens without markers") {
    FeatureSpace space;
    FeatureConfig cfg{.unigrams = true};
    SparseVector v = featurize("it works", space, false, cfg);
    CHECK(feature_names(v, space) ==
          std::set<std::string>{"<s> it", "it works", "works </s>", "it", "works"});
  }

  TEST_CASE("distant training set splits on the explicit first token") {
    FeatureSpace space;
    DistantTrainingSet ts =
        build_distant_training_set({"Yes, it works.", "It works.", "I am not sure."}, space);
    REQUIRE(ts.positives.size() == 1);
    CHECK(ts.positives[0].second == Polarity::Yes);
    CHECK(ts.unlabeled.size() == 2);
    // the stripped positive equals the implicit answer's features
    CHECK(ts.positives[0].first == ts.unlabeled[0]);
  }

  TEST_CASE("large balanced corpus splits 6000/6000") {
    std::vector<std::string> answers;
    for (int i = 0; i < 3000; ++i) answers.push_back("Yes, it works " + std::to_string(i % 7));
    for (int i = 0; i < 3000; ++i) answers.push_back("No, it does not " + std::to_string(i % 7));
    for (int i = 0; i < 6000; ++i) answers.push_back("maybe number " + std::to_string(i % 11));
    FeatureSpace space;
    DistantTrainingSet ts = build_distant_training_set(answers, space);
    CHECK(ts.positives.size() == 6000);
    CHECK(ts.unlabeled.size() == 6000);
  }

  TEST_CASE("empty input gives empty sets") {
    FeatureSpace space;
    DistantTrainingSet ts = build_distant_training_set({}, space);
    CHECK(ts.positives.empty());
    CHECK(ts.unlabeled.empty());
  }
}

#include <doctest.h>

#include <cmath>

#include "emocap/classifier.hpp"
#include "emocap/error.hpp"
#include "support.hpp"

using namespace emocap;
using E = Emotion;

namespace {

Corpus FourDocs() {
  return testing::MakeCorpus({{"p1", E::kAwe, "sky bright"},
                              {"p2", E::kAwe, "sky calm"},
                              {"p3", E::kFear, "dark sky"},
                              {"p4", E::kFear, "dark night"}});
}

NaiveBayesOptions Unigrams() {
  NaiveBayesOptions o;
  o.orders = {1};
  return o;
}

}  // namespace

TEST_CASE("naive Bayes: hand-computed posteriors") {
  // vocabulary {sky, bright, calm, dark, night}, 4 tokens per class, alpha 1
  // P(w|c) = (count + 1) / (4 + 5), priors 1/2
  const auto m = NaiveBayesModel::Train(FourDocs(), Unigrams());
  CHECK(m.vocabulary_size() == 5);
  CHECK(m.log_priors()[Index(E::kAwe)] == doctest::Approx(std::log(0.5)));
  CHECK(m.log_priors()[Index(E::kSadness)] == -INFINITY);

  const auto sky = m.LogLikelihoods("sky");
  REQUIRE(sky.has_value());
  CHECK(std::abs((*sky)[Index(E::kAwe)] - std::log(3.0 / 9.0)) <= 1e-12);
  CHECK(std::abs((*sky)[Index(E::kFear)] - std::log(2.0 / 9.0)) <= 1e-12);
  CHECK_FALSE(m.LogLikelihoods("moon").has_value());

  // "dark sky": awe 1/9 * 3/9 = 3/81, fear 3/9 * 2/9 = 6/81
  const auto p = m.Predict("dark sky");
  CHECK(std::abs(p[E::kAwe] - 1.0 / 3.0) <= 1e-9);
  CHECK(std::abs(p[E::kFear] - 2.0 / 3.0) <= 1e-9);
  CHECK(p[E::kSadness] == 0.0);

  // out-of-vocabulary words are skipped: "dark moon" scores as "dark"
  const auto q = m.Predict("dark moon");
  CHECK(std::abs(q[E::kFear] - 0.75) <= 1e-9);
}

TEST_CASE("naive Bayes: bigrams join the vocabulary") {
  const auto m = NaiveBayesModel::Train(FourDocs());
  // 5 unigrams + 4 bigrams, 6 grams per class, alpha 1: denominator 6 + 9
  CHECK(m.vocabulary_size() == 9);
  CHECK(m.NGrams("dark sky") == std::vector<std::string>{"dark", "sky", "dark sky"});
  const auto ll = m.LogLikelihoods("dark sky");
  REQUIRE(ll.has_value());
  CHECK(std::abs((*ll)[Index(E::kFear)] - std::log(2.0 / 15.0)) <= 1e-12);
  CHECK(std::abs((*ll)[Index(E::kAwe)] - std::log(1.0 / 15.0)) <= 1e-12);
  // dark: fear 3/15 awe 1/15; sky: fear 2/15 awe 3/15; "dark sky": fear 2/15 awe 1/15
  const double fear = 3.0 * 2.0 * 2.0, awe = 1.0 * 3.0 * 1.0;
  CHECK(std::abs(m.Predict("dark sky")[E::kFear] - fear / (fear + awe)) <= 1e-9);
}

TEST_CASE("naive Bayes: all-OOV input returns the priors") {
  const auto c = testing::MakeCorpus({{"p1", E::kAwe, "sky"},
                                      {"p2", E::kAwe, "sun"},
                                      {"p3", E::kAwe, "light"},
                                      {"p4", E::kFear, "dark"}});
  const auto m = NaiveBayesModel::Train(c);
  const auto p = m.Predict("zebra quantum");
  CHECK(std::abs(p[E::kAwe] - 0.75) <= 1e-12);
  CHECK(std::abs(p[E::kFear] - 0.25) <= 1e-12);
  const auto empty = m.Predict("");
  CHECK(empty.probs() == p.probs());
}

TEST_CASE("naive Bayes: separable corpus is classified perfectly") {
  std::vector<testing::Row> rows;
  const char* words[] = {"giggle", "vast", "cozy", "thrill", "rage",
                         "rotten", "dread", "grief", "shapes"};
  int id = 0;
  for (std::size_t e = 0; e < kNumEmotions; ++e) {
    for (int k = 0; k < 4; ++k) {
      rows.push_back({"p" + std::to_string(id++), kAllEmotions[e],
                      std::string(words[e]) + " " + words[e] + " the painting"});
    }
  }
  const auto c = testing::MakeCorpus(rows);
  const auto m = NaiveBayesModel::Train(c);
  const auto ev = EvaluateClassifier(m, c);
  CHECK(ev.accuracy == 1.0);
  CHECK(ev.evaluated == 36);
  CHECK(ev.coarse_accuracy == 1.0);
  CHECK(ev.coarse_evaluated == 32);
  for (std::size_t g = 0; g < kNumEmotions; ++g) CHECK(ev.confusion[g][g] == 4);
}

TEST_CASE("naive Bayes: a duplicated training caption predicts its label") {
  const auto c = testing::MakeCorpus({{"p1", E::kSadness, "the man weeps alone"},
                                      {"p2", E::kSadness, "the man weeps alone"},
                                      {"p3", E::kAwe, "the man stands tall"},
                                      {"p4", E::kFear, "a dark alley"}});
  const auto m = NaiveBayesModel::Train(c);
  CHECK(m.Predict("the man weeps alone").Argmax() == E::kSadness);
}

TEST_CASE("naive Bayes: posteriors are distributions") {
  const auto c = LoadCorpus(testing::Fixture("corpus_200.csv"));
  const auto m = NaiveBayesModel::Train(c);
  for (const auto& ann : c.annotations()) {
    const auto p = m.Predict(ann.utterance);
    double sum = 0.0;
    for (double v : p.probs()) {
      CHECK(v >= 0.0);
      sum += v;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-9);
  }
}

TEST_CASE("naive Bayes: JSON round-trip") {
  const auto c = LoadCorpus(testing::Fixture("corpus_200.csv"));
  NaiveBayesOptions o;
  o.alpha = 0.5;
  const auto m = NaiveBayesModel::Train(c, o);
  const auto json = m.ToJson();
  const auto back = NaiveBayesModel::FromJson(json);
  CHECK(back.ToJson() == json);
  CHECK(back.alpha() == 0.5);
  CHECK(back.orders() == o.orders);
  for (const auto& ann : c.annotations()) {
    CHECK(back.Predict(ann.utterance).probs() == m.Predict(ann.utterance).probs());
  }
  testing::TempDir dir("nb");
  m.Save(dir / "m.json");
  CHECK(NaiveBayesModel::Load(dir / "m.json").ToJson() == json);
  CHECK_THROWS_AS(NaiveBayesModel::FromJson("[]"), DataError);
  CHECK_THROWS_AS(NaiveBayesModel::FromJson("{\"version\":\"emocap-nb/0\"}"), DataError);
}

TEST_CASE("naive Bayes: configuration errors") {
  NaiveBayesOptions bad;
  bad.alpha = 0.0;
  CHECK_THROWS_AS(NaiveBayesModel::Train(FourDocs(), bad), ConfigError);
  bad.alpha = 1.0;
  bad.orders = {0, 1};
  CHECK_THROWS_AS(NaiveBayesModel::Train(FourDocs(), bad), ConfigError);
  CHECK_THROWS_AS(NaiveBayesModel::Train(Corpus{}), DataError);
}

TEST_CASE("majority baseline") {
  const auto c = testing::MakeCorpus({{"p1", E::kFear, "a"},
                                      {"p1", E::kAwe, "b"},
                                      {"p2", E::kFear, "c"},
                                      {"p2", E::kAwe, "d"},
                                      {"p3", E::kSadness, "e"}});
  CHECK(MajorityEmotion(c) == E::kAwe);  // tie with fear goes to the earlier emotion
  CHECK(ConstantPredictorAccuracy(c, E::kAwe) == doctest::Approx(0.4));
  CHECK(ConstantPredictorAccuracy(c, E::kAnger) == 0.0);
}

TEST_CASE("evaluation is independent of the worker count") {
  const auto c = LoadCorpus(testing::Fixture("corpus_200.csv"));
  const auto split = AssignSplits(c, {0.8, 0.1, 0.1}, 3);
  const auto m = NaiveBayesModel::Train(split.Subset(Split::kTrain));
  const auto a = EvaluateClassifier(m, split.Subset(Split::kTest), 1);
  const auto b = EvaluateClassifier(m, split.Subset(Split::kTest), 4);
  CHECK(a.accuracy == b.accuracy);
  CHECK(a.confusion == b.confusion);
  CHECK(a.evaluated == 20);
}

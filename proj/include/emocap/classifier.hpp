#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emocap/corpus.hpp"

namespace emocap {

struct NaiveBayesOptions {
  double alpha = 1.0;
  std::set<int> orders = {1, 2};
};

/// Multinomial naive Bayes over word n-grams, nine emotion classes.
class NaiveBayesModel {
 public:
  using Counts = std::array<std::uint32_t, kNumEmotions>;

  static constexpr std::string_view kFormatVersion = "emocap-nb/1";

  /// Unsmoothed class priors, add-alpha smoothed n-gram likelihoods over the
  /// joint vocabulary. Throws DataError on an empty corpus.
  static NaiveBayesModel Train(const Corpus& train,
                               const NaiveBayesOptions& options = {});

  /// Class log-priors (-inf for classes never seen in training).
  const std::array<double, kNumEmotions>& log_priors() const { return log_priors_; }
  /// log P(ngram | class); nullopt when the n-gram is out of vocabulary.
  std::optional<std::array<double, kNumEmotions>> LogLikelihoods(
      std::string_view ngram) const;
  std::size_t vocabulary_size() const { return counts_.size(); }
  double alpha() const { return options_.alpha; }
  const std::set<int>& orders() const { return options_.orders; }

  /// Softmax-normalized posterior; out-of-vocabulary n-grams are ignored.
  EmotionDistribution Predict(std::string_view utterance) const;

  /// N-grams (space-joined tokens) of the configured orders.
  std::vector<std::string> NGrams(std::string_view utterance) const;

  std::string ToJson() const;
  static NaiveBayesModel FromJson(std::string_view json);
  void Save(const std::filesystem::path& path) const;
  static NaiveBayesModel Load(const std::filesystem::path& path);

 private:
  void Finalize();

  NaiveBayesOptions options_;
  std::array<std::uint64_t, kNumEmotions> class_docs_{};
  std::array<std::uint64_t, kNumEmotions> class_tokens_{};
  std::unordered_map<std::string, Counts> counts_;
  std::array<double, kNumEmotions> log_priors_{};
  std::array<double, kNumEmotions> log_denominators_{};
};

struct ClassifierEvaluation {
  double accuracy = 0.0;
  std::array<std::array<std::size_t, kNumEmotions>, kNumEmotions> confusion{};  // [gold][predicted]
  double coarse_accuracy = 0.0;  // over gold labels other than something-else
  std::size_t evaluated = 0;
  std::size_t coarse_evaluated = 0;
};

/// Fine and coarse (sentiment-group) accuracy on every test annotation.
ClassifierEvaluation EvaluateClassifier(const NaiveBayesModel& model,
                                        const Corpus& test, std::size_t workers = 1);

/// Accuracy of always predicting `label` on `test`.
double ConstantPredictorAccuracy(const Corpus& test, Emotion label);
/// Most frequent emotion in `corpus`; ties go to the earlier emotion.
Emotion MajorityEmotion(const Corpus& corpus);

}  // namespace emocap

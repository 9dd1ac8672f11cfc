#include "emocap/classifier.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "emocap/error.hpp"
#include "emocap/parallel.hpp"
#include "emocap/textproc.hpp"
#include "json.hpp"

namespace emocap {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

std::vector<std::string> NaiveBayesModel::NGrams(std::string_view utterance) const {
  const auto tokens = Tokenize(utterance);
  std::vector<std::string> out;
  for (int n : options_.orders) {
    const auto order = static_cast<std::size_t>(n);
    if (order == 0 || tokens.size() < order) continue;
    for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
      std::string gram = tokens[i];
      for (std::size_t k = 1; k < order; ++k) {
        gram.push_back(' ');
        gram += tokens[i + k];
      }
      out.push_back(std::move(gram));
    }
  }
  return out;
}

NaiveBayesModel NaiveBayesModel::Train(const Corpus& train,
                                       const NaiveBayesOptions& options) {
  if (!(options.alpha > 0.0)) throw ConfigError("naive Bayes alpha must be positive");
  if (options.orders.empty() || *options.orders.begin() < 1) {
    throw ConfigError("n-gram orders must be positive");
  }
  if (train.annotations().empty()) {
    throw DataError("cannot train naive Bayes on an empty split");
  }
  NaiveBayesModel model;
  model.options_ = options;
  for (const auto& ann : train.annotations()) {
    const std::size_t c = Index(ann.emotion);
    ++model.class_docs_[c];
    for (auto& gram : model.NGrams(ann.utterance)) {
      ++model.counts_[std::move(gram)][c];
      ++model.class_tokens_[c];
    }
  }
  model.Finalize();
  return model;
}

void NaiveBayesModel::Finalize() {
  std::uint64_t docs = 0;
  for (auto d : class_docs_) docs += d;
  const double vocab = static_cast<double>(counts_.size());
  for (std::size_t c = 0; c < kNumEmotions; ++c) {
    log_priors_[c] = class_docs_[c] == 0
                         ? kNegInf
                         : std::log(static_cast<double>(class_docs_[c]) /
                                    static_cast<double>(docs));
    log_denominators_[c] =
        std::log(static_cast<double>(class_tokens_[c]) + options_.alpha * vocab);
  }
}

std::optional<std::array<double, kNumEmotions>> NaiveBayesModel::LogLikelihoods(
    std::string_view ngram) const {
  const auto it = counts_.find(std::string(ngram));
  if (it == counts_.end()) return std::nullopt;
  std::array<double, kNumEmotions> out{};
  for (std::size_t c = 0; c < kNumEmotions; ++c) {
    out[c] = std::log(static_cast<double>(it->second[c]) + options_.alpha) -
             log_denominators_[c];
  }
  return out;
}

EmotionDistribution NaiveBayesModel::Predict(std::string_view utterance) const {
  std::array<double, kNumEmotions> score = log_priors_;
  for (const auto& gram : NGrams(utterance)) {
    const auto it = counts_.find(gram);
    if (it == counts_.end()) continue;
    for (std::size_t c = 0; c < kNumEmotions; ++c) {
      score[c] += std::log(static_cast<double>(it->second[c]) + options_.alpha) -
                  log_denominators_[c];
    }
  }
  double max = kNegInf;
  for (double s : score) max = std::max(max, s);
  std::array<double, kNumEmotions> probs{};
  double sum = 0.0;
  for (std::size_t c = 0; c < kNumEmotions; ++c) {
    probs[c] = score[c] == kNegInf ? 0.0 : std::exp(score[c] - max);
    sum += probs[c];
  }
  for (double& p : probs) p /= sum;
  return EmotionDistribution(probs);
}

std::string NaiveBayesModel::ToJson() const {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [gram, per_class] : counts_) {
    counts[gram] = std::vector<std::uint32_t>(per_class.begin(), per_class.end());
  }
  nlohmann::json doc = {
      {"version", kFormatVersion},
      {"alpha", options_.alpha},
      {"orders", std::vector<int>(options_.orders.begin(), options_.orders.end())},
      {"class_docs", class_docs_},
      {"class_tokens", class_tokens_},
      {"counts", std::move(counts)},
  };
  return doc.dump() + "\n";
}

NaiveBayesModel NaiveBayesModel::FromJson(std::string_view json) {
  NaiveBayesModel model;
  try {
    const auto doc = nlohmann::json::parse(json);
    if (doc.at("version").get<std::string>() != kFormatVersion) {
      throw DataError("unsupported naive Bayes model version");
    }
    model.options_.alpha = doc.at("alpha").get<double>();
    const auto orders = doc.at("orders").get<std::vector<int>>();
    model.options_.orders = std::set<int>(orders.begin(), orders.end());
    model.class_docs_ = doc.at("class_docs").get<std::array<std::uint64_t, kNumEmotions>>();
    model.class_tokens_ =
        doc.at("class_tokens").get<std::array<std::uint64_t, kNumEmotions>>();
    for (const auto& [gram, per_class] : doc.at("counts").items()) {
      model.counts_.emplace(gram, per_class.get<Counts>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed naive Bayes model: ") + e.what());
  }
  if (!(model.options_.alpha > 0.0)) throw DataError("model alpha must be positive");
  model.Finalize();
  return model;
}

void NaiveBayesModel::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << ToJson();
}

NaiveBayesModel NaiveBayesModel::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJson(buffer.str());
}

ClassifierEvaluation EvaluateClassifier(const NaiveBayesModel& model,
                                        const Corpus& test, std::size_t workers) {
  const auto& anns = test.annotations();
  if (anns.empty()) throw DataError("cannot evaluate on an empty split");
  const auto predicted = ParallelMap(anns.size(), workers, [&](std::size_t i) {
    return model.Predict(anns[i].utterance).Argmax();
  });
  ClassifierEvaluation eval;
  std::size_t correct = 0, coarse_correct = 0;
  for (std::size_t i = 0; i < anns.size(); ++i) {
    const Emotion gold = anns[i].emotion;
    const Emotion guess = predicted[i];
    ++eval.confusion[Index(gold)][Index(guess)];
    correct += gold == guess;
    if (gold != Emotion::kSomethingElse) {
      ++eval.coarse_evaluated;
      coarse_correct += GroupOf(gold) == GroupOf(guess);
    }
  }
  eval.evaluated = anns.size();
  eval.accuracy = static_cast<double>(correct) / static_cast<double>(anns.size());
  if (eval.coarse_evaluated > 0) {
    eval.coarse_accuracy =
        static_cast<double>(coarse_correct) / static_cast<double>(eval.coarse_evaluated);
  }
  return eval;
}

double ConstantPredictorAccuracy(const Corpus& test, Emotion label) {
  if (test.annotations().empty()) return 0.0;
  return static_cast<double>(GlobalEmotionCounts(test)[Index(label)]) /
         static_cast<double>(test.annotations().size());
}

Emotion MajorityEmotion(const Corpus& corpus) {
  const auto counts = GlobalEmotionCounts(corpus);
  std::size_t best = 0;
  for (std::size_t c = 1; c < kNumEmotions; ++c) {
    if (counts[c] > counts[best]) best = c;
  }
  return static_cast<Emotion>(best);
}

}  // namespace emocap

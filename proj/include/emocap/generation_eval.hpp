#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emocap/classifier.hpp"
#include "emocap/corpus.hpp"
#include "emocap/lexicons.hpp"

namespace emocap {

using TokenSeq = std::vector<std::string>;

/// One generated utterance per artwork id. Sorted by id, so every metric
/// below is independent of the order generations were produced in.
struct GenerationSet {
  std::map<std::string, std::string> utterances;
};

/// CSV `painting,utterance`; a repeated painting is a DataError.
GenerationSet LoadGenerations(const std::filesystem::path& path);

/// Artwork id → all of its annotated utterances.
using ReferenceSet = std::map<std::string, std::vector<std::string>>;
ReferenceSet CollectReferences(const Corpus& corpus);

struct Segment {
  TokenSeq hypothesis;
  std::vector<TokenSeq> references;
};

/// Tokenized (hypothesis, references) pairs in artwork-id order. Throws
/// DataError naming the first artwork that has no references.
std::vector<Segment> PairSegments(const GenerationSet& generations,
                                  const ReferenceSet& references);

/// Corpus-level BLEU-n, unsmoothed.
double CorpusBleu(std::span<const Segment> segments, int n);

std::size_t LcsLength(std::span<const std::string> a, std::span<const std::string> b);

inline constexpr double kRougeBeta = 1.2;
double RougeLPair(std::span<const std::string> hypothesis,
                  std::span<const std::string> reference, double beta = kRougeBeta);
/// Per-segment max over references, averaged over segments.
double RougeL(std::span<const Segment> segments, double beta = kRougeBeta,
              std::size_t workers = 1);

struct MeteorParams {
  double alpha = 0.9;
  double beta = 3.0;
  double gamma = 0.5;
};

struct MeteorAlignment {
  std::size_t matches = 0;
  std::size_t chunks = 0;
  double precision = 0.0;
  double recall = 0.0;
  double fmean = 0.0;
  double penalty = 0.0;
  double score = 0.0;
  std::vector<std::optional<std::size_t>> mapping;  // hypothesis position → reference position
};

/// Exact stage then Porter-stem stage. Each stage keeps the earlier stage's
/// alignment and searches for the completion with the most matches, then the
/// fewest chunks, then the smallest mapping. The search is capped at 200k
/// nodes, after which the best alignment found so far is used.
MeteorAlignment MeteorPair(std::span<const std::string> hypothesis,
                           std::span<const std::string> reference,
                           const MeteorParams& params = {});
double Meteor(std::span<const Segment> segments, const MeteorParams& params = {},
              std::size_t workers = 1);

struct LcsNoveltyResult {
  double max_lcs = 0.0;
  double mean_lcs = 0.0;
  std::size_t generations = 0;
  std::size_t sampled = 0;  // training utterances actually compared against
};

/// Seeded subsample of `training` (clamped to its size), then per generation
/// the max and mean LCS length against the sample, averaged over
/// generations. Throws DataError when either side is empty and ConfigError
/// when subsample is 0.
LcsNoveltyResult LcsNovelty(std::span<const TokenSeq> generations,
                            std::span<const TokenSeq> training, std::size_t subsample,
                            std::uint64_t seed, std::size_t workers = 1);

using EmotionPredictor =
    std::function<Emotion(std::string_view artwork_id, std::string_view utterance)>;

/// Fraction of strong-majority generation artworks whose predicted emotion
/// equals the majority emotion. Throws DataError when no artwork qualifies or
/// a generation's artwork is not in `corpus`.
double EmoAlign(const GenerationSet& generations, const Corpus& corpus,
                const EmotionPredictor& predictor);
double EmoAlign(const GenerationSet& generations, const Corpus& corpus,
                const NaiveBayesModel& model);

/// Fraction of generations containing a simile pattern; 0 when empty.
double SimilesPercent(const GenerationSet& generations, const SimileLemmaList& list);

inline constexpr double kKlEpsilon = 1e-8;
/// KL(p ‖ q) in nats; zero entries of q are replaced by kKlEpsilon.
double KlDivergence(const EmotionDistribution& p, const EmotionDistribution& q);

using PredictionSet = std::map<std::string, EmotionDistribution>;

/// CSV `painting` + 9 probability columns in fixed emotion order. Rows whose
/// sum is within 1e-4 of 1 are renormalized; others are a DataError.
PredictionSet LoadPredictions(const std::filesystem::path& path);

struct ImagePredictionEval {
  double mean_kl = 0.0;
  double dominant_accuracy = 0.0;  // 0 when nothing qualifies
  std::size_t evaluated = 0;
  std::size_t qualifying = 0;
};

/// Evaluates every artwork of `corpus`; a missing prediction is a DataError.
ImagePredictionEval EvaluateImagePredictions(const PredictionSet& predictions,
                                             const Corpus& corpus);

struct MetricReport {
  std::map<std::string, std::optional<double>> values;
  std::map<std::string, std::size_t> counts;
  std::map<std::string, std::string> config;
};

/// BLEU-1..4, METEOR, ROUGE-L, max-LCS, mean-LCS, Emo-Align, Similes-percent.
const std::vector<std::string>& MetricNames();

struct EvaluationOptions {
  std::size_t lcs_subsample = 20000;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  MeteorParams meteor;
  double rouge_beta = kRougeBeta;
};

/// The full table. References are every annotation of each generation's
/// artwork in `corpus`. Emo-Align is left empty (nullopt, count 0) when no
/// generation artwork has a strong majority.
MetricReport EvaluateGenerations(const GenerationSet& generations, const Corpus& corpus,
                                 std::span<const TokenSeq> training,
                                 const NaiveBayesModel& model,
                                 const SimileLemmaList& similes,
                                 const EvaluationOptions& options = {});

}  // namespace emocap

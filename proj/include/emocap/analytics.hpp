#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emocap/affect.hpp"
#include "emocap/corpus.hpp"
#include "emocap/textproc.hpp"

namespace emocap {

/// Tokenize, tag and lemmatize every annotation (annotation order).
std::vector<TokenizedUtterance> AnalyzeUtterances(const Corpus& corpus,
                                                  const TaggerModel& tagger,
                                                  std::size_t workers = 1);

/// Per-category means; `words` is only meaningful for per-caption stats.
struct PosMeans {
  double nouns = 0.0;
  double pronouns = 0.0;
  double adjectives = 0.0;
  double adpositions = 0.0;
  double verbs = 0.0;
};

struct CaptionStats {
  double words = 0.0;
  PosMeans pos;
  std::size_t captions = 0;
};

CaptionStats ComputeCaptionStats(const std::vector<TokenizedUtterance>& tagged);
CaptionStats ComputeCaptionStats(const Corpus& corpus, const TaggerModel& tagger,
                                 std::size_t workers = 1);

struct ImageDiversityStats {
  PosMeans unique;      // distinct lemmas per category, averaged over artworks
  PosMeans normalized;  // each artwork's counts divided by its caption count
  std::size_t artworks = 0;
};

ImageDiversityStats ComputeImageDiversity(
    const Corpus& corpus, const std::vector<TokenizedUtterance>& tagged);
ImageDiversityStats ComputeImageDiversity(const Corpus& corpus,
                                          const TaggerModel& tagger,
                                          std::size_t workers = 1);

struct EmotionHistogram {
  std::array<std::size_t, kNumEmotions> counts{};
  std::array<double, kNumEmotions> fractions{};
  double positive = 0.0;
  double negative = 0.0;
  double other = 0.0;
  std::size_t total = 0;
};

/// Throws DataError on an empty corpus.
EmotionHistogram ComputeEmotionHistogram(const Corpus& corpus);

/// Fraction of artworks annotated with both a positive and a negative
/// emotion; with `treat_other_as_third`, with at least two of the three
/// sentiment groups.
double PolarityCooccurrence(const Corpus& corpus, bool treat_other_as_third);

/// Emotion whose count strictly exceeds half the total, if any.
std::optional<Emotion> StrongMajorityEmotion(
    const std::array<std::size_t, kNumEmotions>& counts);

struct StrongMajority {
  double fraction = 0.0;
  std::vector<std::size_t> artworks;  // qualifying artwork indices, ascending
  std::vector<Emotion> emotions;      // parallel majority emotion
};

StrongMajority ComputeStrongMajority(const Corpus& corpus);

/// Shannon entropy in bits.
double EntropyBits(const EmotionDistribution& distribution);

enum class GroupBy { kGenre, kArtStyle };

struct GroupEntropy {
  double mean_bits = 0.0;
  std::size_t artworks = 0;
};

/// Mean per-artwork emotion entropy within each group. Artworks without the
/// grouping field are skipped; empty groups do not appear.
std::map<std::string, GroupEntropy> ComputeGroupEntropy(const Corpus& corpus,
                                                        GroupBy group_by);

class Histogram {
 public:
  Histogram(double lo, double hi, std::size_t bins)
      : lo_(lo), hi_(hi), counts_(bins, 0) {}

  /// Values outside [lo, hi] clamp to the edge bins; hi falls in the last.
  void Add(double value);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::vector<std::size_t>& counts() const { return counts_; }
  std::size_t total() const { return total_; }
  double BinLow(std::size_t i) const;
  double BinHigh(std::size_t i) const;

 private:
  double lo_, hi_;
  std::vector<std::size_t> counts_;
  std::size_t total_ = 0;
};

struct AffectDistributions {
  Histogram concreteness{1.0, 5.0, 20};   // per covered word
  Histogram subjectivity{0.0, 1.0, 20};   // per utterance
  Histogram sentiment{-1.0, 1.0, 40};     // per utterance compound
  double mean_word_concreteness = 0.0;
  std::size_t covered_words = 0;
  std::size_t total_words = 0;
  double mean_subjectivity = 0.0;
  double mean_compound = 0.0;
  double simile_prevalence = 0.0;
  double neutral_fraction = 0.0;
  std::size_t utterances = 0;
  std::vector<AffectScores> per_utterance;  // annotation order
};

AffectDistributions ComputeAffectDistributions(
    const Corpus& corpus, const std::vector<TokenizedUtterance>& tagged,
    const AffectLexicons& lexicons, std::size_t workers = 1);

}  // namespace emocap

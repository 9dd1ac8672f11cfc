#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emocap/lexicons.hpp"
#include "emocap/textproc.hpp"

namespace emocap {

struct ConcretenessResult {
  std::vector<std::optional<double>> per_word;  // parallel to tokens
  std::optional<double> mean;                   // over covered words
  std::size_t covered = 0;
  std::size_t content_words = 0;  // NOUN/ADJ/VERB tokens
  std::size_t covered_content_words = 0;

  double CoveredContentFraction() const {
    return content_words == 0 ? 0.0
                              : static_cast<double>(covered_content_words) /
                                    static_cast<double>(content_words);
  }
};

/// Rates each word by its lemma, falling back to the surface token.
ConcretenessResult Concreteness(const TokenizedUtterance& utterance,
                                const ConcretenessLexicon& lexicon);

enum class SentimentClass { kPositive, kNegative, kNeutral };

std::string_view ToString(SentimentClass c);

struct SentimentResult {
  double compound = 0.0;  // [-1, 1]
  double positive = 0.0;
  double negative = 0.0;
  double neutral = 0.0;
  SentimentClass label = SentimentClass::kNeutral;
};

/// Valence-aware rule-based sentiment of raw (case-preserving) text:
/// per-word valences adjusted for boosters, negation within the scope
/// window, capitalization and "but" clauses, plus punctuation emphasis,
/// normalized as s / sqrt(s^2 + alpha).
SentimentResult Sentiment(std::string_view text, const SentimentLexicon& lexicon);

/// Mean subjectivity of matched lexicon entries in [0, 1]; an intensifier
/// directly followed by a match scales that match instead of counting
/// itself. 0 when nothing matches.
double Subjectivity(const TokenizedUtterance& utterance,
                    const SubjectivityLexicon& lexicon);

/// Index of the first pattern (in list order) that occurs as a contiguous
/// token sequence of the tokenized utterance.
std::optional<std::size_t> DetectSimile(std::string_view text,
                                        const SimileLemmaList& list);
std::optional<std::size_t> DetectSimile(std::span<const std::string> tokens,
                                        const SimileLemmaList& list);

struct AffectLexicons {
  ConcretenessLexicon concreteness;
  SentimentLexicon sentiment;
  SubjectivityLexicon subjectivity;
  SimileLemmaList similes;
};

struct AffectScores {
  std::optional<double> mean_concreteness;
  double sentiment_compound = 0.0;
  SentimentClass sentiment_class = SentimentClass::kNeutral;
  double subjectivity = 0.0;
  bool has_simile = false;
  std::optional<std::size_t> simile_pattern;
  double covered_word_fraction = 0.0;
};

AffectScores ScoreUtterance(std::string_view text,
                            const TokenizedUtterance& utterance,
                            const AffectLexicons& lexicons);

}  // namespace emocap

#include "emocap/affect.hpp"

#include <algorithm>

namespace emocap {

namespace {

bool IsContentTag(PosTag tag) {
  return tag == PosTag::kNoun || tag == PosTag::kAdj || tag == PosTag::kVerb;
}

// Adverb-like modifiers carry an intensity other than 1.
bool IsIntensifier(const SubjectivityEntry& e) { return e.intensity != 1.0; }

}  // namespace

ConcretenessResult Concreteness(const TokenizedUtterance& utterance,
                                const ConcretenessLexicon& lexicon) {
  ConcretenessResult result;
  const std::size_t n = utterance.tokens.size();
  result.per_word.reserve(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<double> rating;
    if (i < utterance.lemmas.size()) rating = lexicon.Lookup(utterance.lemmas[i]);
    if (!rating) rating = lexicon.Lookup(utterance.tokens[i]);
    result.per_word.push_back(rating);
    if (rating) {
      sum += *rating;
      ++result.covered;
    }
    if (i < utterance.tags.size() && IsContentTag(utterance.tags[i])) {
      ++result.content_words;
      result.covered_content_words += rating.has_value();
    }
  }
  if (result.covered > 0) result.mean = sum / static_cast<double>(result.covered);
  return result;
}

double Subjectivity(const TokenizedUtterance& utterance,
                    const SubjectivityLexicon& lexicon) {
  const std::size_t n = utterance.tokens.size();
  std::vector<const SubjectivityEntry*> matches(n, nullptr);
  for (std::size_t i = 0; i < n; ++i) {
    const PosTag tag = i < utterance.tags.size() ? utterance.tags[i] : PosTag::kOther;
    const SubjectivityEntry* entry = nullptr;
    if (i < utterance.lemmas.size()) entry = lexicon.Lookup(utterance.lemmas[i], tag);
    if (!entry) entry = lexicon.Lookup(utterance.tokens[i], tag);
    matches[i] = entry;
  }

  double sum = 0.0;
  std::size_t count = 0;
  double multiplier = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const SubjectivityEntry* e = matches[i];
    if (!e) {
      multiplier = 1.0;
      continue;
    }
    if (IsIntensifier(*e) && i + 1 < n && matches[i + 1]) {
      multiplier *= e->intensity;
      continue;
    }
    sum += std::min(1.0, e->subjectivity * multiplier);
    ++count;
    multiplier = 1.0;
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

std::optional<std::size_t> DetectSimile(std::span<const std::string> tokens,
                                        const SimileLemmaList& list) {
  for (std::size_t p = 0; p < list.tokenized.size(); ++p) {
    const auto& pattern = list.tokenized[p];
    if (pattern.empty() || pattern.size() > tokens.size()) continue;
    const auto it = std::search(tokens.begin(), tokens.end(), pattern.begin(),
                                pattern.end());
    if (it != tokens.end()) return p;
  }
  return std::nullopt;
}

std::optional<std::size_t> DetectSimile(std::string_view text,
                                        const SimileLemmaList& list) {
  const auto tokens = Tokenize(text);
  return DetectSimile(std::span<const std::string>(tokens), list);
}

AffectScores ScoreUtterance(std::string_view text,
                            const TokenizedUtterance& utterance,
                            const AffectLexicons& lexicons) {
  AffectScores scores;
  const auto conc = Concreteness(utterance, lexicons.concreteness);
  scores.mean_concreteness = conc.mean;
  scores.covered_word_fraction = conc.CoveredContentFraction();
  const auto sent = Sentiment(text, lexicons.sentiment);
  scores.sentiment_compound = sent.compound;
  scores.sentiment_class = sent.label;
  scores.subjectivity = Subjectivity(utterance, lexicons.subjectivity);
  scores.simile_pattern =
      DetectSimile(std::span<const std::string>(utterance.tokens), lexicons.similes);
  scores.has_simile = scores.simile_pattern.has_value();
  return scores;
}

}  // namespace emocap

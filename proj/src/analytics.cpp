#include "emocap/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "emocap/error.hpp"
#include "emocap/parallel.hpp"

namespace emocap {

namespace {

// Index into the five counted categories, or -1 for "other".
int CategoryOf(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun:
      return 0;
    case PosTag::kPron:
      return 1;
    case PosTag::kAdj:
      return 2;
    case PosTag::kAdp:
      return 3;
    case PosTag::kVerb:
      return 4;
    case PosTag::kOther:
      break;
  }
  return -1;
}

PosMeans FromArray(const std::array<double, 5>& v) {
  return PosMeans{v[0], v[1], v[2], v[3], v[4]};
}

}  // namespace

std::vector<TokenizedUtterance> AnalyzeUtterances(const Corpus& corpus,
                                                  const TaggerModel& tagger,
                                                  std::size_t workers) {
  const auto& anns = corpus.annotations();
  return ParallelMap(anns.size(), workers, [&](std::size_t i) {
    return Analyze(anns[i].utterance, tagger);
  });
}

CaptionStats ComputeCaptionStats(const std::vector<TokenizedUtterance>& tagged) {
  CaptionStats stats;
  stats.captions = tagged.size();
  if (tagged.empty()) return stats;
  std::size_t words = 0;
  std::array<std::size_t, 5> counts{};
  for (const auto& u : tagged) {
    words += u.tokens.size();
    for (PosTag t : u.tags) {
      if (const int c = CategoryOf(t); c >= 0) ++counts[static_cast<std::size_t>(c)];
    }
  }
  const double n = static_cast<double>(tagged.size());
  stats.words = static_cast<double>(words) / n;
  std::array<double, 5> means{};
  for (std::size_t c = 0; c < 5; ++c) means[c] = static_cast<double>(counts[c]) / n;
  stats.pos = FromArray(means);
  return stats;
}

CaptionStats ComputeCaptionStats(const Corpus& corpus, const TaggerModel& tagger,
                                 std::size_t workers) {
  return ComputeCaptionStats(AnalyzeUtterances(corpus, tagger, workers));
}

ImageDiversityStats ComputeImageDiversity(
    const Corpus& corpus, const std::vector<TokenizedUtterance>& tagged) {
  if (tagged.size() != corpus.annotations().size()) {
    throw DataError("tagged utterances do not match the corpus");
  }
  ImageDiversityStats stats;
  std::array<double, 5> unique_sum{}, normalized_sum{};
  std::size_t artworks = 0;
  for (std::size_t a = 0; a < corpus.artworks().size(); ++a) {
    const auto& anns = corpus.AnnotationsOf(a);
    if (anns.empty()) continue;
    ++artworks;
    std::array<std::set<std::string_view>, 5> seen;
    for (std::size_t idx : anns) {
      const auto& u = tagged[idx];
      for (std::size_t i = 0; i < u.tags.size(); ++i) {
        if (const int c = CategoryOf(u.tags[i]); c >= 0) {
          seen[static_cast<std::size_t>(c)].insert(u.lemmas[i]);
        }
      }
    }
    for (std::size_t c = 0; c < 5; ++c) {
      const auto count = static_cast<double>(seen[c].size());
      unique_sum[c] += count;
      normalized_sum[c] += count / static_cast<double>(anns.size());
    }
  }
  stats.artworks = artworks;
  if (artworks == 0) return stats;
  for (std::size_t c = 0; c < 5; ++c) {
    unique_sum[c] /= static_cast<double>(artworks);
    normalized_sum[c] /= static_cast<double>(artworks);
  }
  stats.unique = FromArray(unique_sum);
  stats.normalized = FromArray(normalized_sum);
  return stats;
}

ImageDiversityStats ComputeImageDiversity(const Corpus& corpus,
                                          const TaggerModel& tagger,
                                          std::size_t workers) {
  return ComputeImageDiversity(corpus, AnalyzeUtterances(corpus, tagger, workers));
}

EmotionHistogram ComputeEmotionHistogram(const Corpus& corpus) {
  if (corpus.annotations().empty()) throw DataError("corpus has no annotations");
  EmotionHistogram h;
  h.counts = GlobalEmotionCounts(corpus);
  h.total = corpus.annotations().size();
  const double total = static_cast<double>(h.total);
  std::array<std::size_t, 3> groups{};
  for (Emotion e : kAllEmotions) {
    h.fractions[Index(e)] = static_cast<double>(h.counts[Index(e)]) / total;
    groups[static_cast<std::size_t>(GroupOf(e))] += h.counts[Index(e)];
  }
  h.positive = static_cast<double>(groups[0]) / total;
  h.negative = static_cast<double>(groups[1]) / total;
  h.other = static_cast<double>(groups[2]) / total;
  return h;
}

double PolarityCooccurrence(const Corpus& corpus, bool treat_other_as_third) {
  std::size_t qualifying = 0, artworks = 0;
  for (std::size_t a = 0; a < corpus.artworks().size(); ++a) {
    const auto& anns = corpus.AnnotationsOf(a);
    if (anns.empty()) continue;
    ++artworks;
    std::array<bool, 3> present{};
    for (std::size_t idx : anns) {
      present[static_cast<std::size_t>(GroupOf(corpus.annotations()[idx].emotion))] = true;
    }
    const bool both = present[0] && present[1];
    const int groups = present[0] + present[1] + present[2];
    qualifying += treat_other_as_third ? groups >= 2 : both;
  }
  return artworks == 0 ? 0.0
                       : static_cast<double>(qualifying) / static_cast<double>(artworks);
}

std::optional<Emotion> StrongMajorityEmotion(
    const std::array<std::size_t, kNumEmotions>& counts) {
  std::size_t total = 0;
  for (std::size_t c : counts) total += c;
  for (Emotion e : kAllEmotions) {
    if (2 * counts[Index(e)] > total) return e;
  }
  return std::nullopt;
}

StrongMajority ComputeStrongMajority(const Corpus& corpus) {
  StrongMajority result;
  std::size_t artworks = 0;
  for (std::size_t a = 0; a < corpus.artworks().size(); ++a) {
    if (corpus.AnnotationsOf(a).empty()) continue;
    ++artworks;
    if (const auto e = StrongMajorityEmotion(corpus.EmotionCounts(a))) {
      result.artworks.push_back(a);
      result.emotions.push_back(*e);
    }
  }
  if (artworks > 0) {
    result.fraction = static_cast<double>(result.artworks.size()) /
                      static_cast<double>(artworks);
  }
  return result;
}

double EntropyBits(const EmotionDistribution& distribution) {
  double h = 0.0;
  for (double p : distribution.probs()) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

std::map<std::string, GroupEntropy> ComputeGroupEntropy(const Corpus& corpus,
                                                        GroupBy group_by) {
  std::map<std::string, std::pair<double, std::size_t>> sums;
  for (std::size_t a = 0; a < corpus.artworks().size(); ++a) {
    if (corpus.AnnotationsOf(a).empty()) continue;
    const auto& art = corpus.artworks()[a];
    const std::string* key = nullptr;
    if (group_by == GroupBy::kArtStyle) {
      key = &art.art_style;
    } else if (art.genre) {
      key = &*art.genre;
    }
    if (!key || key->empty()) continue;
    auto& [sum, count] = sums[*key];
    sum += EntropyBits(EmpiricalDistribution(corpus, a));
    ++count;
  }
  std::map<std::string, GroupEntropy> out;
  for (const auto& [key, value] : sums) {
    out.emplace(key, GroupEntropy{value.first / static_cast<double>(value.second),
                                  value.second});
  }
  return out;
}

void Histogram::Add(double value) {
  const std::size_t bins = counts_.size();
  const double t = (value - lo_) / (hi_ - lo_) * static_cast<double>(bins);
  std::size_t bin = 0;
  if (t >= static_cast<double>(bins)) {
    bin = bins - 1;
  } else if (t > 0.0) {
    bin = static_cast<std::size_t>(t);
  }
  ++counts_[bin];
  ++total_;
}

double Histogram::BinLow(std::size_t i) const {
  return lo_ + (hi_ - lo_) * static_cast<double>(i) / static_cast<double>(counts_.size());
}

double Histogram::BinHigh(std::size_t i) const { return BinLow(i + 1); }

AffectDistributions ComputeAffectDistributions(
    const Corpus& corpus, const std::vector<TokenizedUtterance>& tagged,
    const AffectLexicons& lexicons, std::size_t workers) {
  const auto& anns = corpus.annotations();
  if (tagged.size() != anns.size()) {
    throw DataError("tagged utterances do not match the corpus");
  }
  struct Item {
    AffectScores scores;
    std::vector<double> word_ratings;
  };
  auto items = ParallelMap(anns.size(), workers, [&](std::size_t i) {
    Item item;
    item.scores = ScoreUtterance(anns[i].utterance, tagged[i], lexicons);
    const auto conc = Concreteness(tagged[i], lexicons.concreteness);
    for (const auto& r : conc.per_word) {
      if (r) item.word_ratings.push_back(*r);
    }
    return item;
  });

  AffectDistributions d;
  d.utterances = items.size();
  double concreteness_sum = 0.0, subjectivity_sum = 0.0, compound_sum = 0.0;
  std::size_t similes = 0, neutral = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& item = items[i];
    for (double r : item.word_ratings) {
      d.concreteness.Add(r);
      concreteness_sum += r;
    }
    d.covered_words += item.word_ratings.size();
    d.total_words += tagged[i].tokens.size();
    d.subjectivity.Add(item.scores.subjectivity);
    d.sentiment.Add(item.scores.sentiment_compound);
    subjectivity_sum += item.scores.subjectivity;
    compound_sum += item.scores.sentiment_compound;
    similes += item.scores.has_simile;
    neutral += item.scores.sentiment_class == SentimentClass::kNeutral;
  }
  if (d.covered_words > 0) {
    d.mean_word_concreteness = concreteness_sum / static_cast<double>(d.covered_words);
  }
  if (d.utterances > 0) {
    const double n = static_cast<double>(d.utterances);
    d.mean_subjectivity = subjectivity_sum / n;
    d.mean_compound = compound_sum / n;
    d.simile_prevalence = static_cast<double>(similes) / n;
    d.neutral_fraction = static_cast<double>(neutral) / n;
  }
  d.per_utterance.reserve(items.size());
  for (auto& item : items) d.per_utterance.push_back(std::move(item.scores));
  return d;
}

}  // namespace emocap

#include "emocap/generation_eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "emocap/affect.hpp"
#include "emocap/analytics.hpp"
#include "emocap/csv.hpp"
#include "emocap/error.hpp"
#include "emocap/parallel.hpp"
#include "emocap/porter.hpp"
#include "emocap/random.hpp"
#include "emocap/textproc.hpp"

namespace emocap {

namespace {

std::ifstream OpenCsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

void StripBom(std::vector<std::string>& header) {
  if (!header.empty() && header.front().starts_with("\xEF\xBB\xBF")) {
    header.front().erase(0, 3);
  }
}

bool IsBlankRow(const std::vector<std::string>& fields) {
  return fields.size() == 1 && fields.front().empty();
}

// Rolling-row LCS over any comparable sequence; O(min(|a|,|b|)) memory.
template <typename T>
std::size_t Lcs(std::span<const T> a, std::span<const T> b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return 0;
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (const T& x : a) {
    std::size_t diag = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = x == b[j - 1] ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = up;
    }
  }
  return row.back();
}

using NGramCounts = std::map<std::vector<std::string_view>, std::size_t>;

NGramCounts CountNGrams(std::span<const std::string> tokens, int n) {
  NGramCounts counts;
  if (tokens.size() < static_cast<std::size_t>(n)) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::vector<std::string_view> gram(tokens.begin() + i, tokens.begin() + i + n);
    ++counts[std::move(gram)];
  }
  return counts;
}

struct BleuStats {
  std::array<std::size_t, 4> clipped{};
  std::array<std::size_t, 4> total{};
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;
};

BleuStats SegmentBleuStats(const Segment& segment, int n) {
  BleuStats stats;
  stats.hyp_length = segment.hypothesis.size();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::size_t best_diff = best;
  for (const auto& ref : segment.references) {
    const std::size_t len = ref.size();
    const std::size_t diff = len > stats.hyp_length ? len - stats.hyp_length
                                                    : stats.hyp_length - len;
    if (diff < best_diff || (diff == best_diff && len < best)) {
      best = len;
      best_diff = diff;
    }
  }
  stats.ref_length = best;
  for (int k = 1; k <= n; ++k) {
    const NGramCounts hyp = CountNGrams(segment.hypothesis, k);
    NGramCounts max_ref;
    for (const auto& ref : segment.references) {
      for (const auto& [gram, count] : CountNGrams(ref, k)) {
        auto& slot = max_ref[gram];
        slot = std::max(slot, count);
      }
    }
    for (const auto& [gram, count] : hyp) {
      const auto it = max_ref.find(gram);
      const std::size_t cap = it == max_ref.end() ? 0 : it->second;
      stats.clipped[k - 1] += std::min(count, cap);
      stats.total[k - 1] += count;
    }
  }
  return stats;
}

void RequireReferences(const Segment& segment) {
  if (segment.references.empty()) throw DataError("segment has no references");
}

}  // namespace

GenerationSet LoadGenerations(const std::filesystem::path& path) {
  auto in = OpenCsv(path);
  const std::string file = path.string();
  csv::Reader reader(in);
  auto header = reader.Next();
  if (header) StripBom(*header);
  if (!header || header->size() < 2 || (*header)[0] != "painting" ||
      (*header)[1] != "utterance") {
    throw DataError("expected header painting,utterance", file, 1);
  }
  GenerationSet out;
  while (auto fields = reader.Next()) {
    if (IsBlankRow(*fields)) continue;
    if (fields->size() < 2) throw DataError("expected 2 fields", file, reader.line());
    const std::string& id = (*fields)[0];
    if (id.empty()) throw DataError("empty painting id", file, reader.line(), "painting");
    if (!out.utterances.emplace(id, (*fields)[1]).second) {
      throw DataError("duplicate generation for painting " + id, file, reader.line(),
                      "painting");
    }
  }
  return out;
}

ReferenceSet CollectReferences(const Corpus& corpus) {
  ReferenceSet refs;
  for (std::size_t a = 0; a < corpus.artworks().size(); ++a) {
    auto& list = refs[corpus.artworks()[a].id];
    for (std::size_t i : corpus.AnnotationsOf(a)) {
      list.push_back(corpus.annotations()[i].utterance);
    }
  }
  return refs;
}

std::vector<Segment> PairSegments(const GenerationSet& generations,
                                  const ReferenceSet& references) {
  std::vector<Segment> segments;
  segments.reserve(generations.utterances.size());
  for (const auto& [id, text] : generations.utterances) {
    const auto it = references.find(id);
    if (it == references.end() || it->second.empty()) {
      throw DataError("no references for artwork " + id);
    }
    Segment segment;
    segment.hypothesis = Tokenize(text);
    for (const auto& ref : it->second) segment.references.push_back(Tokenize(ref));
    segments.push_back(std::move(segment));
  }
  return segments;
}

double CorpusBleu(std::span<const Segment> segments, int n) {
  if (n < 1 || n > 4) throw ConfigError("BLEU order must be in 1..4");
  if (segments.empty()) throw DataError("no segments to score");
  BleuStats sum;
  for (const auto& segment : segments) {
    RequireReferences(segment);
    const BleuStats s = SegmentBleuStats(segment, n);
    for (int k = 0; k < n; ++k) {
      sum.clipped[k] += s.clipped[k];
      sum.total[k] += s.total[k];
    }
    sum.hyp_length += s.hyp_length;
    sum.ref_length += s.ref_length;
  }
  double log_precision = 0.0;
  for (int k = 0; k < n; ++k) {
    if (sum.clipped[k] == 0) return 0.0;
    log_precision += std::log(static_cast<double>(sum.clipped[k]) /
                              static_cast<double>(sum.total[k]));
  }
  const double c = static_cast<double>(sum.hyp_length);
  const double r = static_cast<double>(sum.ref_length);
  const double bp = c < r ? std::exp(1.0 - r / c) : 1.0;
  return bp * std::exp(log_precision / n);
}

std::size_t LcsLength(std::span<const std::string> a, std::span<const std::string> b) {
  return Lcs<std::string>(a, b);
}

double RougeLPair(std::span<const std::string> hypothesis,
                  std::span<const std::string> reference, double beta) {
  const std::size_t lcs = LcsLength(hypothesis, reference);
  if (lcs == 0) return 0.0;
  const double p = static_cast<double>(lcs) / static_cast<double>(hypothesis.size());
  const double r = static_cast<double>(lcs) / static_cast<double>(reference.size());
  const double b2 = beta * beta;
  return (1.0 + b2) * p * r / (r + b2 * p);
}

double RougeL(std::span<const Segment> segments, double beta, std::size_t workers) {
  if (segments.empty()) throw DataError("no segments to score");
  const auto best = ParallelMap(segments.size(), workers, [&](std::size_t i) {
    RequireReferences(segments[i]);
    double m = 0.0;
    for (const auto& ref : segments[i].references) {
      m = std::max(m, RougeLPair(segments[i].hypothesis, ref, beta));
    }
    return m;
  });
  double sum = 0.0;
  for (double v : best) sum += v;
  return sum / static_cast<double>(segments.size());
}

MeteorAlignment MeteorPair(std::span<const std::string> hypothesis,
                           std::span<const std::string> reference,
                           const MeteorParams& params) {
  MeteorAlignment out;
  out.mapping.assign(hypothesis.size(), std::nullopt);
  std::vector<bool> used(reference.size(), false);

  // Branch and bound over one stage: most matches, then fewest chunks, then
  // the lexicographically smallest mapping (unmatched before any position).
  auto run_stage = [&](const std::vector<std::string>& hyp_keys,
                       const std::vector<std::string>& ref_keys) {
    std::vector<std::size_t> free;
    std::vector<std::vector<std::size_t>> cands(hypothesis.size());
    for (std::size_t i = 0; i < hypothesis.size(); ++i) {
      if (out.mapping[i]) continue;
      for (std::size_t j = 0; j < reference.size(); ++j) {
        if (!used[j] && ref_keys[j] == hyp_keys[i]) cands[i].push_back(j);
      }
      if (!cands[i].empty()) free.push_back(i);
    }
    if (free.empty()) return;

    // Upper bound on matches still reachable from free[k..]: per key, the
    // smaller of remaining hypothesis words and unused reference positions.
    std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> avail;
    for (std::size_t i : free) ++avail[hyp_keys[i]].first;
    for (std::size_t j = 0; j < reference.size(); ++j) {
      auto it = avail.find(ref_keys[j]);
      if (it != avail.end() && !used[j]) ++it->second.second;
    }
    auto reachable = [&] {
      std::size_t n = 0;
      for (const auto& [key, c] : avail) n += std::min(c.first, c.second);
      return n;
    };

    auto cur = out.mapping;
    auto best = cur;
    std::size_t best_matches = 0, best_chunks = std::numeric_limits<std::size_t>::max();
    bool have_best = false;
    std::size_t budget = 200000;

    auto chunks_until = [&](std::size_t end) {
      std::size_t c = 0;
      for (std::size_t i = 0; i < end; ++i) {
        if (cur[i] && !(i > 0 && cur[i - 1] && *cur[i] == *cur[i - 1] + 1)) ++c;
      }
      return c;
    };

    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k,
                                                            std::size_t matched) {
      if (budget == 0) return;
      --budget;
      const std::size_t bound = matched + reachable();
      if (have_best && bound < best_matches) return;
      const std::size_t upto = k < free.size() ? free[k] : hypothesis.size();
      const std::size_t chunks = chunks_until(upto);
      if (have_best && bound == best_matches && chunks > best_chunks) return;
      if (k == free.size()) {
        const std::size_t total = chunks_until(hypothesis.size());
        if (!have_best || matched > best_matches ||
            (matched == best_matches && total < best_chunks) ||
            (matched == best_matches && total == best_chunks && cur < best)) {
          best = cur;
          best_matches = matched;
          best_chunks = total;
          have_best = true;
        }
        return;
      }
      const std::size_t i = free[k];
      auto& a = avail[hyp_keys[i]];
      --a.first;
      for (std::size_t j : cands[i]) {
        if (used[j]) continue;
        used[j] = true;
        --a.second;
        cur[i] = j;
        rec(k + 1, matched + 1);
        cur[i] = std::nullopt;
        ++a.second;
        used[j] = false;
      }
      rec(k + 1, matched);
      ++a.first;
    };
    rec(0, 0);
    out.mapping = best;
    for (const auto& m : out.mapping) {
      if (m) used[*m] = true;
    }
  };

  const std::vector<std::string> hyp_exact(hypothesis.begin(), hypothesis.end());
  const std::vector<std::string> ref_exact(reference.begin(), reference.end());
  run_stage(hyp_exact, ref_exact);
  std::vector<std::string> hyp_stem, ref_stem;
  for (const auto& t : hypothesis) hyp_stem.push_back(PorterStem(t));
  for (const auto& t : reference) ref_stem.push_back(PorterStem(t));
  run_stage(hyp_stem, ref_stem);

  for (std::size_t i = 0; i < hypothesis.size(); ++i) {
    if (!out.mapping[i]) continue;
    ++out.matches;
    const bool continues = i > 0 && out.mapping[i - 1] &&
                           *out.mapping[i] == *out.mapping[i - 1] + 1;
    if (!continues) ++out.chunks;
  }
  if (out.matches == 0) return out;
  const double m = static_cast<double>(out.matches);
  out.precision = m / static_cast<double>(hypothesis.size());
  out.recall = m / static_cast<double>(reference.size());
  out.fmean = out.precision * out.recall /
              (params.alpha * out.precision + (1.0 - params.alpha) * out.recall);
  out.penalty = params.gamma * std::pow(static_cast<double>(out.chunks) / m, params.beta);
  out.score = out.fmean * (1.0 - out.penalty);
  return out;
}

double Meteor(std::span<const Segment> segments, const MeteorParams& params,
              std::size_t workers) {
  if (segments.empty()) throw DataError("no segments to score");
  const auto best = ParallelMap(segments.size(), workers, [&](std::size_t i) {
    RequireReferences(segments[i]);
    double m = 0.0;
    for (const auto& ref : segments[i].references) {
      m = std::max(m, MeteorPair(segments[i].hypothesis, ref, params).score);
    }
    return m;
  });
  double sum = 0.0;
  for (double v : best) sum += v;
  return sum / static_cast<double>(segments.size());
}

LcsNoveltyResult LcsNovelty(std::span<const TokenSeq> generations,
                            std::span<const TokenSeq> training, std::size_t subsample,
                            std::uint64_t seed, std::size_t workers) {
  if (generations.empty()) throw DataError("no generations for LCS novelty");
  if (training.empty()) throw DataError("no training utterances for LCS novelty");
  if (subsample == 0) throw ConfigError("lcs_subsample must be at least 1");

  std::vector<std::size_t> order(training.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  Shuffle(std::span(order), rng);
  order.resize(std::min(subsample, training.size()));
  std::sort(order.begin(), order.end());

  std::unordered_map<std::string, std::uint32_t> ids;
  auto intern = [&](const TokenSeq& seq) {
    std::vector<std::uint32_t> out;
    out.reserve(seq.size());
    for (const auto& t : seq) {
      out.push_back(ids.emplace(t, static_cast<std::uint32_t>(ids.size())).first->second);
    }
    return out;
  };
  std::vector<std::vector<std::uint32_t>> sample;
  sample.reserve(order.size());
  for (std::size_t i : order) sample.push_back(intern(training[i]));
  std::vector<std::vector<std::uint32_t>> gens;
  gens.reserve(generations.size());
  for (const auto& g : generations) gens.push_back(intern(g));

  struct PerGeneration {
    std::size_t max = 0;
    std::size_t sum = 0;
  };
  const auto per = ParallelMap(gens.size(), workers, [&](std::size_t g) {
    PerGeneration r;
    for (const auto& s : sample) {
      const std::size_t len = Lcs<std::uint32_t>(gens[g], s);
      r.max = std::max(r.max, len);
      r.sum += len;
    }
    return r;
  });

  LcsNoveltyResult out;
  out.generations = gens.size();
  out.sampled = sample.size();
  double max_sum = 0.0;
  double mean_sum = 0.0;
  for (const auto& r : per) {
    max_sum += static_cast<double>(r.max);
    mean_sum += static_cast<double>(r.sum) / static_cast<double>(sample.size());
  }
  out.max_lcs = max_sum / static_cast<double>(gens.size());
  out.mean_lcs = mean_sum / static_cast<double>(gens.size());
  return out;
}

double EmoAlign(const GenerationSet& generations, const Corpus& corpus,
                const EmotionPredictor& predictor) {
  std::size_t qualifying = 0;
  std::size_t agree = 0;
  for (const auto& [id, text] : generations.utterances) {
    const auto art = corpus.FindArtwork(id);
    if (!art) throw DataError("generation artwork " + id + " is not in the corpus");
    const auto majority = StrongMajorityEmotion(corpus.EmotionCounts(*art));
    if (!majority) continue;
    ++qualifying;
    if (predictor(id, text) == *majority) ++agree;
  }
  if (qualifying == 0) {
    throw DataError("no generation artwork has a strong-majority emotion");
  }
  return static_cast<double>(agree) / static_cast<double>(qualifying);
}

double EmoAlign(const GenerationSet& generations, const Corpus& corpus,
                const NaiveBayesModel& model) {
  return EmoAlign(generations, corpus, [&](std::string_view, std::string_view text) {
    return model.Predict(text).Argmax();
  });
}

double SimilesPercent(const GenerationSet& generations, const SimileLemmaList& list) {
  if (generations.utterances.empty()) return 0.0;
  std::size_t hits = 0;
  for (const auto& [id, text] : generations.utterances) {
    if (DetectSimile(text, list)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(generations.utterances.size());
}

double KlDivergence(const EmotionDistribution& p, const EmotionDistribution& q) {
  double kl = 0.0;
  for (std::size_t i = 0; i < kNumEmotions; ++i) {
    const double pi = p.probs()[i];
    if (pi == 0.0) continue;
    const double qi = q.probs()[i] > 0.0 ? q.probs()[i] : kKlEpsilon;
    kl += pi * std::log(pi / qi);
  }
  return kl;
}

PredictionSet LoadPredictions(const std::filesystem::path& path) {
  auto in = OpenCsv(path);
  const std::string file = path.string();
  csv::Reader reader(in);
  auto header = reader.Next();
  if (header) StripBom(*header);
  if (!header || header->size() != kNumEmotions + 1 || (*header)[0] != "painting") {
    throw DataError("expected header painting plus 9 emotion columns", file, 1);
  }
  PredictionSet out;
  while (auto fields = reader.Next()) {
    if (IsBlankRow(*fields)) continue;
    const std::size_t line = reader.line();
    if (fields->size() != kNumEmotions + 1) {
      throw DataError("expected 10 fields", file, line);
    }
    std::array<double, kNumEmotions> probs{};
    double sum = 0.0;
    for (std::size_t i = 0; i < kNumEmotions; ++i) {
      const std::string& cell = (*fields)[i + 1];
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (cell.empty() || *end != '\0' || !std::isfinite(v) || v < 0.0) {
        throw DataError("invalid probability \"" + cell + "\"", file, line,
                        (*header)[i + 1]);
      }
      probs[i] = v;
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-4) {
      throw DataError("probabilities sum to " + std::to_string(sum), file, line);
    }
    for (double& v : probs) v /= sum;
    EmotionDistribution dist = [&] {
      try {
        return EmotionDistribution(probs);
      } catch (const DataError& e) {
        throw DataError(e.what(), file, line);
      }
    }();
    if (!out.emplace((*fields)[0], dist).second) {
      throw DataError("duplicate prediction for painting " + (*fields)[0], file, line,
                      "painting");
    }
  }
  return out;
}

ImagePredictionEval EvaluateImagePredictions(const PredictionSet& predictions,
                                             const Corpus& corpus) {
  ImagePredictionEval out;
  if (corpus.artworks().empty()) throw DataError("corpus has no artworks");
  double kl_sum = 0.0;
  std::size_t correct = 0;
  for (std::size_t a = 0; a < corpus.artworks().size(); ++a) {
    const std::string& id = corpus.artworks()[a].id;
    const auto it = predictions.find(id);
    if (it == predictions.end()) throw DataError("no prediction for artwork " + id);
    const EmotionDistribution empirical = EmpiricalDistribution(corpus, a);
    kl_sum += KlDivergence(empirical, it->second);
    ++out.evaluated;
    const auto majority = StrongMajorityEmotion(corpus.EmotionCounts(a));
    if (!majority) continue;
    ++out.qualifying;
    if (it->second.Argmax() == *majority) ++correct;
  }
  out.mean_kl = kl_sum / static_cast<double>(out.evaluated);
  if (out.qualifying > 0) {
    out.dominant_accuracy =
        static_cast<double>(correct) / static_cast<double>(out.qualifying);
  }
  return out;
}

const std::vector<std::string>& MetricNames() {
  static const std::vector<std::string> kNames = {
      "BLEU-1", "BLEU-2",  "BLEU-3",   "BLEU-4",    "METEOR",
      "ROUGE-L", "max-LCS", "mean-LCS", "Emo-Align", "Similes-percent",
  };
  return kNames;
}

namespace {

std::string FormatNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

MetricReport EvaluateGenerations(const GenerationSet& generations, const Corpus& corpus,
                                 std::span<const TokenSeq> training,
                                 const NaiveBayesModel& model,
                                 const SimileLemmaList& similes,
                                 const EvaluationOptions& options) {
  if (generations.utterances.empty()) throw DataError("generations file is empty");
  for (const auto& [id, text] : generations.utterances) {
    if (!corpus.FindArtwork(id)) {
      throw DataError("generation artwork " + id + " is not in the corpus");
    }
  }
  const auto segments = PairSegments(generations, CollectReferences(corpus));
  const std::size_t n = segments.size();

  MetricReport report;
  for (int k = 1; k <= 4; ++k) {
    const std::string name = "BLEU-" + std::to_string(k);
    report.values[name] = CorpusBleu(segments, k);
    report.counts[name] = n;
  }
  report.values["METEOR"] = Meteor(segments, options.meteor, options.workers);
  report.counts["METEOR"] = n;
  report.values["ROUGE-L"] = RougeL(segments, options.rouge_beta, options.workers);
  report.counts["ROUGE-L"] = n;

  std::vector<TokenSeq> hyps;
  hyps.reserve(n);
  for (const auto& s : segments) hyps.push_back(s.hypothesis);
  const auto lcs =
      LcsNovelty(hyps, training, options.lcs_subsample, options.seed, options.workers);
  report.values["max-LCS"] = lcs.max_lcs;
  report.values["mean-LCS"] = lcs.mean_lcs;
  report.counts["max-LCS"] = n;
  report.counts["mean-LCS"] = n;

  std::size_t qualifying = 0;
  for (const auto& [id, text] : generations.utterances) {
    if (StrongMajorityEmotion(corpus.EmotionCounts(*corpus.FindArtwork(id)))) ++qualifying;
  }
  report.counts["Emo-Align"] = qualifying;
  if (qualifying > 0) {
    report.values["Emo-Align"] = EmoAlign(generations, corpus, model);
  } else {
    report.values["Emo-Align"] = std::nullopt;
  }
  report.values["Similes-percent"] = SimilesPercent(generations, similes);
  report.counts["Similes-percent"] = n;

  report.config = {
      {"bleu_aggregation", "corpus"},
      {"lcs_sampled", std::to_string(lcs.sampled)},
      {"lcs_subsample", std::to_string(options.lcs_subsample)},
      {"meteor_alpha", FormatNumber(options.meteor.alpha)},
      {"meteor_beta", FormatNumber(options.meteor.beta)},
      {"meteor_gamma", FormatNumber(options.meteor.gamma)},
      {"nb_alpha", FormatNumber(model.alpha())},
      {"rouge_beta", FormatNumber(options.rouge_beta)},
      {"seed", std::to_string(options.seed)},
      {"simile_patterns", std::to_string(similes.patterns.size())},
  };
  return report;
}

}  // namespace emocap

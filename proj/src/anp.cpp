#include "emocap/anp.hpp"

#include <algorithm>
#include <map>

#include "emocap/parallel.hpp"

namespace emocap {

namespace {

std::string Join(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace

Polarity ResolveSentiment(const EmotionDistribution& distribution, Rng& rng) {
  switch (GroupOf(distribution.Argmax())) {
    case SentimentGroup::kPositive:
      return Polarity::kPositive;
    case SentimentGroup::kNegative:
      return Polarity::kNegative;
    default:
      return CoinFlip(rng) ? Polarity::kPositive : Polarity::kNegative;
  }
}

InjectionResult InjectAnp(const TokenizedUtterance& caption, Polarity target,
                          const AnpLexicon& lexicon, Rng& rng) {
  InjectionResult out;
  out.sentiment = target;
  out.tokens = caption.tokens;

  struct Candidate {
    std::size_t position;
    std::string noun;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < caption.tokens.size(); ++i) {
    if (i >= caption.tags.size() || caption.tags[i] != PosTag::kNoun) continue;
    if (lexicon.HasNoun(caption.tokens[i], target)) {
      candidates.push_back({i, caption.tokens[i]});
    } else if (i < caption.lemmas.size() && lexicon.HasNoun(caption.lemmas[i], target)) {
      candidates.push_back({i, caption.lemmas[i]});
    }
  }
  if (candidates.empty()) {
    out.utterance = Join(out.tokens);
    return out;
  }

  const Candidate& chosen = candidates[UniformIndex(rng, candidates.size())];
  const AnpEntry* best = nullptr;
  for (std::size_t idx : lexicon.ForNoun(chosen.noun, target)) {
    const AnpEntry& e = lexicon.entries[idx];
    if (!best || e.frequency > best->frequency ||
        (e.frequency == best->frequency && e.adjective < best->adjective)) {
      best = &e;
    }
  }
  if (chosen.position > 0 && caption.tokens[chosen.position - 1] == best->adjective) {
    out.utterance = Join(out.tokens);
    return out;
  }
  out.tokens.insert(out.tokens.begin() + static_cast<std::ptrdiff_t>(chosen.position),
                    best->adjective);
  out.utterance = Join(out.tokens);
  out.injected = true;
  out.anp = std::make_pair(best->adjective, best->noun);
  out.position = chosen.position;
  return out;
}

AnpLexicon CountAnpFrequencies(const Corpus& corpus, const TaggerModel& tagger,
                               const AnpLexicon& seed, std::size_t workers) {
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (std::size_t i = 0; i < seed.entries.size(); ++i) {
    index[{seed.entries[i].adjective, seed.entries[i].noun}] = i;
  }
  const auto& anns = corpus.annotations();
  const auto hits = ParallelMap(anns.size(), workers, [&](std::size_t a) {
    std::vector<std::size_t> found;
    const TokenizedUtterance t = Analyze(anns[a].utterance, tagger);
    for (std::size_t i = 1; i < t.tokens.size(); ++i) {
      if (t.tags[i] != PosTag::kNoun) continue;
      auto it = index.find({t.tokens[i - 1], t.tokens[i]});
      if (it == index.end()) it = index.find({t.tokens[i - 1], t.lemmas[i]});
      if (it != index.end()) found.push_back(it->second);
    }
    return found;
  });
  std::vector<std::size_t> counts(seed.entries.size(), 0);
  for (const auto& list : hits) {
    for (std::size_t i : list) ++counts[i];
  }
  AnpLexicon out;
  for (std::size_t i = 0; i < seed.entries.size(); ++i) {
    if (counts[i] == 0) continue;
    AnpEntry e = seed.entries[i];
    e.frequency = counts[i];
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace emocap

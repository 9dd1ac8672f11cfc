#pragma once

#include <optional>
#include <string>
#include <utility>

#include "emocap/corpus.hpp"
#include "emocap/lexicons.hpp"
#include "emocap/random.hpp"
#include "emocap/textproc.hpp"

namespace emocap {

struct InjectionResult {
  std::vector<std::string> tokens;  // output utterance, tokenized
  std::string utterance;            // tokens joined by single spaces
  bool injected = false;
  std::optional<std::pair<std::string, std::string>> anp;  // (adjective, noun)
  std::optional<std::size_t> position;  // index of the inserted adjective
  Polarity sentiment = Polarity::kPositive;
};

/// Sentiment group of the argmax emotion; something-else is a fair coin
/// flip drawn from `rng`.
Polarity ResolveSentiment(const EmotionDistribution& distribution, Rng& rng);

/// Inserts the most frequent `target` adjective of a uniformly chosen
/// candidate noun in front of it. Candidates are NOUN-tagged tokens whose
/// surface form (or else lemma) has at least one `target` ANP in `lexicon`.
InjectionResult InjectAnp(const TokenizedUtterance& caption, Polarity target,
                          const AnpLexicon& lexicon, Rng& rng);

/// Re-counts the frequency of every `seed` pair as adjacent tokens of
/// `corpus` (noun matched by surface form or lemma, tagged NOUN). Pairs never
/// observed are dropped.
AnpLexicon CountAnpFrequencies(const Corpus& corpus, const TaggerModel& tagger,
                               const AnpLexicon& seed, std::size_t workers = 1);

}  // namespace emocap

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "emocap/textproc.hpp"

namespace emocap {

// Every loader lowercases keys, rejects out-of-range values with a
// row-addressed DataError, and resolves duplicate keys last-wins while
// counting them in `duplicates`.

struct ConcretenessLexicon {
  std::unordered_map<std::string, double> ratings;  // in [1, 5]
  std::size_t duplicates = 0;

  std::optional<double> Lookup(std::string_view lemma) const;
  bool operator==(const ConcretenessLexicon&) const = default;
};

/// Rule constants of the valence-aware sentiment analyzer.
struct SentimentConstants {
  double booster_increment = 0.293;
  double booster_decrement = -0.293;
  double caps_increment = 0.733;
  double negation_scalar = -0.74;
  double normalization_alpha = 15.0;
  std::size_t negation_scope = 3;
  double but_before_weight = 0.5;
  double but_after_weight = 1.5;
  double exclamation_weight = 0.292;
  std::size_t exclamation_cap = 4;
  double question_weight = 0.18;
  double question_cap_value = 0.96;
  double neutral_threshold = 0.05;

  // booster word → signed increment (+increment or decrement)
  std::map<std::string, double> boosters;
  std::vector<std::string> negations;
  std::map<std::string, double> special_cases;

  /// Constants and word lists of the reference analyzer.
  static SentimentConstants Defaults();
  bool operator==(const SentimentConstants&) const = default;
};

struct SentimentLexicon {
  std::unordered_map<std::string, double> valences;  // in [-4, 4]
  SentimentConstants constants = SentimentConstants::Defaults();
  std::size_t duplicates = 0;

  std::optional<double> Lookup(std::string_view token) const;
  bool operator==(const SentimentLexicon&) const = default;
};

struct SubjectivityEntry {
  double polarity = 0.0;      // [-1, 1]
  double subjectivity = 0.0;  // [0, 1]
  double intensity = 1.0;     // multiplier applied to the next match

  bool operator==(const SubjectivityEntry&) const = default;
};

struct SubjectivityLexicon {
  using PerTag = std::array<std::optional<SubjectivityEntry>, kNumTags>;
  // lemma → entry per tag.
  std::map<std::string, PerTag, std::less<>> entries;
  std::size_t duplicates = 0;

  /// Exact (lemma, tag) entry, else the entry under the lowest-ordered tag.
  const SubjectivityEntry* Lookup(std::string_view lemma, PosTag tag) const;
  bool operator==(const SubjectivityLexicon&) const = default;
};

struct SimileLemmaList {
  std::vector<std::string> patterns;               // as written, lowercase
  std::vector<std::vector<std::string>> tokenized;  // whitespace-split

  static SimileLemmaList FromPatterns(std::vector<std::string> patterns);
  bool operator==(const SimileLemmaList&) const = default;
};

enum class Polarity { kPositive, kNegative };

std::string_view ToString(Polarity p);
std::optional<Polarity> ParsePolarity(std::string_view text);

struct AnpEntry {
  std::string adjective;
  std::string noun;
  Polarity sentiment;
  std::size_t frequency = 0;

  bool operator==(const AnpEntry&) const = default;
};

struct AnpLexicon {
  std::vector<AnpEntry> entries;  // (adjective, noun) unique
  std::size_t duplicates = 0;

  /// Indices of entries with this noun and sentiment, in file order.
  std::vector<std::size_t> ForNoun(std::string_view noun, Polarity sentiment) const;
  bool HasNoun(std::string_view noun, Polarity sentiment) const;
  bool operator==(const AnpLexicon&) const = default;
};

/// TSV with a header containing `Word` and `Conc.M`; other columns ignored.
ConcretenessLexicon LoadConcreteness(const std::filesystem::path& path);
/// TSV rows `token<TAB>valence[<TAB>...]`, optional JSON rule constants.
SentimentLexicon LoadSentiment(const std::filesystem::path& path,
                               const std::optional<std::filesystem::path>&
                                   constants_path = std::nullopt);
SentimentConstants LoadSentimentConstants(const std::filesystem::path& path);
/// CSV header `lemma,tag,polarity,subjectivity,intensity`.
SubjectivityLexicon LoadSubjectivity(const std::filesystem::path& path);
/// One pattern per line; blank lines and `#` comments skipped.
SimileLemmaList LoadSimiles(const std::filesystem::path& path);
/// CSV `adjective,noun,sentiment,frequency` (header optional).
AnpLexicon LoadAnps(const std::filesystem::path& path);
void WriteAnps(const AnpLexicon& lexicon, const std::filesystem::path& path);

}  // namespace emocap

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace emocap {

// Universal POS categories counted by the corpus statistics, plus a
// catch-all. Enumerator order is the tagger's tie-break order.
enum class PosTag : std::uint8_t { kNoun, kPron, kAdj, kAdp, kVerb, kOther };

inline constexpr std::size_t kNumTags = 6;

std::string_view ToString(PosTag tag);
std::optional<PosTag> ParsePosTag(std::string_view text);

struct TokenizedUtterance {
  std::vector<std::string> tokens;
  std::vector<PosTag> tags;
  std::vector<std::string> lemmas;
};

/// Lowercases, splits on whitespace, strips edge punctuation (keeping
/// internal apostrophes and hyphens) and splits clitics ("don't" → do n't).
std::vector<std::string> Tokenize(std::string_view text);

/// Exception table first, then per-tag suffix rules, else identity.
std::string Lemmatize(std::string_view token, PosTag tag);

struct TaggedSentence {
  std::vector<std::string> tokens;
  std::vector<PosTag> tags;
};

/// Parses "token_TAG token_TAG ..." lines (split at the last underscore).
/// Blank lines are skipped. Throws DataError with the line number.
std::vector<TaggedSentence> ReadTaggedCorpus(const std::filesystem::path& path);
std::vector<TaggedSentence> ParseTaggedCorpus(std::string_view text);

struct TaggerOptions {
  int epochs = 5;
  std::uint64_t seed = 1;
  // Words seen at least this often with exactly one tag bypass the model.
  std::size_t dictionary_min_count = 5;
};

/// Greedy averaged-perceptron tagger over the six-way tag set.
class TaggerModel {
 public:
  using Weights = std::array<double, kNumTags>;

  static constexpr std::string_view kFormatVersion = "emocap-tagger/1";

  TaggerModel() = default;

  static TaggerModel Train(std::span<const TaggedSentence> corpus,
                           const TaggerOptions& options = {});

  static TaggerModel Load(const std::filesystem::path& path);
  /// Sorted-key JSON; identical models produce identical bytes.
  std::string ToJson() const;
  static TaggerModel FromJson(std::string_view json);
  void Save(const std::filesystem::path& path) const;

  std::vector<PosTag> Tag(std::span<const std::string> tokens) const;

  const std::map<std::string, PosTag, std::less<>>& tag_dictionary() const {
    return tagdict_;
  }
  const std::map<std::string, Weights>& weights() const { return weights_; }
  const std::string& version() const { return version_; }

  bool operator==(const TaggerModel& other) const {
    return tagdict_ == other.tagdict_ && weights_ == other.weights_ &&
           version_ == other.version_;
  }

 private:
  void BuildIndex();
  PosTag Predict(std::span<const std::string> context, std::size_t i,
                 PosTag prev, PosTag prev2, std::string& scratch) const;

  std::map<std::string, PosTag, std::less<>> tagdict_;
  std::map<std::string, Weights> weights_;
  std::string version_ = std::string(kFormatVersion);
  // Feature-hash → weights, rebuilt from weights_ after training/loading.
  std::unordered_map<std::uint64_t, Weights> index_;
};

/// Tokenize + tag + lemmatize one utterance.
TokenizedUtterance Analyze(std::string_view text, const TaggerModel& tagger);

/// Token-level accuracy of `model` on gold-tagged sentences.
double TaggingAccuracy(const TaggerModel& model,
                       std::span<const TaggedSentence> gold);

}  // namespace emocap

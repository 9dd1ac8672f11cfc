#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emocap/emotion.hpp"

namespace emocap {

struct Artwork {
  std::string id;  // the release's `painting` column
  std::string art_style;
  std::optional<std::string> genre;
  std::optional<std::string> painter;

  bool operator==(const Artwork&) const = default;
};

struct Annotation {
  std::size_t artwork;  // index into Corpus::artworks()
  Emotion emotion;
  std::string utterance;
  std::optional<std::string> annotator_id;

  bool operator==(const Annotation&) const = default;
};

enum class Split { kTrain, kVal, kTest };

std::string_view ToString(Split s);
std::optional<Split> ParseSplit(std::string_view text);

/// Probability vector over the nine emotions, in kAllEmotions order.
class EmotionDistribution {
 public:
  EmotionDistribution() = default;
  /// Validates non-negativity and unit sum (1e-9); throws DataError.
  explicit EmotionDistribution(const std::array<double, kNumEmotions>& probs);

  static EmotionDistribution FromCounts(
      const std::array<std::size_t, kNumEmotions>& counts);

  double operator[](Emotion e) const { return probs_[Index(e)]; }
  const std::array<double, kNumEmotions>& probs() const { return probs_; }

  /// Largest component; ties go to the earliest emotion in fixed order.
  Emotion Argmax() const;

 private:
  std::array<double, kNumEmotions> probs_{};
};

enum class CorpusFormat { kCsv, kJsonl };

/// An immutable, artwork-indexed collection of emotion annotations.
class Corpus {
 public:
  class Builder;

  const std::vector<Artwork>& artworks() const { return artworks_; }
  const std::vector<Annotation>& annotations() const { return annotations_; }

  /// Annotation indices of one artwork, in input order.
  const std::vector<std::size_t>& AnnotationsOf(std::size_t artwork) const {
    return by_artwork_[artwork];
  }
  std::optional<std::size_t> FindArtwork(std::string_view id) const;

  bool has_splits() const { return !splits_.empty(); }
  Split SplitOf(std::size_t artwork) const { return splits_.at(artwork); }
  const std::vector<Split>& splits() const { return splits_; }

  /// Same data with the given per-artwork split (size must match).
  Corpus WithSplits(std::vector<Split> splits) const;

  /// Sub-corpus with only the artworks in `split` (artwork order kept).
  Corpus Subset(Split split) const;

  std::array<std::size_t, kNumEmotions> EmotionCounts(std::size_t artwork) const;

 private:
  std::vector<Artwork> artworks_;
  std::vector<Annotation> annotations_;
  std::vector<std::vector<std::size_t>> by_artwork_;
  std::unordered_map<std::string, std::size_t> id_index_;
  std::vector<Split> splits_;
};

class Corpus::Builder {
 public:
  /// Returns the artwork index, creating the artwork on first sight.
  std::size_t AddArtwork(Artwork artwork);
  /// Throws DataError when the utterance is blank or the artwork unknown.
  void AddAnnotation(std::string_view artwork_id, Emotion emotion,
                     std::string utterance,
                     std::optional<std::string> annotator_id = std::nullopt);
  Corpus Build() &&;

 private:
  Corpus corpus_;
};

Corpus LoadCorpus(const std::filesystem::path& path, CorpusFormat format);
/// Infers the format from the extension (.jsonl/.json → jsonl, else csv).
Corpus LoadCorpus(const std::filesystem::path& path);

void WriteCorpus(const Corpus& corpus, const std::filesystem::path& path,
                 CorpusFormat format);

/// Largest-remainder apportionment of `n` items by `ratios`; ties in the
/// remainder go to the earlier ratio.
std::array<std::size_t, 3> SplitSizes(std::size_t n,
                                      const std::array<double, 3>& ratios);

/// Seeded per-artwork shuffle then partition into train/val/test.
Corpus AssignSplits(const Corpus& corpus, const std::array<double, 3>& ratios,
                    std::uint64_t seed);

void WriteSplits(const Corpus& corpus, const std::filesystem::path& path);
/// Reads `painting,split`; the file must cover every artwork.
Corpus LoadSplits(const Corpus& corpus, const std::filesystem::path& path);

EmotionDistribution EmpiricalDistribution(const Corpus& corpus,
                                          std::string_view artwork_id);
EmotionDistribution EmpiricalDistribution(const Corpus& corpus,
                                          std::size_t artwork);

std::array<std::size_t, kNumEmotions> GlobalEmotionCounts(const Corpus& corpus);

}  // namespace emocap

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace emocap {

// Fixed order used everywhere a 9-vector of emotions appears (CSV columns,
// distributions, tie-breaks).
enum class Emotion : std::size_t {
  kAmusement = 0,
  kAwe,
  kContentment,
  kExcitement,
  kAnger,
  kDisgust,
  kFear,
  kSadness,
  kSomethingElse,
};

inline constexpr std::size_t kNumEmotions = 9;

inline constexpr std::array<Emotion, kNumEmotions> kAllEmotions = {
    Emotion::kAmusement, Emotion::kAwe,     Emotion::kContentment,
    Emotion::kExcitement, Emotion::kAnger,  Emotion::kDisgust,
    Emotion::kFear,       Emotion::kSadness, Emotion::kSomethingElse,
};

enum class SentimentGroup { kPositive, kNegative, kOther };

constexpr std::size_t Index(Emotion e) { return static_cast<std::size_t>(e); }

constexpr SentimentGroup GroupOf(Emotion e) {
  switch (e) {
    case Emotion::kAmusement:
    case Emotion::kAwe:
    case Emotion::kContentment:
    case Emotion::kExcitement:
      return SentimentGroup::kPositive;
    case Emotion::kAnger:
    case Emotion::kDisgust:
    case Emotion::kFear:
    case Emotion::kSadness:
      return SentimentGroup::kNegative;
    case Emotion::kSomethingElse:
      break;
  }
  return SentimentGroup::kOther;
}

/// Canonical lowercase name, e.g. "something else".
std::string_view ToString(Emotion e);
std::string_view ToString(SentimentGroup g);

/// Case-insensitive. Accepts "something else", "something-else" and
/// "something_else" for the ninth class.
std::optional<Emotion> ParseEmotion(std::string_view text);

}  // namespace emocap

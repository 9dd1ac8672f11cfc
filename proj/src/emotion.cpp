#include "emocap/emotion.hpp"

#include <algorithm>
#include <cctype>

namespace emocap {

namespace {

constexpr std::array<std::string_view, kNumEmotions> kNames = {
    "amusement", "awe",     "contentment", "excitement",     "anger",
    "disgust",   "fear",    "sadness",     "something else",
};

}  // namespace

std::string_view ToString(Emotion e) { return kNames[Index(e)]; }

std::string_view ToString(SentimentGroup g) {
  switch (g) {
    case SentimentGroup::kPositive:
      return "positive";
    case SentimentGroup::kNegative:
      return "negative";
    case SentimentGroup::kOther:
      break;
  }
  return "other";
}

std::optional<Emotion> ParseEmotion(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  std::string key(text);
  for (char& ch : key) {
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (ch == '-' || ch == '_') ch = ' ';
  }
  const auto* it = std::find(kNames.begin(), kNames.end(), key);
  if (it == kNames.end()) return std::nullopt;
  return static_cast<Emotion>(it - kNames.begin());
}

}  // namespace emocap

#include <algorithm>
#include <cctype>
#include <cmath>

#include "emocap/affect.hpp"

namespace emocap {

namespace {

// Decay applied to boosters two and three words before the scored word.
constexpr double kSecondWordDecay = 0.95;
constexpr double kThirdWordDecay = 0.9;
// "never so/this <word>" amplifies rather than negates.
constexpr double kNeverSoFactor = 1.25;

bool IsAsciiPunct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

std::size_t CodePoints(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// True when the word has at least one cased letter and all are uppercase.
bool IsAllCaps(std::string_view s) {
  bool cased = false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (std::islower(u)) return false;
    if (std::isupper(u)) cased = true;
  }
  return cased;
}

bool IsSpaceAt(std::string_view s, std::size_t i, std::size_t& width) {
  const auto b = static_cast<unsigned char>(s[i]);
  width = 1;
  if (b < 0x80) return std::isspace(b) != 0 || (b >= 0x1C && b <= 0x1F);
  auto byte = [&](std::size_t k) -> unsigned char {
    return i + k < s.size() ? static_cast<unsigned char>(s[i + k]) : 0;
  };
  if (b == 0xC2 && (byte(1) == 0xA0 || byte(1) == 0x85)) {
    width = 2;
    return true;
  }
  if (b == 0xE2 && byte(1) == 0x80 &&
      ((byte(2) >= 0x80 && byte(2) <= 0x8A) || byte(2) == 0xA8 ||
       byte(2) == 0xA9 || byte(2) == 0xAF)) {
    width = 3;
    return true;
  }
  if ((b == 0xE2 && byte(1) == 0x81 && byte(2) == 0x9F) ||
      (b == 0xE3 && byte(1) == 0x80 && byte(2) == 0x80) ||
      (b == 0xE1 && byte(1) == 0x9A && byte(2) == 0x80)) {
    width = 3;
    return true;
  }
  return false;
}

// Whitespace split; each piece loses edge ASCII punctuation unless that
// leaves two or fewer characters (emoticons such as ":)").
std::vector<std::string> WordsAndEmoticons(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0, i = 0, width = 0;
  auto flush = [&](std::size_t end) {
    if (end <= start) return;
    std::string_view piece = text.substr(start, end - start);
    std::string_view stripped = piece;
    while (!stripped.empty() && IsAsciiPunct(stripped.front())) stripped.remove_prefix(1);
    while (!stripped.empty() && IsAsciiPunct(stripped.back())) stripped.remove_suffix(1);
    out.emplace_back(CodePoints(stripped) <= 2 ? piece : stripped);
  };
  while (i < text.size()) {
    if (IsSpaceAt(text, i, width)) {
      flush(i);
      i += width;
      start = i;
    } else {
      ++i;
    }
  }
  flush(i);
  return out;
}

class Scorer {
 public:
  Scorer(const SentimentLexicon& lexicon, std::vector<std::string> words)
      : lex_(lexicon), c_(lexicon.constants), words_(std::move(words)) {
    lower_.reserve(words_.size());
    std::size_t caps = 0;
    for (const auto& w : words_) {
      lower_.push_back(Lower(w));
      caps += IsAllCaps(w);
    }
    const std::size_t differential = words_.size() - caps;
    cap_diff_ = differential > 0 && differential < words_.size();
  }

  std::vector<double> Valences() const {
    std::vector<double> sentiments;
    sentiments.reserve(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (c_.boosters.contains(lower_[i])) {
        sentiments.push_back(0.0);
        continue;
      }
      if (i + 1 < words_.size() && lower_[i] == "kind" && lower_[i + 1] == "of") {
        sentiments.push_back(0.0);
        continue;
      }
      sentiments.push_back(WordValence(i));
    }
    ApplyBut(sentiments);
    return sentiments;
  }

 private:
  bool InLexicon(std::size_t i) const { return lex_.valences.contains(lower_[i]); }

  bool Negated(std::size_t i) const {
    const auto& w = lower_[i];
    return std::find(c_.negations.begin(), c_.negations.end(), w) !=
               c_.negations.end() ||
           w.find("n't") != std::string::npos;
  }

  double BoosterScalar(std::size_t i, double valence) const {
    const auto it = c_.boosters.find(lower_[i]);
    if (it == c_.boosters.end()) return 0.0;
    double scalar = it->second;
    if (valence < 0) scalar = -scalar;
    if (IsAllCaps(words_[i]) && cap_diff_) {
      scalar += valence > 0 ? c_.caps_increment : -c_.caps_increment;
    }
    return scalar;
  }

  double WordValence(std::size_t i) const {
    const auto it = lex_.valences.find(lower_[i]);
    if (it == lex_.valences.end()) return 0.0;
    const double base = it->second;
    double valence = base;
    const std::size_t n = words_.size();

    if (lower_[i] == "no" && i + 1 < n && InLexicon(i + 1)) valence = 0.0;
    if ((i > 0 && lower_[i - 1] == "no") || (i > 1 && lower_[i - 2] == "no") ||
        (i > 2 && lower_[i - 3] == "no" &&
         (lower_[i - 1] == "or" || lower_[i - 1] == "nor"))) {
      valence = base * c_.negation_scalar;
    }
    if (IsAllCaps(words_[i]) && cap_diff_) {
      valence += valence > 0 ? c_.caps_increment : -c_.caps_increment;
    }

    for (std::size_t k = 0; k < c_.negation_scope; ++k) {
      if (i <= k || InLexicon(i - (k + 1))) continue;
      double s = BoosterScalar(i - (k + 1), valence);
      if (k == 1 && s != 0) s *= kSecondWordDecay;
      if (k == 2 && s != 0) s *= kThirdWordDecay;
      valence += s;
      valence = NegationCheck(valence, k, i);
      if (k == 2) valence = SpecialIdioms(valence, i);
    }
    return LeastCheck(valence, i);
  }

  double NegationCheck(double valence, std::size_t k, std::size_t i) const {
    if (k == 0) {
      if (Negated(i - 1)) valence *= c_.negation_scalar;
    } else if (k == 1) {
      if (lower_[i - 2] == "never" &&
          (lower_[i - 1] == "so" || lower_[i - 1] == "this")) {
        valence *= kNeverSoFactor;
      } else if (lower_[i - 2] == "without" && lower_[i - 1] == "doubt") {
      } else if (Negated(i - 2)) {
        valence *= c_.negation_scalar;
      }
    } else if (k == 2) {
      if ((lower_[i - 3] == "never" &&
           (lower_[i - 2] == "so" || lower_[i - 2] == "this")) ||
          (lower_[i - 1] == "so" || lower_[i - 1] == "this")) {
        valence *= kNeverSoFactor;
      } else if (lower_[i - 3] == "without" &&
                 (lower_[i - 2] == "doubt" || lower_[i - 1] == "doubt")) {
      } else if (Negated(i - 3)) {
        valence *= c_.negation_scalar;
      }
    } else if (Negated(i - (k + 1))) {
      valence *= c_.negation_scalar;
    }
    return valence;
  }

  double SpecialIdioms(double valence, std::size_t i) const {
    const auto& w = lower_;
    const std::string onezero = w[i - 1] + " " + w[i];
    const std::string twoonezero = w[i - 2] + " " + w[i - 1] + " " + w[i];
    const std::string twoone = w[i - 2] + " " + w[i - 1];
    const std::string threetwoone = w[i - 3] + " " + w[i - 2] + " " + w[i - 1];
    const std::string threetwo = w[i - 3] + " " + w[i - 2];
    for (const auto* seq : {&onezero, &twoonezero, &twoone, &threetwoone, &threetwo}) {
      if (const auto it = c_.special_cases.find(*seq); it != c_.special_cases.end()) {
        valence = it->second;
        break;
      }
    }
    if (w.size() - 1 > i) {
      const std::string zeroone = w[i] + " " + w[i + 1];
      if (const auto it = c_.special_cases.find(zeroone); it != c_.special_cases.end()) {
        valence = it->second;
      }
    }
    if (w.size() - 1 > i + 1) {
      const std::string zeroonetwo = w[i] + " " + w[i + 1] + " " + w[i + 2];
      if (const auto it = c_.special_cases.find(zeroonetwo);
          it != c_.special_cases.end()) {
        valence = it->second;
      }
    }
    for (const auto* gram : {&threetwoone, &threetwo, &twoone}) {
      if (const auto it = c_.boosters.find(*gram); it != c_.boosters.end()) {
        valence += it->second;
      }
    }
    return valence;
  }

  double LeastCheck(double valence, std::size_t i) const {
    if (i > 1 && !InLexicon(i - 1) && lower_[i - 1] == "least") {
      if (lower_[i - 2] != "at" && lower_[i - 2] != "very") {
        valence *= c_.negation_scalar;
      }
    } else if (i > 0 && !InLexicon(i - 1) && lower_[i - 1] == "least") {
      valence *= c_.negation_scalar;
    }
    return valence;
  }

  // Words before the first "but" are down-weighted and words after it
  // up-weighted. Positions are resolved by first occurrence of each value,
  // as the reference analyzer does, so repeated valences share a slot.
  void ApplyBut(std::vector<double>& s) const {
    const auto but = std::find(lower_.begin(), lower_.end(), "but");
    if (but == lower_.end()) return;
    const auto bi = static_cast<std::size_t>(but - lower_.begin());
    for (std::size_t k = 0; k < s.size(); ++k) {
      const double value = s[k];
      const auto si = static_cast<std::size_t>(
          std::find(s.begin(), s.end(), value) - s.begin());
      if (si < bi) {
        s[si] = value * c_.but_before_weight;
      } else if (si > bi) {
        s[si] = value * c_.but_after_weight;
      }
    }
  }

  const SentimentLexicon& lex_;
  const SentimentConstants& c_;
  std::vector<std::string> words_;
  std::vector<std::string> lower_;
  bool cap_diff_ = false;
};

double PunctuationEmphasis(std::string_view text, const SentimentConstants& c) {
  const auto bangs = std::min<std::size_t>(
      static_cast<std::size_t>(std::count(text.begin(), text.end(), '!')),
      c.exclamation_cap);
  const double ep = static_cast<double>(bangs) * c.exclamation_weight;
  const auto questions =
      static_cast<std::size_t>(std::count(text.begin(), text.end(), '?'));
  double qm = 0.0;
  if (questions > 1) {
    qm = questions <= 3 ? static_cast<double>(questions) * c.question_weight
                        : c.question_cap_value;
  }
  return ep + qm;
}

std::string_view StripSpace(std::string_view s) {
  std::size_t w = 0;
  while (!s.empty() && IsSpaceAt(s, 0, w)) s.remove_prefix(w);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view ToString(SentimentClass c) {
  switch (c) {
    case SentimentClass::kPositive:
      return "POSITIVE";
    case SentimentClass::kNegative:
      return "NEGATIVE";
    case SentimentClass::kNeutral:
      break;
  }
  return "NEUTRAL";
}

SentimentResult Sentiment(std::string_view text, const SentimentLexicon& lexicon) {
  const auto& c = lexicon.constants;
  text = StripSpace(text);
  const Scorer scorer(lexicon, WordsAndEmoticons(text));
  const auto sentiments = scorer.Valences();

  SentimentResult result;
  if (sentiments.empty()) return result;

  double sum = 0.0;
  for (double s : sentiments) sum += s;
  const double emphasis = PunctuationEmphasis(text, c);
  if (sum > 0) {
    sum += emphasis;
  } else if (sum < 0) {
    sum -= emphasis;
  }
  result.compound =
      std::clamp(sum / std::sqrt(sum * sum + c.normalization_alpha), -1.0, 1.0);

  double pos = 0.0, neg = 0.0, neu = 0.0;
  for (double s : sentiments) {
    if (s > 0) pos += s + 1;
    if (s < 0) neg += s - 1;
    if (s == 0) neu += 1;
  }
  if (pos > std::abs(neg)) {
    pos += emphasis;
  } else if (pos < std::abs(neg)) {
    neg -= emphasis;
  }
  const double total = pos + std::abs(neg) + neu;
  result.positive = std::abs(pos / total);
  result.negative = std::abs(neg / total);
  result.neutral = std::abs(neu / total);

  if (std::abs(result.compound) < c.neutral_threshold) {
    result.label = SentimentClass::kNeutral;
  } else {
    result.label = result.compound > 0 ? SentimentClass::kPositive
                                       : SentimentClass::kNegative;
  }
  return result;
}

}  // namespace emocap

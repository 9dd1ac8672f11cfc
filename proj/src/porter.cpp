#include "emocap/porter.hpp"

#include <algorithm>

namespace emocap {

namespace {

class Stemmer {
 public:
  explicit Stemmer(std::string_view word) : b_(word) {}

  std::string Run() {
    if (b_.size() <= 2) return b_;
    Step1ab();
    if (b_.size() > 1) {
      Step1c();
      Step2();
      Step3();
      Step4();
      Step5();
    }
    return b_;
  }

 private:
  bool Cons(std::size_t i) const {
    switch (b_[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 || !Cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0, j_] (the stem before the suffix).
  int Measure() const {
    int n = 0;
    std::size_t i = 0;
    while (true) {
      if (i >= j_) return n;
      if (!Cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i >= j_) return n;
        if (Cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i >= j_) return n;
        if (!Cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool VowelInStem() const {
    for (std::size_t i = 0; i < j_; ++i) {
      if (!Cons(i)) return true;
    }
    return false;
  }

  bool DoubleCons(std::size_t end) const {
    return end >= 2 && b_[end - 1] == b_[end - 2] && Cons(end - 1);
  }

  // consonant-vowel-consonant ending at stem end, last not w/x/y
  bool Cvc(std::size_t end) const {
    if (end < 3 || !Cons(end - 1) || Cons(end - 2) || !Cons(end - 3)) return false;
    const char c = b_[end - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool Ends(std::string_view s) {
    if (!std::string_view(b_).ends_with(s)) return false;
    j_ = b_.size() - s.size();
    return true;
  }

  void SetTo(std::string_view s) {
    b_.resize(j_);
    b_.append(s);
  }

  void ReplaceIfMeasured(std::string_view s) {
    if (Measure() > 0) SetTo(s);
  }

  void Step1ab() {
    if (b_.back() == 's') {
      if (Ends("sses")) {
        SetTo("ss");
      } else if (Ends("ies")) {
        SetTo("i");
      } else if (b_.size() >= 2 && b_[b_.size() - 2] != 's') {
        b_.pop_back();
      }
    }
    if (Ends("eed")) {
      if (Measure() > 0) b_.pop_back();
      return;
    }
    if ((Ends("ed") || Ends("ing")) && VowelInStem()) {
      b_.resize(j_);
      j_ = b_.size();
      if (Ends("at")) {
        SetTo("ate");
      } else if (Ends("bl")) {
        SetTo("ble");
      } else if (Ends("iz")) {
        SetTo("ize");
      } else if (DoubleCons(b_.size())) {
        const char c = b_.back();
        if (c != 'l' && c != 's' && c != 'z') b_.pop_back();
      } else {
        j_ = b_.size();
        if (Measure() == 1 && Cvc(b_.size())) b_.push_back('e');
      }
    }
  }

  void Step1c() {
    if (Ends("y")) {
      if (VowelInStem()) b_.back() = 'i';
    }
  }

  void Step2() {
    static constexpr std::pair<std::string_view, std::string_view> kRules[] = {
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
        {"anci", "ance"},   {"izer", "ize"},    {"bli", "ble"},
        {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
        {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
        {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
        {"iviti", "ive"},   {"biliti", "ble"},  {"logi", "log"},
    };
    for (const auto& [suffix, repl] : kRules) {
      if (Ends(suffix)) {
        ReplaceIfMeasured(repl);
        return;
      }
    }
  }

  void Step3() {
    static constexpr std::pair<std::string_view, std::string_view> kRules[] = {
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""},
    };
    for (const auto& [suffix, repl] : kRules) {
      if (Ends(suffix)) {
        ReplaceIfMeasured(repl);
        return;
      }
    }
  }

  void Step4() {
    static constexpr std::string_view kSuffixes[] = {
        "al",   "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
        "ment", "ent",  "ion",  "ou",  "ism", "ate",  "iti",  "ous", "ive",
        "ize",
    };
    for (auto suffix : kSuffixes) {
      if (!Ends(suffix)) continue;
      if (suffix == "ion" && !(j_ > 0 && (b_[j_ - 1] == 's' || b_[j_ - 1] == 't'))) {
        return;
      }
      if (Measure() > 1) b_.resize(j_);
      return;
    }
  }

  void Step5() {
    j_ = b_.size();
    if (b_.back() == 'e') {
      j_ = b_.size() - 1;
      const int m = Measure();
      if (m > 1 || (m == 1 && !Cvc(j_))) b_.pop_back();
    }
    j_ = b_.size();
    if (b_.back() == 'l' && DoubleCons(b_.size()) && Measure() > 1) b_.pop_back();
  }

  std::string b_;
  std::size_t j_ = 0;
};

}  // namespace

std::string PorterStem(std::string_view word) {
  if (!std::all_of(word.begin(), word.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
    return std::string(word);
  }
  return Stemmer(word).Run();
}

}  // namespace emocap

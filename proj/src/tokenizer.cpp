#include <array>
#include <cctype>

#include "emocap/textproc.hpp"

namespace emocap {

namespace {

// Byte length of a whitespace code point starting at s[i], or 0.
std::size_t WhitespaceAt(std::string_view s, std::size_t i) {
  const auto b = static_cast<unsigned char>(s[i]);
  if (b < 0x80) return std::isspace(b) ? 1 : 0;
  auto byte = [&](std::size_t k) -> unsigned char {
    return i + k < s.size() ? static_cast<unsigned char>(s[i + k]) : 0;
  };
  if (b == 0xC2 && (byte(1) == 0xA0 || byte(1) == 0x85)) return 2;
  if (b == 0xE2 && byte(1) == 0x80) {
    const unsigned char c = byte(2);
    if ((c >= 0x80 && c <= 0x8B) || c == 0xA8 || c == 0xA9 || c == 0xAF) return 3;
  }
  if (b == 0xE2 && byte(1) == 0x81 && byte(2) == 0x9F) return 3;
  if (b == 0xE3 && byte(1) == 0x80 && byte(2) == 0x80) return 3;
  return 0;
}

// Multi-byte punctuation stripped from token edges.
constexpr std::array<std::string_view, 12> kUnicodePunct = {
    "\xE2\x80\x98", "\xE2\x80\x99", "\xE2\x80\x9C", "\xE2\x80\x9D",  // quotes
    "\xE2\x80\xA6",                                                  // ellipsis
    "\xE2\x80\x93", "\xE2\x80\x94",                                  // dashes
    "\xC2\xAB",     "\xC2\xBB",     "\xC2\xB7",                      // « » ·
    "\xC2\xBF",     "\xC2\xA1",                                      // ¿ ¡
};

std::size_t PunctPrefix(std::string_view s) {
  if (s.empty()) return 0;
  if (static_cast<unsigned char>(s[0]) < 0x80) return std::ispunct(static_cast<unsigned char>(s[0])) ? 1 : 0;
  for (auto p : kUnicodePunct) {
    if (s.starts_with(p)) return p.size();
  }
  return 0;
}

std::size_t PunctSuffix(std::string_view s) {
  if (s.empty()) return 0;
  const auto last = static_cast<unsigned char>(s.back());
  if (last < 0x80) return std::ispunct(last) ? 1 : 0;
  for (auto p : kUnicodePunct) {
    if (s.ends_with(p)) return p.size();
  }
  return 0;
}

constexpr std::array<std::string_view, 6> kClitics = {"s", "re", "ve",
                                                      "ll", "d", "m"};

bool IsClitic(std::string_view s) {
  for (auto c : kClitics) {
    if (s == c) return true;
  }
  return false;
}

std::string Normalize(std::string_view piece) {
  std::string out;
  out.reserve(piece.size());
  for (std::size_t i = 0; i < piece.size(); ++i) {
    // Typographic apostrophe → ASCII.
    if (piece.substr(i).starts_with("\xE2\x80\x99")) {
      out.push_back('\'');
      i += 2;
      continue;
    }
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(piece[i]))));
  }
  return out;
}

void EmitToken(std::string_view piece, std::vector<std::string>& out) {
  std::string word = Normalize(piece);
  std::string_view view = word;
  while (std::size_t n = PunctSuffix(view)) view.remove_suffix(n);
  // A bare clitic ("'s") keeps its apostrophe so re-tokenizing is stable.
  const bool clitic =
      view.size() > 1 && view[0] == '\'' && IsClitic(view.substr(1));
  if (!clitic) {
    while (std::size_t n = PunctPrefix(view)) view.remove_prefix(n);
  }
  if (view.empty()) return;

  if (view.size() > 3 && view.ends_with("n't")) {
    out.emplace_back(view.substr(0, view.size() - 3));
    out.emplace_back("n't");
    return;
  }
  const std::size_t apos = view.rfind('\'');
  if (apos != std::string_view::npos && apos > 0 &&
      IsClitic(view.substr(apos + 1))) {
    out.emplace_back(view.substr(0, apos));
    out.emplace_back(view.substr(apos));
    return;
  }
  out.emplace_back(view);
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (const std::size_t ws = WhitespaceAt(text, i)) {
      if (i > start) EmitToken(text.substr(start, i - start), tokens);
      i += ws;
      start = i;
    } else {
      ++i;
    }
  }
  if (i > start) EmitToken(text.substr(start, i - start), tokens);
  return tokens;
}

}  // namespace emocap

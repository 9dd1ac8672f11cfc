#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "emocap/textproc.hpp"

namespace emocap {

namespace {

using Table = std::unordered_map<std::string_view, std::string_view>;

const Table& VerbExceptions() {
  static const Table table = {
      {"am", "be"},          {"is", "be"},          {"are", "be"},
      {"was", "be"},         {"were", "be"},        {"been", "be"},
      {"being", "be"},       {"'m", "be"},          {"'re", "be"},
      {"has", "have"},       {"had", "have"},       {"having", "have"},
      {"'ve", "have"},       {"does", "do"},        {"did", "do"},
      {"done", "do"},        {"doing", "do"},       {"'ll", "will"},
      {"wo", "will"},        {"ca", "can"},         {"went", "go"},
      {"gone", "go"},        {"goes", "go"},        {"saw", "see"},
      {"seen", "see"},       {"made", "make"},      {"took", "take"},
      {"taken", "take"},     {"gave", "give"},      {"given", "give"},
      {"came", "come"},      {"felt", "feel"},      {"thought", "think"},
      {"told", "tell"},      {"said", "say"},       {"knew", "know"},
      {"known", "know"},     {"got", "get"},        {"gotten", "get"},
      {"found", "find"},     {"left", "leave"},     {"brought", "bring"},
      {"bought", "buy"},     {"kept", "keep"},      {"held", "hold"},
      {"stood", "stand"},    {"sat", "sit"},        {"ran", "run"},
      {"began", "begin"},    {"begun", "begin"},    {"drew", "draw"},
      {"drawn", "draw"},     {"wore", "wear"},      {"worn", "wear"},
      {"ate", "eat"},        {"eaten", "eat"},      {"fell", "fall"},
      {"fallen", "fall"},    {"grew", "grow"},      {"grown", "grow"},
      {"flew", "fly"},       {"flown", "fly"},      {"lay", "lie"},
      {"lain", "lie"},       {"led", "lead"},       {"lost", "lose"},
      {"meant", "mean"},     {"met", "meet"},       {"paid", "pay"},
      {"rose", "rise"},      {"risen", "rise"},     {"sang", "sing"},
      {"sung", "sing"},      {"sent", "send"},      {"shook", "shake"},
      {"shaken", "shake"},   {"shone", "shine"},    {"slept", "sleep"},
      {"spoke", "speak"},    {"spoken", "speak"},   {"spent", "spend"},
      {"stole", "steal"},    {"stolen", "steal"},   {"struck", "strike"},
      {"swam", "swim"},      {"taught", "teach"},   {"threw", "throw"},
      {"thrown", "throw"},   {"understood", "understand"},
      {"woke", "wake"},      {"woken", "wake"},     {"won", "win"},
      {"wrote", "write"},    {"written", "write"},  {"broke", "break"},
      {"broken", "break"},   {"built", "build"},    {"caught", "catch"},
      {"chose", "choose"},   {"chosen", "choose"},  {"dealt", "deal"},
      {"dug", "dig"},        {"drank", "drink"},    {"drunk", "drink"},
      {"drove", "drive"},    {"driven", "drive"},   {"fought", "fight"},
      {"forgot", "forget"},  {"forgotten", "forget"},
      {"froze", "freeze"},   {"frozen", "freeze"},  {"hid", "hide"},
      {"hidden", "hide"},    {"hung", "hang"},      {"heard", "hear"},
      {"knelt", "kneel"},    {"laid", "lay"},       {"lit", "light"},
      {"rode", "ride"},      {"ridden", "ride"},    {"rang", "ring"},
      {"rung", "ring"},      {"sought", "seek"},    {"sold", "sell"},
      {"shot", "shoot"},     {"sank", "sink"},      {"sunk", "sink"},
      {"slid", "slide"},     {"spun", "spin"},      {"stuck", "stick"},
      {"swept", "sweep"},    {"swung", "swing"},    {"tore", "tear"},
      {"torn", "tear"},      {"wept", "weep"},      {"became", "become"},
      {"felt", "feel"},      {"dying", "die"},      {"lying", "lie"},
      {"tying", "tie"},      {"seeing", "see"},     {"fleeing", "flee"},
      {"could", "can"},      {"would", "will"},     {"should", "shall"},
      {"might", "may"},
  };
  return table;
}

const Table& NounExceptions() {
  static const Table table = {
      {"men", "man"},         {"women", "woman"},   {"children", "child"},
      {"people", "person"},   {"feet", "foot"},     {"teeth", "tooth"},
      {"mice", "mouse"},      {"geese", "goose"},   {"leaves", "leaf"},
      {"wolves", "wolf"},     {"knives", "knife"},  {"lives", "life"},
      {"wives", "wife"},      {"shelves", "shelf"}, {"halves", "half"},
      {"selves", "self"},     {"oxen", "ox"},       {"thieves", "thief"},
      {"loaves", "loaf"},     {"calves", "calf"},   {"scarves", "scarf"},
      {"waves", "wave"},      {"eyes", "eye"},      {"clothes", "clothes"},
      {"horses", "horse"},    {"houses", "house"},  {"faces", "face"},
      {"places", "place"},    {"shapes", "shape"},  {"lines", "line"},
      {"colors", "color"},    {"hues", "hue"},      {"trees", "tree"},
      {"ladies", "lady"},     {"skies", "sky"},     {"cities", "city"},
      {"bodies", "body"},     {"news", "news"},     {"series", "series"},
      {"species", "species"}, {"canvas", "canvas"}, {"glasses", "glass"},
      {"dresses", "dress"},   {"data", "datum"},    {"criteria", "criterion"},
      {"phenomena", "phenomenon"},                  {"cacti", "cactus"},
      {"vases", "vase"},      {"noses", "nose"},    {"roses", "rose"},
      {"cases", "case"},      {"bases", "base"},    {"phrases", "phrase"},
      {"nurses", "nurse"},    {"purses", "purse"},  {"verses", "verse"},
      {"causes", "cause"},    {"pauses", "pause"},  {"muses", "muse"},
      {"movies", "movie"},    {"cookies", "cookie"}, {"zombies", "zombie"},
      {"prairies", "prairie"}, {"lens", "lens"},    {"buses", "bus"},
  };
  return table;
}

const Table& AdjExceptions() {
  static const Table table = {
      {"better", "good"}, {"best", "good"},   {"worse", "bad"},
      {"worst", "bad"},   {"more", "much"},   {"most", "much"},
      {"less", "little"}, {"least", "little"}, {"further", "far"},
      {"farther", "far"}, {"furthest", "far"}, {"elder", "old"},
      {"eldest", "old"},
  };
  return table;
}

// Lemmas ending in a silent 'e' that suffix stripping would otherwise lose.
const std::unordered_set<std::string_view>& SilentE() {
  static const std::unordered_set<std::string_view> set = {
      "make",    "take",     "give",    "have",     "love",     "like",
      "use",     "smile",    "move",    "create",   "believe",  "leave",
      "live",    "imagine",  "come",    "become",   "hope",     "care",
      "dance",   "face",     "gaze",    "hate",     "close",    "lose",
      "notice",  "picture",  "place",   "shine",    "stare",    "rage",
      "rise",    "ride",     "write",   "wave",     "scare",    "surprise",
      "inspire", "evoke",    "provoke", "admire",   "adore",    "capture",
      "choose",  "continue", "decide",  "describe", "desire",   "excite",
      "explore", "feature",  "fade",    "glare",    "guide",    "ignore",
      "judge",   "manage",   "observe", "perceive", "prepare",  "promise",
      "prove",   "raise",    "realize", "receive",  "relate",   "release",
      "remove",  "require",  "resemble", "rescue",  "serve",    "share",
      "shape",   "solve",    "sparkle", "struggle", "suppose",  "tease",
      "tire",    "trade",    "value",   "amuse",    "bore",     "confuse",
      "disgust", "enclose",  "engage",  "escape",   "frame",    "graze",
      "hide",    "include",  "invite",  "dine",     "merge",    "paste",
      "pose",    "praise",   "produce", "rule",     "save",     "scrape",
      "settle",  "skate",    "smoke",   "sense",    "strike",   "tackle",
      "tickle",  "wade",     "wipe",    "wrestle",  "nice",     "large",
      "strange", "pale",     "wide",    "simple",   "gentle",   "subtle",
      "fine",    "rare",     "late",    "blue",     "true",     "free",
      "safe",    "cute",     "white",   "loose",    "brave",    "wise",
      "close",   "huge",     "pure",    "ripe",     "sure",     "tame",
      "vague",   "cave",     "dare",    "lie",      "tie",      "die",
      "bake",    "combine",  "compare", "damage",   "define",   "diffuse",
      "divide",  "emerge",   "encourage", "examine", "fuse",    "hire",
      "increase", "decrease", "lure",   "mistake",  "owe",      "please",
      "reduce",  "refuse",   "revere",  "seize",    "shove",    "strive",
      "vote",    "wake",     "breathe", "bathe",    "soothe",   "argue",
      "cause",   "change",   "charge",  "arrange",  "rescue",   "invoke",
  };
  return set;
}

// Words ending in -er/-est that are not comparatives.
const std::unordered_set<std::string_view>& AdjKeep() {
  static const std::unordered_set<std::string_view> set = {
      "other",  "over",   "under",  "eager",  "silver", "clever", "bitter",
      "tender", "proper", "sober",  "super",  "former", "inner",  "outer",
      "upper",  "lower",  "utter",  "sheer",  "slender", "somber", "sombre",
      "modest", "honest", "latter", "bizarre", "whether", "never",  "ever",
      "after",  "amber",  "sinister", "clear",  "dear",   "near",  "severe",
      "sincere", "mere",  "austere", "eerie", "queer", "ajar", "earnest",
  };
  return set;
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Restores a dropped 'e' or undoubles a consonant after -ing/-ed/-er/-est.
std::string FixStem(std::string stem) {
  if (stem.empty()) return stem;
  if (SilentE().contains(stem + "e")) return stem + "e";
  const std::size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && !IsVowel(stem[n - 1]) &&
      stem[n - 1] != 'l' && stem[n - 1] != 's' && stem[n - 1] != 'z' &&
      stem[n - 1] != 'f') {
    stem.pop_back();
    return stem;
  }
  if (stem.ends_with("at") || stem.ends_with("bl") || stem.ends_with("iz")) {
    return stem + "e";
  }
  return stem;
}

bool EndsWithSibilant(std::string_view s) {
  return s.ends_with("s") || s.ends_with("x") || s.ends_with("z") ||
         s.ends_with("ch") || s.ends_with("sh");
}

std::string NounLemma(std::string_view w) {
  if (w.size() > 4 && w.ends_with("ies")) {
    return std::string(w.substr(0, w.size() - 3)) + "y";
  }
  if (w.size() > 4 && w.ends_with("es") &&
      EndsWithSibilant(w.substr(0, w.size() - 2))) {
    return std::string(w.substr(0, w.size() - 2));
  }
  if (w.size() > 3 && w.ends_with("s") && !w.ends_with("ss") &&
      !w.ends_with("us") && !w.ends_with("is") && !w.ends_with("'s")) {
    return std::string(w.substr(0, w.size() - 1));
  }
  return std::string(w);
}

std::string VerbLemma(std::string_view w) {
  if (w.size() > 4 && w.ends_with("ies")) {
    return std::string(w.substr(0, w.size() - 3)) + "y";
  }
  if (w.size() > 4 && w.ends_with("ied")) {
    return std::string(w.substr(0, w.size() - 3)) + "y";
  }
  if (w.size() > 4 && w.ends_with("ing")) {
    return FixStem(std::string(w.substr(0, w.size() - 3)));
  }
  if (w.size() > 3 && w.ends_with("ed")) {
    if (SilentE().contains(w.substr(0, w.size() - 1))) {
      return std::string(w.substr(0, w.size() - 1));
    }
    return FixStem(std::string(w.substr(0, w.size() - 2)));
  }
  if (w.size() > 4 && w.ends_with("es") &&
      EndsWithSibilant(w.substr(0, w.size() - 2))) {
    return std::string(w.substr(0, w.size() - 2));
  }
  if (w.size() > 3 && w.ends_with("s") && !w.ends_with("ss") &&
      !w.ends_with("us") && !w.ends_with("is")) {
    return std::string(w.substr(0, w.size() - 1));
  }
  return std::string(w);
}

std::string AdjLemma(std::string_view w) {
  if (AdjKeep().contains(w)) return std::string(w);
  if (w.size() > 5 && w.ends_with("iest")) {
    return std::string(w.substr(0, w.size() - 4)) + "y";
  }
  if (w.size() > 4 && w.ends_with("ier")) {
    return std::string(w.substr(0, w.size() - 3)) + "y";
  }
  if (w.size() > 5 && w.ends_with("est")) {
    if (SilentE().contains(w.substr(0, w.size() - 2))) {
      return std::string(w.substr(0, w.size() - 2));
    }
    return FixStem(std::string(w.substr(0, w.size() - 3)));
  }
  if (w.size() > 4 && w.ends_with("er")) {
    if (SilentE().contains(w.substr(0, w.size() - 1))) {
      return std::string(w.substr(0, w.size() - 1));
    }
    return FixStem(std::string(w.substr(0, w.size() - 2)));
  }
  return std::string(w);
}

}  // namespace

std::string Lemmatize(std::string_view token, PosTag tag) {
  if (token.empty()) return std::string(token);
  if (token == "n't") return "not";

  const Table* exceptions = nullptr;
  switch (tag) {
    case PosTag::kVerb:
      exceptions = &VerbExceptions();
      break;
    case PosTag::kNoun:
      exceptions = &NounExceptions();
      break;
    case PosTag::kAdj:
      exceptions = &AdjExceptions();
      break;
    default:
      break;
  }
  if (exceptions) {
    if (const auto it = exceptions->find(token); it != exceptions->end()) {
      return std::string(it->second);
    }
  }
  // Rules only touch plain alphabetic words.
  if (!std::all_of(token.begin(), token.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || c == '-';
      })) {
    return std::string(token);
  }
  std::string lemma;
  switch (tag) {
    case PosTag::kNoun:
      lemma = NounLemma(token);
      break;
    case PosTag::kVerb:
      lemma = VerbLemma(token);
      break;
    case PosTag::kAdj:
      lemma = AdjLemma(token);
      break;
    default:
      return std::string(token);
  }
  return lemma.empty() ? std::string(token) : lemma;
}

}  // namespace emocap

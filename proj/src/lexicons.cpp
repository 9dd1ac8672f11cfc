#include "emocap/lexicons.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "emocap/csv.hpp"
#include "emocap/error.hpp"
#include "json.hpp"

namespace emocap {

namespace {

std::ifstream Open(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

double ParseNumber(std::string_view text, const std::string& file,
                   std::size_t row, const std::string& column) {
  text = Trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw DataError("not a number: \"" + std::string(text) + "\"", file, row, column);
  }
  return value;
}

void CheckRange(double value, double lo, double hi, const std::string& file,
                std::size_t row, const std::string& column) {
  if (value < lo || value > hi) {
    std::ostringstream msg;
    msg << "value " << value << " outside [" << lo << ", " << hi << "]";
    throw DataError(msg.str(), file, row, column);
  }
}

template <typename Map, typename Value>
void InsertLastWins(Map& map, std::string key, Value value, std::size_t& duplicates) {
  auto [it, inserted] = map.try_emplace(std::move(key), value);
  if (!inserted) {
    it->second = value;
    ++duplicates;
  }
}

}  // namespace

std::optional<double> ConcretenessLexicon::Lookup(std::string_view lemma) const {
  const auto it = ratings.find(std::string(lemma));
  if (it == ratings.end()) return std::nullopt;
  return it->second;
}

std::optional<double> SentimentLexicon::Lookup(std::string_view token) const {
  const auto it = valences.find(std::string(token));
  if (it == valences.end()) return std::nullopt;
  return it->second;
}

const SubjectivityEntry* SubjectivityLexicon::Lookup(std::string_view lemma,
                                                     PosTag tag) const {
  const auto it = entries.find(lemma);
  if (it == entries.end()) return nullptr;
  const auto& per_tag = it->second;
  if (const auto& exact = per_tag[static_cast<std::size_t>(tag)]) return &*exact;
  for (const auto& e : per_tag) {
    if (e) return &*e;
  }
  return nullptr;
}

SimileLemmaList SimileLemmaList::FromPatterns(std::vector<std::string> patterns) {
  SimileLemmaList list;
  for (auto& p : patterns) {
    std::string pattern = Lower(Trim(p));
    if (pattern.empty()) throw DataError("empty simile pattern");
    if (std::find(list.patterns.begin(), list.patterns.end(), pattern) !=
        list.patterns.end()) {
      throw DataError("duplicate simile pattern \"" + pattern + "\"");
    }
    std::istringstream words(pattern);
    std::vector<std::string> tokens;
    std::string w;
    while (words >> w) tokens.push_back(w);
    list.patterns.push_back(std::move(pattern));
    list.tokenized.push_back(std::move(tokens));
  }
  return list;
}

std::string_view ToString(Polarity p) {
  return p == Polarity::kPositive ? "POSITIVE" : "NEGATIVE";
}

std::optional<Polarity> ParsePolarity(std::string_view text) {
  const std::string lower = Lower(Trim(text));
  if (lower == "positive" || lower == "pos") return Polarity::kPositive;
  if (lower == "negative" || lower == "neg") return Polarity::kNegative;
  return std::nullopt;
}

std::vector<std::size_t> AnpLexicon::ForNoun(std::string_view noun,
                                             Polarity sentiment) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].noun == noun && entries[i].sentiment == sentiment) out.push_back(i);
  }
  return out;
}

bool AnpLexicon::HasNoun(std::string_view noun, Polarity sentiment) const {
  return std::any_of(entries.begin(), entries.end(), [&](const AnpEntry& e) {
    return e.noun == noun && e.sentiment == sentiment;
  });
}

SentimentConstants SentimentConstants::Defaults() {
  SentimentConstants c;
  for (const char* w :
       {"absolutely", "amazingly", "awfully", "completely", "considerable",
        "considerably", "decidedly", "deeply", "effing", "enormous",
        "enormously", "entirely", "especially", "exceptional", "exceptionally",
        "extreme", "extremely", "fabulously", "flipping", "flippin", "frackin",
        "fracking", "fricking", "frickin", "frigging", "friggin", "fully",
        "fuckin", "fucking", "fuggin", "fugging", "greatly", "hella", "highly",
        "hugely", "incredible", "incredibly", "intensely", "major", "majorly",
        "more", "most", "particularly", "purely", "quite", "really",
        "remarkably", "so", "substantially", "thoroughly", "total", "totally",
        "tremendous", "tremendously", "uber", "unbelievably", "unusually",
        "utter", "utterly", "very"}) {
    c.boosters[w] = c.booster_increment;
  }
  for (const char* w :
       {"almost", "barely", "hardly", "just enough", "kind of", "kinda",
        "kindof", "kind-of", "less", "little", "marginal", "marginally",
        "occasional", "occasionally", "partly", "scarce", "scarcely", "slight",
        "slightly", "somewhat", "sort of", "sorta", "sortof", "sort-of"}) {
    c.boosters[w] = c.booster_decrement;
  }
  c.negations = {
      "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt",
      "doesnt", "ain't", "aren't", "can't", "couldn't", "daren't", "didn't",
      "doesn't", "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt",
      "mustnt", "neither", "don't", "hadn't", "hasn't", "haven't", "isn't",
      "mightn't", "mustn't", "neednt", "needn't", "never", "none", "nope",
      "nor", "not", "nothing", "nowhere", "oughtnt", "shant", "shouldnt",
      "uhuh", "wasnt", "werent", "oughtn't", "shan't", "shouldn't", "uh-uh",
      "wasn't", "weren't", "without", "wont", "wouldnt", "won't", "wouldn't",
      "rarely", "seldom", "despite"};
  c.special_cases = {{"the shit", 3.0},     {"the bomb", 3.0},
                     {"bad ass", 1.5},      {"badass", 1.5},
                     {"bus stop", 0.0},     {"yeah right", -2.0},
                     {"kiss of death", -1.5}, {"to die for", 3.0},
                     {"beating heart", 3.5}};
  return c;
}

SentimentConstants LoadSentimentConstants(const std::filesystem::path& path) {
  auto in = Open(path);
  SentimentConstants c = SentimentConstants::Defaults();
  try {
    const auto doc = nlohmann::json::parse(in);
    auto number = [&](const char* key, double& field) {
      if (doc.contains(key)) field = doc.at(key).get<double>();
    };
    auto count = [&](const char* key, std::size_t& field) {
      if (doc.contains(key)) field = doc.at(key).get<std::size_t>();
    };
    number("booster_increment", c.booster_increment);
    number("booster_decrement", c.booster_decrement);
    number("caps_increment", c.caps_increment);
    number("negation_scalar", c.negation_scalar);
    number("normalization_alpha", c.normalization_alpha);
    count("negation_scope", c.negation_scope);
    number("but_before_weight", c.but_before_weight);
    number("but_after_weight", c.but_after_weight);
    number("exclamation_weight", c.exclamation_weight);
    count("exclamation_cap", c.exclamation_cap);
    number("question_weight", c.question_weight);
    number("question_cap_value", c.question_cap_value);
    number("neutral_threshold", c.neutral_threshold);
    if (doc.contains("boosters")) {
      c.boosters.clear();
      for (const auto& [k, v] : doc.at("boosters").items()) c.boosters[Lower(k)] = v.get<double>();
    }
    if (doc.contains("negations")) {
      c.negations.clear();
      for (const auto& w : doc.at("negations")) c.negations.push_back(Lower(w.get<std::string>()));
    }
    if (doc.contains("special_cases")) {
      c.special_cases.clear();
      for (const auto& [k, v] : doc.at("special_cases").items()) {
        c.special_cases[Lower(k)] = v.get<double>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed sentiment constants: ") + e.what(),
                    path.string(), 1);
  }
  if (!(c.normalization_alpha > 0.0)) {
    throw DataError("normalization_alpha must be positive", path.string(), 1,
                    "normalization_alpha");
  }
  if (c.negation_scope == 0) {
    throw DataError("negation_scope must be positive", path.string(), 1,
                    "negation_scope");
  }
  return c;
}

ConcretenessLexicon LoadConcreteness(const std::filesystem::path& path) {
  auto in = Open(path);
  const std::string file = path.string();
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty file", file, 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = SplitTabs(line);
  const auto word_col = std::find(header.begin(), header.end(), "Word");
  const auto conc_col = std::find(header.begin(), header.end(), "Conc.M");
  if (word_col == header.end() || conc_col == header.end()) {
    throw DataError("header must contain Word and Conc.M columns", file, 1);
  }
  const auto wi = static_cast<std::size_t>(word_col - header.begin());
  const auto ci = static_cast<std::size_t>(conc_col - header.begin());

  ConcretenessLexicon lex;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() <= std::max(wi, ci)) {
      throw DataError("too few columns", file, row);
    }
    const std::string word = Lower(Trim(fields[wi]));
    if (word.empty()) throw DataError("empty word", file, row, "Word");
    const double rating = ParseNumber(fields[ci], file, row, "Conc.M");
    CheckRange(rating, 1.0, 5.0, file, row, "Conc.M");
    InsertLastWins(lex.ratings, word, rating, lex.duplicates);
  }
  return lex;
}

SentimentLexicon LoadSentiment(
    const std::filesystem::path& path,
    const std::optional<std::filesystem::path>& constants_path) {
  auto in = Open(path);
  const std::string file = path.string();
  SentimentLexicon lex;
  if (constants_path) lex.constants = LoadSentimentConstants(*constants_path);
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() < 2) throw DataError("expected token<TAB>valence", file, row);
    const std::string token = Lower(Trim(fields[0]));
    if (token.empty()) throw DataError("empty token", file, row, "token");
    const double valence = ParseNumber(fields[1], file, row, "valence");
    CheckRange(valence, -4.0, 4.0, file, row, "valence");
    InsertLastWins(lex.valences, token, valence, lex.duplicates);
  }
  if (lex.valences.empty()) throw DataError("empty file", file, 1);
  return lex;
}

SubjectivityLexicon LoadSubjectivity(const std::filesystem::path& path) {
  auto in = Open(path);
  const std::string file = path.string();
  csv::Reader reader(in);
  const auto header = reader.Next();
  const std::vector<std::string> expected = {"lemma", "tag", "polarity",
                                             "subjectivity", "intensity"};
  if (!header || *header != expected) {
    throw DataError("expected header lemma,tag,polarity,subjectivity,intensity",
                    file, 1);
  }
  SubjectivityLexicon lex;
  while (auto fields = reader.Next()) {
    const std::size_t row = reader.line();
    if (fields->size() == 1 && fields->front().empty()) continue;
    if (fields->size() != 5) throw DataError("expected 5 fields", file, row);
    const std::string lemma = Lower(Trim((*fields)[0]));
    if (lemma.empty()) throw DataError("empty lemma", file, row, "lemma");
    const auto tag = ParsePosTag(Trim((*fields)[1]));
    if (!tag) throw DataError("unknown tag " + (*fields)[1], file, row, "tag");
    SubjectivityEntry e;
    e.polarity = ParseNumber((*fields)[2], file, row, "polarity");
    CheckRange(e.polarity, -1.0, 1.0, file, row, "polarity");
    e.subjectivity = ParseNumber((*fields)[3], file, row, "subjectivity");
    CheckRange(e.subjectivity, 0.0, 1.0, file, row, "subjectivity");
    e.intensity = ParseNumber((*fields)[4], file, row, "intensity");
    if (!(e.intensity > 0.0)) {
      throw DataError("intensity must be positive", file, row, "intensity");
    }
    auto& slot = lex.entries[lemma][static_cast<std::size_t>(*tag)];
    if (slot) ++lex.duplicates;
    slot = e;
  }
  return lex;
}

SimileLemmaList LoadSimiles(const std::filesystem::path& path) {
  auto in = Open(path);
  const std::string file = path.string();
  std::vector<std::string> patterns;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    const auto t = Trim(line);
    if (t.empty() || t.front() == '#') continue;
    const std::string pattern = Lower(t);
    if (std::find(patterns.begin(), patterns.end(), pattern) != patterns.end()) {
      throw DataError("duplicate pattern \"" + pattern + "\"", file, row);
    }
    patterns.push_back(pattern);
  }
  if (patterns.empty()) throw DataError("no simile patterns", file, 1);
  return SimileLemmaList::FromPatterns(std::move(patterns));
}

AnpLexicon LoadAnps(const std::filesystem::path& path) {
  auto in = Open(path);
  const std::string file = path.string();
  csv::Reader reader(in);
  AnpLexicon lex;
  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  bool first = true;
  while (auto fields = reader.Next()) {
    const std::size_t row = reader.line();
    if (fields->size() == 1 && fields->front().empty()) continue;
    if (first) {
      first = false;
      if (!fields->empty() && Lower(Trim((*fields)[0])) == "adjective") continue;
    }
    if (fields->size() != 4) throw DataError("expected 4 fields", file, row);
    AnpEntry e;
    e.adjective = Lower(Trim((*fields)[0]));
    e.noun = Lower(Trim((*fields)[1]));
    if (e.adjective.empty()) throw DataError("empty adjective", file, row, "adjective");
    if (e.noun.empty()) throw DataError("empty noun", file, row, "noun");
    const auto sentiment = ParsePolarity((*fields)[2]);
    if (!sentiment) {
      throw DataError("unknown sentiment " + (*fields)[2], file, row, "sentiment");
    }
    e.sentiment = *sentiment;
    const double freq = ParseNumber((*fields)[3], file, row, "frequency");
    if (freq < 0.0 || freq != static_cast<double>(static_cast<std::size_t>(freq))) {
      throw DataError("frequency must be a non-negative integer", file, row,
                      "frequency");
    }
    e.frequency = static_cast<std::size_t>(freq);
    const auto key = std::make_pair(e.adjective, e.noun);
    if (const auto it = seen.find(key); it != seen.end()) {
      lex.entries[it->second] = std::move(e);
      ++lex.duplicates;
    } else {
      seen.emplace(key, lex.entries.size());
      lex.entries.push_back(std::move(e));
    }
  }
  return lex;
}

void WriteAnps(const AnpLexicon& lexicon, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  csv::WriteRow(out, {"adjective", "noun", "sentiment", "frequency"});
  for (const auto& e : lexicon.entries) {
    csv::WriteRow(out, {e.adjective, e.noun, std::string(ToString(e.sentiment)),
                        std::to_string(e.frequency)});
  }
}

}  // namespace emocap

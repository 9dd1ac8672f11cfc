#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "emocap/error.hpp"
#include "emocap/random.hpp"
#include "emocap/textproc.hpp"
#include "json.hpp"

namespace emocap {

namespace {

constexpr std::array<std::string_view, kNumTags> kTagNames = {
    "NOUN", "PRON", "ADJ", "ADP", "VERB", "OTHER"};

// Boundary pseudo-tags for the first two positions.
constexpr std::string_view kStartTag = "-START-";
constexpr std::string_view kStart2Tag = "-START2-";

std::uint64_t Fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string NormalizeWord(std::string_view word) {
  const bool numeric =
      !word.empty() &&
      std::all_of(word.begin(), word.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == ',' ||
               c == '.';
      }) &&
      std::isdigit(static_cast<unsigned char>(word.front()));
  if (numeric) return word.size() == 4 ? "!YEAR" : "!DIGITS";
  return std::string(word);
}

std::vector<std::string> MakeContext(std::span<const std::string> tokens) {
  std::vector<std::string> context;
  context.reserve(tokens.size() + 4);
  context.emplace_back("-START-");
  context.emplace_back("-START2-");
  for (const auto& t : tokens) context.push_back(NormalizeWord(t));
  context.emplace_back("-END-");
  context.emplace_back("-END2-");
  return context;
}

std::string_view TagName(std::optional<PosTag> tag, std::string_view fallback) {
  return tag ? kTagNames[static_cast<std::size_t>(*tag)] : fallback;
}

std::string_view Suffix(std::string_view w, std::size_t n) {
  return w.size() <= n ? w : w.substr(w.size() - n);
}

std::string_view Prefix(std::string_view w, std::size_t n) {
  return w.substr(0, std::min(n, w.size()));
}

// Calls `emit` once per feature of token `i` (sentence index). `prev` and
// `prev2` are nullopt at the sentence start.
template <typename Emit>
void ForEachFeature(const std::vector<std::string>& context, std::size_t i,
                    std::optional<PosTag> prev, std::optional<PosTag> prev2,
                    std::string& buf, Emit&& emit) {
  const std::size_t p = i + 2;
  const std::string_view word = context[p];
  const std::string_view prev_tag = TagName(prev, kStartTag);
  const std::string_view prev2_tag =
      TagName(prev2, prev ? kStartTag : kStart2Tag);

  auto add = [&](std::string_view name, std::string_view a,
                 std::string_view b = {}) {
    buf.assign(name);
    buf.push_back(' ');
    buf.append(a);
    if (!b.empty()) {
      buf.push_back(' ');
      buf.append(b);
    }
    emit(std::string_view(buf));
  };

  buf.assign("bias");
  emit(std::string_view(buf));
  add("i suffix1", Suffix(word, 1));
  add("i suffix2", Suffix(word, 2));
  add("i suffix3", Suffix(word, 3));
  add("i pref1", Prefix(word, 1));
  add("i pref2", Prefix(word, 2));
  add("i pref3", Prefix(word, 3));
  add("i-1 tag", prev_tag);
  add("i-2 tag", prev2_tag);
  add("i tag+i-2 tag", prev_tag, prev2_tag);
  add("i word", word);
  add("i-1 tag+i word", prev_tag, word);
  add("i-1 word", context[p - 1]);
  add("i-1 suffix", Suffix(context[p - 1], 3));
  add("i-2 word", context[p - 2]);
  add("i+1 word", context[p + 1]);
  add("i+1 suffix", Suffix(context[p + 1], 3));
  add("i+2 word", context[p + 2]);
}

PosTag ArgmaxTag(const TaggerModel::Weights& scores) {
  std::size_t best = 0;
  for (std::size_t t = 1; t < kNumTags; ++t) {
    if (scores[t] > scores[best]) best = t;
  }
  return static_cast<PosTag>(best);
}

// Perceptron state during training, with lazy averaging.
struct Trainer {
  struct Cell {
    TaggerModel::Weights weight{};
    TaggerModel::Weights total{};
    std::array<std::uint64_t, kNumTags> stamp{};
  };
  std::unordered_map<std::string, Cell> cells;
  std::uint64_t instances = 0;

  PosTag Predict(const std::vector<std::string>& features) const {
    TaggerModel::Weights scores{};
    for (const auto& f : features) {
      const auto it = cells.find(f);
      if (it == cells.end()) continue;
      for (std::size_t t = 0; t < kNumTags; ++t) scores[t] += it->second.weight[t];
    }
    return ArgmaxTag(scores);
  }

  void Bump(Cell& cell, std::size_t tag, double delta) {
    cell.total[tag] +=
        static_cast<double>(instances - cell.stamp[tag]) * cell.weight[tag];
    cell.stamp[tag] = instances;
    cell.weight[tag] += delta;
  }

  void Update(PosTag truth, PosTag guess,
              const std::vector<std::string>& features) {
    ++instances;
    if (truth == guess) return;
    for (const auto& f : features) {
      Cell& cell = cells[f];
      Bump(cell, static_cast<std::size_t>(truth), 1.0);
      Bump(cell, static_cast<std::size_t>(guess), -1.0);
    }
  }

  std::map<std::string, TaggerModel::Weights> Averaged() const {
    std::map<std::string, TaggerModel::Weights> out;
    for (const auto& [feature, cell] : cells) {
      TaggerModel::Weights avg{};
      bool any = false;
      for (std::size_t t = 0; t < kNumTags; ++t) {
        const double total =
            cell.total[t] +
            static_cast<double>(instances - cell.stamp[t]) * cell.weight[t];
        // Three decimals keep the model file small and byte-stable.
        avg[t] = std::round(1000.0 * total / static_cast<double>(instances)) /
                 1000.0;
        if (avg[t] == 0.0) avg[t] = 0.0;  // no negative zero
        any = any || avg[t] != 0.0;
      }
      if (any) out.emplace(feature, avg);
    }
    return out;
  }
};

}  // namespace

std::string_view ToString(PosTag tag) {
  return kTagNames[static_cast<std::size_t>(tag)];
}

std::optional<PosTag> ParsePosTag(std::string_view text) {
  for (std::size_t t = 0; t < kNumTags; ++t) {
    if (kTagNames[t] == text) return static_cast<PosTag>(t);
  }
  return std::nullopt;
}

std::vector<TaggedSentence> ParseTaggedCorpus(std::string_view text) {
  std::vector<TaggedSentence> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    TaggedSentence sentence;
    std::string item;
    while (words >> item) {
      const auto sep = item.rfind('_');
      if (sep == std::string::npos || sep == 0) {
        throw DataError("expected token_TAG, got \"" + item + "\"", "", line_no);
      }
      const auto tag = ParsePosTag(std::string_view(item).substr(sep + 1));
      if (!tag) {
        throw DataError("unknown tag in \"" + item + "\"", "", line_no);
      }
      sentence.tokens.push_back(item.substr(0, sep));
      sentence.tags.push_back(*tag);
    }
    if (!sentence.tokens.empty()) out.push_back(std::move(sentence));
  }
  return out;
}

std::vector<TaggedSentence> ReadTaggedCorpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseTaggedCorpus(buffer.str());
  } catch (const DataError& e) {
    throw DataError(e.what(), path.string(), e.row());
  }
}

TaggerModel TaggerModel::Train(std::span<const TaggedSentence> corpus,
                               const TaggerOptions& options) {
  if (corpus.empty()) throw DataError("cannot train a tagger on an empty corpus");
  if (options.epochs < 1) throw ConfigError("tagger epochs must be >= 1");

  TaggerModel model;
  std::map<std::string, std::array<std::size_t, kNumTags>> counts;
  for (const auto& s : corpus) {
    if (s.tokens.size() != s.tags.size()) {
      throw DataError("tagged sentence has mismatched token/tag counts");
    }
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      ++counts[s.tokens[i]][static_cast<std::size_t>(s.tags[i])];
    }
  }
  for (const auto& [word, per_tag] : counts) {
    const std::size_t total =
        std::accumulate(per_tag.begin(), per_tag.end(), std::size_t{0});
    const auto nonzero = std::count_if(per_tag.begin(), per_tag.end(),
                                       [](std::size_t c) { return c > 0; });
    if (total >= options.dictionary_min_count && nonzero == 1) {
      const auto tag = std::find_if(per_tag.begin(), per_tag.end(),
                                    [](std::size_t c) { return c > 0; }) -
                       per_tag.begin();
      model.tagdict_.emplace(word, static_cast<PosTag>(tag));
    }
  }

  Trainer trainer;
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(options.seed);
  std::string buf;
  std::vector<std::string> features;
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    Shuffle(std::span<std::size_t>(order), rng);
    for (std::size_t idx : order) {
      const auto& s = corpus[idx];
      const auto context = MakeContext(s.tokens);
      std::optional<PosTag> prev, prev2;
      for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        PosTag guess;
        if (const auto it = model.tagdict_.find(s.tokens[i]);
            it != model.tagdict_.end()) {
          guess = it->second;
        } else {
          features.clear();
          ForEachFeature(context, i, prev, prev2, buf, [&](std::string_view f) {
            features.emplace_back(f);
          });
          guess = trainer.Predict(features);
          trainer.Update(s.tags[i], guess, features);
        }
        prev2 = prev;
        prev = guess;
      }
    }
  }
  model.weights_ = trainer.Averaged();
  model.BuildIndex();
  return model;
}

void TaggerModel::BuildIndex() {
  index_.clear();
  index_.reserve(weights_.size());
  for (const auto& [feature, w] : weights_) {
    auto& slot = index_[Fnv1a(feature)];
    for (std::size_t t = 0; t < kNumTags; ++t) slot[t] += w[t];
  }
}

std::vector<PosTag> TaggerModel::Tag(std::span<const std::string> tokens) const {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  if (tokens.empty()) return tags;
  const auto context = MakeContext(tokens);
  std::string buf;
  std::optional<PosTag> prev, prev2;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    PosTag tag;
    if (const auto it = tagdict_.find(tokens[i]); it != tagdict_.end()) {
      tag = it->second;
    } else {
      Weights scores{};
      ForEachFeature(context, i, prev, prev2, buf, [&](std::string_view f) {
        const auto w = index_.find(Fnv1a(f));
        if (w == index_.end()) return;
        for (std::size_t t = 0; t < kNumTags; ++t) scores[t] += w->second[t];
      });
      tag = ArgmaxTag(scores);
    }
    tags.push_back(tag);
    prev2 = prev;
    prev = tag;
  }
  return tags;
}

std::string TaggerModel::ToJson() const {
  nlohmann::json tagdict = nlohmann::json::object();
  for (const auto& [word, tag] : tagdict_) tagdict[word] = ToString(tag);
  nlohmann::json weights = nlohmann::json::object();
  for (const auto& [feature, w] : weights_) {
    weights[feature] = nlohmann::json(std::vector<double>(w.begin(), w.end()));
  }
  nlohmann::json doc = {
      {"version", version_},
      {"tags", std::vector<std::string_view>(kTagNames.begin(), kTagNames.end())},
      {"tagdict", std::move(tagdict)},
      {"weights", std::move(weights)},
  };
  return doc.dump() + "\n";
}

TaggerModel TaggerModel::FromJson(std::string_view json) {
  TaggerModel model;
  try {
    const auto doc = nlohmann::json::parse(json);
    model.version_ = doc.at("version").get<std::string>();
    if (model.version_ != kFormatVersion) {
      throw DataError("unsupported tagger model version " + model.version_);
    }
    const auto tags = doc.at("tags").get<std::vector<std::string>>();
    if (tags.size() != kNumTags ||
        !std::equal(tags.begin(), tags.end(), kTagNames.begin())) {
      throw DataError("tagger model tag set does not match");
    }
    for (const auto& [word, tag] : doc.at("tagdict").items()) {
      const auto parsed = ParsePosTag(tag.get<std::string>());
      if (!parsed) throw DataError("tag dictionary entry with unknown tag: " + word);
      model.tagdict_.emplace(word, *parsed);
    }
    for (const auto& [feature, w] : doc.at("weights").items()) {
      const auto values = w.get<std::vector<double>>();
      if (values.size() != kNumTags) {
        throw DataError("weight vector of wrong size for feature " + feature);
      }
      Weights arr{};
      std::copy(values.begin(), values.end(), arr.begin());
      model.weights_.emplace(feature, arr);
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed tagger model: ") + e.what());
  }
  model.BuildIndex();
  return model;
}

TaggerModel TaggerModel::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJson(buffer.str());
}

void TaggerModel::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << ToJson();
}

TokenizedUtterance Analyze(std::string_view text, const TaggerModel& tagger) {
  TokenizedUtterance u;
  u.tokens = Tokenize(text);
  u.tags = tagger.Tag(u.tokens);
  u.lemmas.reserve(u.tokens.size());
  for (std::size_t i = 0; i < u.tokens.size(); ++i) {
    u.lemmas.push_back(Lemmatize(u.tokens[i], u.tags[i]));
  }
  return u;
}

double TaggingAccuracy(const TaggerModel& model,
                       std::span<const TaggedSentence> gold) {
  std::size_t correct = 0, total = 0;
  for (const auto& s : gold) {
    const auto predicted = model.Tag(s.tokens);
    for (std::size_t i = 0; i < s.tags.size(); ++i) {
      correct += predicted[i] == s.tags[i];
      ++total;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

}  // namespace emocap

#include "emocap/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>

#include "emocap/csv.hpp"
#include "emocap/error.hpp"
#include "emocap/random.hpp"
#include "json.hpp"

namespace emocap {

namespace {

bool IsBlank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

struct RawRow {
  std::string art_style, painting, emotion, utterance;
  std::optional<std::string> genre, painter, annotator;
};

void AddRow(Corpus::Builder& builder, RawRow row, const std::string& file,
            std::size_t line) {
  if (row.painting.empty()) {
    throw DataError("empty painting id", file, line, "painting");
  }
  const auto emotion = ParseEmotion(row.emotion);
  if (!emotion) {
    throw DataError("unknown emotion \"" + row.emotion + "\"", file, line,
                    "emotion");
  }
  if (IsBlank(row.utterance)) {
    throw DataError("empty utterance", file, line, "utterance");
  }
  builder.AddArtwork(Artwork{row.painting, std::move(row.art_style),
                             std::move(row.genre), std::move(row.painter)});
  builder.AddAnnotation(row.painting, *emotion, std::move(row.utterance),
                        std::move(row.annotator));
}

Corpus LoadCsv(const std::filesystem::path& path) {
  auto in = OpenInput(path);
  const std::string file = path.string();
  csv::Reader reader(in);
  auto header = reader.Next();
  if (!header) throw DataError("empty file", file, 1);
  if (!header->empty() && header->front().starts_with("\xEF\xBB\xBF")) {
    header->front().erase(0, 3);
  }

  auto column = [&](std::string_view name) -> std::optional<std::size_t> {
    const auto it = std::find(header->begin(), header->end(), name);
    if (it == header->end()) return std::nullopt;
    return static_cast<std::size_t>(it - header->begin());
  };
  std::array<std::size_t, 4> required{};
  const std::array<std::string_view, 4> names = {"art_style", "painting",
                                                 "emotion", "utterance"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto c = column(names[i]);
    if (!c) {
      throw DataError("header is missing column " + std::string(names[i]),
                      file, 1, std::string(names[i]));
    }
    required[i] = *c;
  }
  const auto genre = column("genre");
  const auto painter = column("painter");
  const auto annotator = column("annotator_id");

  Corpus::Builder builder;
  std::size_t rows = 0;
  while (auto fields = reader.Next()) {
    const std::size_t line = reader.line();
    if (fields->size() == 1 && fields->front().empty()) continue;
    if (fields->size() != header->size()) {
      throw DataError("expected " + std::to_string(header->size()) +
                          " fields, found " + std::to_string(fields->size()),
                      file, line);
    }
    auto optional_field = [&](std::optional<std::size_t> c)
        -> std::optional<std::string> {
      if (!c || (*fields)[*c].empty()) return std::nullopt;
      return (*fields)[*c];
    };
    RawRow row{(*fields)[required[0]], (*fields)[required[1]],
               (*fields)[required[2]], (*fields)[required[3]],
               optional_field(genre),  optional_field(painter),
               optional_field(annotator)};
    AddRow(builder, std::move(row), file, line);
    ++rows;
  }
  if (rows == 0) throw DataError("no data rows", file, 1);
  return std::move(builder).Build();
}

Corpus LoadJsonl(const std::filesystem::path& path) {
  auto in = OpenInput(path);
  const std::string file = path.string();
  Corpus::Builder builder;
  std::string line;
  std::size_t line_no = 0;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError(std::string("invalid JSON: ") + e.what(), file, line_no);
    }
    if (!obj.is_object()) throw DataError("expected an object", file, line_no);
    auto field = [&](const char* name) -> std::string {
      const auto it = obj.find(name);
      if (it == obj.end() || !it->is_string()) {
        throw DataError("missing string field", file, line_no, name);
      }
      return it->get<std::string>();
    };
    auto optional_field = [&](const char* name) -> std::optional<std::string> {
      const auto it = obj.find(name);
      if (it == obj.end() || it->is_null()) return std::nullopt;
      if (!it->is_string()) {
        throw DataError("expected a string", file, line_no, name);
      }
      return it->get<std::string>();
    };
    RawRow row{field("art_style"),        field("painting"),
               field("emotion"),          field("utterance"),
               optional_field("genre"),   optional_field("painter"),
               optional_field("annotator_id")};
    AddRow(builder, std::move(row), file, line_no);
    ++rows;
  }
  if (rows == 0) throw DataError("empty file", file, 1);
  return std::move(builder).Build();
}

}  // namespace

std::string_view ToString(Split s) {
  switch (s) {
    case Split::kTrain:
      return "train";
    case Split::kVal:
      return "val";
    case Split::kTest:
      break;
  }
  return "test";
}

std::optional<Split> ParseSplit(std::string_view text) {
  if (text == "train") return Split::kTrain;
  if (text == "val" || text == "validation") return Split::kVal;
  if (text == "test") return Split::kTest;
  return std::nullopt;
}

EmotionDistribution::EmotionDistribution(
    const std::array<double, kNumEmotions>& probs)
    : probs_(probs) {
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw DataError("emotion distribution has a negative or non-finite entry");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw DataError("emotion distribution sums to " + std::to_string(sum));
  }
}

EmotionDistribution EmotionDistribution::FromCounts(
    const std::array<std::size_t, kNumEmotions>& counts) {
  const std::size_t total =
      std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  if (total == 0) throw DataError("no annotations to build a distribution");
  std::array<double, kNumEmotions> probs{};
  for (std::size_t i = 0; i < kNumEmotions; ++i) {
    probs[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  EmotionDistribution d;
  d.probs_ = probs;
  return d;
}

Emotion EmotionDistribution::Argmax() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < kNumEmotions; ++i) {
    if (probs_[i] > probs_[best]) best = i;
  }
  return static_cast<Emotion>(best);
}

std::optional<std::size_t> Corpus::FindArtwork(std::string_view id) const {
  const auto it = id_index_.find(std::string(id));
  if (it == id_index_.end()) return std::nullopt;
  return it->second;
}

Corpus Corpus::WithSplits(std::vector<Split> splits) const {
  if (splits.size() != artworks_.size()) {
    throw DataError("split assignment does not cover every artwork");
  }
  Corpus out = *this;
  out.splits_ = std::move(splits);
  return out;
}

Corpus Corpus::Subset(Split split) const {
  if (!has_splits()) throw ConfigError("corpus has no split assignment");
  Builder builder;
  for (std::size_t a = 0; a < artworks_.size(); ++a) {
    if (splits_[a] != split) continue;
    builder.AddArtwork(artworks_[a]);
    for (std::size_t idx : by_artwork_[a]) {
      const auto& ann = annotations_[idx];
      builder.AddAnnotation(artworks_[a].id, ann.emotion, ann.utterance,
                            ann.annotator_id);
    }
  }
  Corpus out = std::move(builder).Build();
  out.splits_.assign(out.artworks_.size(), split);
  return out;
}

std::array<std::size_t, kNumEmotions> Corpus::EmotionCounts(
    std::size_t artwork) const {
  std::array<std::size_t, kNumEmotions> counts{};
  for (std::size_t idx : by_artwork_.at(artwork)) {
    ++counts[Index(annotations_[idx].emotion)];
  }
  return counts;
}

std::size_t Corpus::Builder::AddArtwork(Artwork artwork) {
  if (artwork.id.empty()) throw DataError("artwork id is empty");
  const auto [it, inserted] =
      corpus_.id_index_.try_emplace(artwork.id, corpus_.artworks_.size());
  if (inserted) {
    corpus_.artworks_.push_back(std::move(artwork));
    corpus_.by_artwork_.emplace_back();
  }
  return it->second;
}

void Corpus::Builder::AddAnnotation(std::string_view artwork_id,
                                    Emotion emotion, std::string utterance,
                                    std::optional<std::string> annotator_id) {
  const auto it = corpus_.id_index_.find(std::string(artwork_id));
  if (it == corpus_.id_index_.end()) {
    throw DataError("annotation references unknown artwork " +
                    std::string(artwork_id));
  }
  if (IsBlank(utterance)) throw DataError("empty utterance");
  corpus_.by_artwork_[it->second].push_back(corpus_.annotations_.size());
  corpus_.annotations_.push_back(Annotation{it->second, emotion,
                                            std::move(utterance),
                                            std::move(annotator_id)});
}

Corpus Corpus::Builder::Build() && { return std::move(corpus_); }

Corpus LoadCorpus(const std::filesystem::path& path, CorpusFormat format) {
  return format == CorpusFormat::kCsv ? LoadCsv(path) : LoadJsonl(path);
}

Corpus LoadCorpus(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return LoadCorpus(path, ext == ".jsonl" || ext == ".json"
                              ? CorpusFormat::kJsonl
                              : CorpusFormat::kCsv);
}

void WriteCorpus(const Corpus& corpus, const std::filesystem::path& path,
                 CorpusFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  const auto& artworks = corpus.artworks();
  if (format == CorpusFormat::kCsv) {
    csv::WriteRow(out, {"art_style", "painting", "emotion", "utterance"});
    for (const auto& ann : corpus.annotations()) {
      const auto& art = artworks[ann.artwork];
      csv::WriteRow(out, {art.art_style, art.id,
                          std::string(ToString(ann.emotion)), ann.utterance});
    }
    return;
  }
  for (const auto& ann : corpus.annotations()) {
    const auto& art = artworks[ann.artwork];
    nlohmann::json obj = {{"art_style", art.art_style},
                          {"painting", art.id},
                          {"emotion", ToString(ann.emotion)},
                          {"utterance", ann.utterance}};
    if (art.genre) obj["genre"] = *art.genre;
    if (art.painter) obj["painter"] = *art.painter;
    if (ann.annotator_id) obj["annotator_id"] = *ann.annotator_id;
    out << obj.dump() << '\n';
  }
}

std::array<std::size_t, 3> SplitSizes(std::size_t n,
                                      const std::array<double, 3>& ratios) {
  double sum = 0.0;
  for (double r : ratios) {
    if (!(r > 0.0)) throw ConfigError("split ratios must be positive");
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ConfigError("split ratios must sum to 1, got " + std::to_string(sum));
  }
  std::array<std::size_t, 3> sizes{};
  std::array<double, 3> remainder{};
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double quota = static_cast<double>(n) * ratios[i];
    sizes[i] = static_cast<std::size_t>(std::floor(quota));
    remainder[i] = quota - std::floor(quota);
    assigned += sizes[i];
  }
  std::array<std::size_t, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainder[a] > remainder[b];
  });
  for (std::size_t k = 0; assigned < n; ++k, ++assigned) ++sizes[order[k % 3]];
  return sizes;
}

Corpus AssignSplits(const Corpus& corpus, const std::array<double, 3>& ratios,
                    std::uint64_t seed) {
  const std::size_t n = corpus.artworks().size();
  const auto sizes = SplitSizes(n, ratios);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  Shuffle(std::span<std::size_t>(order), rng);

  std::vector<Split> splits(n);
  for (std::size_t k = 0; k < n; ++k) {
    splits[order[k]] = k < sizes[0]              ? Split::kTrain
                       : k < sizes[0] + sizes[1] ? Split::kVal
                                                 : Split::kTest;
  }
  return corpus.WithSplits(std::move(splits));
}

void WriteSplits(const Corpus& corpus, const std::filesystem::path& path) {
  if (!corpus.has_splits()) throw ConfigError("corpus has no split assignment");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  csv::WriteRow(out, {"painting", "split"});
  for (std::size_t a = 0; a < corpus.artworks().size(); ++a) {
    csv::WriteRow(out, {corpus.artworks()[a].id,
                        std::string(ToString(corpus.SplitOf(a)))});
  }
}

Corpus LoadSplits(const Corpus& corpus, const std::filesystem::path& path) {
  auto in = OpenInput(path);
  const std::string file = path.string();
  csv::Reader reader(in);
  const auto header = reader.Next();
  if (!header || header->size() < 2 || (*header)[0] != "painting" ||
      (*header)[1] != "split") {
    throw DataError("expected header painting,split", file, 1);
  }
  std::vector<std::optional<Split>> assigned(corpus.artworks().size());
  while (auto fields = reader.Next()) {
    if (fields->size() == 1 && fields->front().empty()) continue;
    if (fields->size() < 2) throw DataError("expected 2 fields", file, reader.line());
    const auto art = corpus.FindArtwork((*fields)[0]);
    if (!art) {
      throw DataError("unknown painting " + (*fields)[0], file, reader.line(),
                      "painting");
    }
    const auto split = ParseSplit((*fields)[1]);
    if (!split) {
      throw DataError("unknown split " + (*fields)[1], file, reader.line(),
                      "split");
    }
    assigned[*art] = *split;
  }
  std::vector<Split> splits;
  splits.reserve(assigned.size());
  for (std::size_t a = 0; a < assigned.size(); ++a) {
    if (!assigned[a]) {
      throw DataError("no split for painting " + corpus.artworks()[a].id, file,
                      reader.line());
    }
    splits.push_back(*assigned[a]);
  }
  return corpus.WithSplits(std::move(splits));
}

EmotionDistribution EmpiricalDistribution(const Corpus& corpus,
                                          std::string_view artwork_id) {
  const auto art = corpus.FindArtwork(artwork_id);
  if (!art) throw DataError("unknown artwork " + std::string(artwork_id));
  return EmpiricalDistribution(corpus, *art);
}

EmotionDistribution EmpiricalDistribution(const Corpus& corpus,
                                          std::size_t artwork) {
  if (artwork >= corpus.artworks().size()) {
    throw DataError("artwork index out of range");
  }
  return EmotionDistribution::FromCounts(corpus.EmotionCounts(artwork));
}

std::array<std::size_t, kNumEmotions> GlobalEmotionCounts(const Corpus& corpus) {
  std::array<std::size_t, kNumEmotions> counts{};
  for (const auto& ann : corpus.annotations()) ++counts[Index(ann.emotion)];
  return counts;
}

}  // namespace emocap

// emocap: batch driver for corpus ingest, analysis, classification,
// generation evaluation, sentiment injection and tagger training.

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emocap/analytics.hpp"
#include "emocap/anp.hpp"
#include "emocap/classifier.hpp"
#include "emocap/corpus.hpp"
#include "emocap/csv.hpp"
#include "emocap/error.hpp"
#include "emocap/generation_eval.hpp"
#include "emocap/lexicons.hpp"
#include "emocap/textproc.hpp"
#include "report.hpp"

#ifndef EMOCAP_DATA_DIR
#define EMOCAP_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using emocap::report::Json;
using emocap::report::Number;

namespace {

struct RunConfig {
  std::string corpus;
  std::string corpus_format = "auto";
  std::string splits;
  std::vector<double> ratios = {0.85, 0.05, 0.10};
  std::uint64_t seed = 2021;

  std::string sentiment_lexicon;
  std::string sentiment_constants;
  std::string subjectivity_lexicon;
  std::string concreteness_lexicon;
  std::string similes;
  std::string anps;
  std::string tagger;

  std::size_t lcs_subsample = 20000;
  double nb_alpha = 1.0;
  std::vector<int> nb_orders = {1, 2};

  std::string out = "emocap_out";
  std::vector<std::string> emit = {"json"};
  std::size_t workers = 1;

  // subcommand inputs
  std::string generations;
  std::string predictions;
  std::string model;
  std::string input;
  std::string captions;
  std::string distributions;
  std::string target;
  std::string tagged;
  std::string heldout;
  int epochs = 5;
  std::size_t dictionary_min_count = 5;
};

std::string DataPath(const char* relative) {
  return (fs::path(EMOCAP_DATA_DIR) / relative).string();
}

void Require(const std::string& value, const char* field) {
  if (value.empty()) throw emocap::ConfigError(std::string("--") + field + " is required");
}

bool Emits(const RunConfig& cfg, const char* format) {
  return std::find(cfg.emit.begin(), cfg.emit.end(), format) != cfg.emit.end();
}

std::array<double, 3> Ratios(const RunConfig& cfg) {
  if (cfg.ratios.size() != 3) throw emocap::ConfigError("--ratios needs three values");
  double sum = 0.0;
  for (double r : cfg.ratios) {
    if (!(r >= 0.0)) throw emocap::ConfigError("--ratios must be non-negative");
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw emocap::ConfigError("--ratios must sum to 1");
  return {cfg.ratios[0], cfg.ratios[1], cfg.ratios[2]};
}

// Echoed into every report. Output location, format and worker count are
// left out: they do not change any result.
Json ConfigJson(const RunConfig& cfg, const std::string& command) {
  Json j;
  j["command"] = command;
  j["seed"] = cfg.seed;
  auto put = [&](const char* key, const std::string& value) {
    if (!value.empty()) j[key] = value;
  };
  put("corpus", cfg.corpus);
  put("corpus_format", cfg.corpus_format);
  put("splits", cfg.splits);
  Json ratios = Json::array();
  for (double r : cfg.ratios) ratios.push_back(Number(r));
  j["ratios"] = ratios;
  put("sentiment_lexicon", cfg.sentiment_lexicon);
  put("sentiment_constants", cfg.sentiment_constants);
  put("subjectivity_lexicon", cfg.subjectivity_lexicon);
  put("concreteness_lexicon", cfg.concreteness_lexicon);
  put("similes", cfg.similes);
  put("anps", cfg.anps);
  put("tagger", cfg.tagger);
  j["lcs_subsample"] = cfg.lcs_subsample;
  j["nb_alpha"] = Number(cfg.nb_alpha);
  j["nb_orders"] = cfg.nb_orders;
  return j;
}

void EmitReport(const RunConfig& cfg, const std::string& stem, const Json& json) {
  const fs::path dir(cfg.out);
  if (Emits(cfg, "json")) emocap::report::WriteJson(dir / (stem + ".json"), json);
  if (Emits(cfg, "csv")) emocap::report::WriteFlatCsv(dir / (stem + ".csv"), json);
  if (Emits(cfg, "text")) emocap::report::WriteFlatText(dir / (stem + ".txt"), json);
}

emocap::Corpus LoadCorpusFrom(const RunConfig& cfg) {
  Require(cfg.corpus, "corpus");
  if (cfg.corpus_format == "csv") return emocap::LoadCorpus(cfg.corpus, emocap::CorpusFormat::kCsv);
  if (cfg.corpus_format == "jsonl") {
    return emocap::LoadCorpus(cfg.corpus, emocap::CorpusFormat::kJsonl);
  }
  return emocap::LoadCorpus(cfg.corpus);
}

emocap::Corpus WithSplits(const RunConfig& cfg, const emocap::Corpus& corpus) {
  if (!cfg.splits.empty()) return emocap::LoadSplits(corpus, cfg.splits);
  return emocap::AssignSplits(corpus, Ratios(cfg), cfg.seed);
}

emocap::AffectLexicons LoadAffectLexicons(const RunConfig& cfg) {
  emocap::AffectLexicons lex;
  lex.concreteness = emocap::LoadConcreteness(cfg.concreteness_lexicon);
  std::optional<fs::path> constants;
  if (!cfg.sentiment_constants.empty()) constants = cfg.sentiment_constants;
  lex.sentiment = emocap::LoadSentiment(cfg.sentiment_lexicon, constants);
  lex.subjectivity = emocap::LoadSubjectivity(cfg.subjectivity_lexicon);
  lex.similes = emocap::LoadSimiles(cfg.similes);
  return lex;
}

emocap::NaiveBayesOptions NbOptions(const RunConfig& cfg) {
  emocap::NaiveBayesOptions opts;
  if (!(cfg.nb_alpha > 0.0)) throw emocap::ConfigError("--nb-alpha must be positive");
  opts.alpha = cfg.nb_alpha;
  opts.orders.clear();
  for (int n : cfg.nb_orders) {
    if (n < 1 || n > 5) throw emocap::ConfigError("--nb-orders values must be in 1..5");
    opts.orders.insert(n);
  }
  if (opts.orders.empty()) throw emocap::ConfigError("--nb-orders is empty");
  return opts;
}

Json EmotionMap(const std::array<double, emocap::kNumEmotions>& values) {
  Json j = Json::object();
  for (auto e : emocap::kAllEmotions) j[std::string(ToString(e))] = Number(values[Index(e)]);
  return j;
}

Json PosJson(const emocap::PosMeans& m) {
  return {{"adjectives", Number(m.adjectives)}, {"adpositions", Number(m.adpositions)},
          {"nouns", Number(m.nouns)},           {"pronouns", Number(m.pronouns)},
          {"verbs", Number(m.verbs)}};
}

Json HistogramJson(const emocap::Histogram& h) {
  Json bins = Json::array();
  for (std::size_t i = 0; i < h.counts().size(); ++i) {
    const double frac = h.total() ? static_cast<double>(h.counts()[i]) /
                                        static_cast<double>(h.total())
                                  : 0.0;
    bins.push_back({{"lo", Number(h.BinLow(i))},
                    {"hi", Number(h.BinHigh(i))},
                    {"count", h.counts()[i]},
                    {"fraction", Number(frac)}});
  }
  return {{"bins", bins}, {"total", h.total()}};
}

// ---------------------------------------------------------------- ingest

int RunIngest(const RunConfig& cfg) {
  const emocap::Corpus corpus = WithSplits(cfg, LoadCorpusFrom(cfg));
  std::array<std::size_t, 3> artworks{}, annotations{};
  for (std::size_t a = 0; a < corpus.artworks().size(); ++a) {
    const auto s = static_cast<std::size_t>(corpus.SplitOf(a));
    ++artworks[s];
    annotations[s] += corpus.AnnotationsOf(a).size();
  }
  Json splits;
  for (auto s : {emocap::Split::kTrain, emocap::Split::kVal, emocap::Split::kTest}) {
    const auto i = static_cast<std::size_t>(s);
    splits[std::string(ToString(s))] = {{"artworks", artworks[i]},
                                        {"annotations", annotations[i]}};
  }
  Json emotions;
  const auto counts = emocap::GlobalEmotionCounts(corpus);
  for (auto e : emocap::kAllEmotions) emotions[std::string(ToString(e))] = counts[Index(e)];

  Json j;
  j["config"] = ConfigJson(cfg, "ingest");
  j["annotations"] = corpus.annotations().size();
  j["artworks"] = corpus.artworks().size();
  j["emotions"] = emotions;
  j["splits"] = splits;
  EmitReport(cfg, "corpus_summary", j);
  emocap::WriteSplits(corpus, fs::path(cfg.out) / "splits.csv");
  return 0;
}

// ---------------------------------------------------------------- analyze

int RunAnalyze(const RunConfig& cfg) {
  const emocap::Corpus corpus = LoadCorpusFrom(cfg);
  const emocap::AffectLexicons lexicons = LoadAffectLexicons(cfg);
  const emocap::TaggerModel tagger = emocap::TaggerModel::Load(cfg.tagger);

  const auto tagged = emocap::AnalyzeUtterances(corpus, tagger, cfg.workers);
  const auto captions = emocap::ComputeCaptionStats(tagged);
  const auto diversity = emocap::ComputeImageDiversity(corpus, tagged);
  const auto histogram = emocap::ComputeEmotionHistogram(corpus);
  const auto majority = emocap::ComputeStrongMajority(corpus);
  const auto affect =
      emocap::ComputeAffectDistributions(corpus, tagged, lexicons, cfg.workers);

  double entropy_sum = 0.0;
  for (std::size_t a = 0; a < corpus.artworks().size(); ++a) {
    entropy_sum += emocap::EntropyBits(emocap::EmpiricalDistribution(corpus, a));
  }
  Json entropy;
  entropy["mean_bits"] = Number(entropy_sum / static_cast<double>(corpus.artworks().size()));
  for (auto [key, by] : {std::pair{"by_art_style", emocap::GroupBy::kArtStyle},
                         std::pair{"by_genre", emocap::GroupBy::kGenre}}) {
    Json groups = Json::object();
    for (const auto& [name, g] : emocap::ComputeGroupEntropy(corpus, by)) {
      groups[name] = {{"artworks", g.artworks}, {"mean_bits", Number(g.mean_bits)}};
    }
    entropy[key] = groups;
  }

  Json counts = Json::object();
  for (auto e : emocap::kAllEmotions) {
    counts[std::string(ToString(e))] = histogram.counts[Index(e)];
  }

  Json j;
  j["config"] = ConfigJson(cfg, "analyze");
  j["corpus"] = {{"annotations", corpus.annotations().size()},
                 {"artworks", corpus.artworks().size()}};
  j["emotion_histogram"] = {{"counts", counts},
                            {"fractions", EmotionMap(histogram.fractions)},
                            {"negative", Number(histogram.negative)},
                            {"other", Number(histogram.other)},
                            {"positive", Number(histogram.positive)},
                            {"total", histogram.total}};
  j["polarity_cooccurrence"] = {
      {"positive_negative", Number(emocap::PolarityCooccurrence(corpus, false))},
      {"with_other_group", Number(emocap::PolarityCooccurrence(corpus, true))}};
  j["strong_majority"] = {{"artworks", majority.artworks.size()},
                          {"fraction", Number(majority.fraction)}};
  j["entropy"] = entropy;
  Json caption_json = PosJson(captions.pos);
  caption_json["captions"] = captions.captions;
  caption_json["words"] = Number(captions.words);
  j["caption_stats"] = caption_json;
  j["image_diversity"] = {{"artworks", diversity.artworks},
                          {"normalized", PosJson(diversity.normalized)},
                          {"unique", PosJson(diversity.unique)}};
  j["affect"] = {{"covered_words", affect.covered_words},
                 {"mean_compound", Number(affect.mean_compound)},
                 {"mean_subjectivity", Number(affect.mean_subjectivity)},
                 {"mean_word_concreteness", Number(affect.mean_word_concreteness)},
                 {"neutral_fraction", Number(affect.neutral_fraction)},
                 {"simile_prevalence", Number(affect.simile_prevalence)},
                 {"total_words", affect.total_words},
                 {"utterances", affect.utterances}};
  Json histograms = {{"concreteness", HistogramJson(affect.concreteness)},
                     {"sentiment", HistogramJson(affect.sentiment)},
                     {"subjectivity", HistogramJson(affect.subjectivity)}};

  if (Emits(cfg, "json")) {
    Json full = j;
    full["histograms"] = histograms;
    emocap::report::WriteJson(fs::path(cfg.out) / "analyze.json", full);
  }
  if (Emits(cfg, "text")) emocap::report::WriteFlatText(fs::path(cfg.out) / "analyze.txt", j);
  if (Emits(cfg, "csv")) {
    const fs::path dir(cfg.out);
    emocap::report::WriteFlatCsv(dir / "analyze_summary.csv", j);
    std::vector<std::vector<std::string>> rows;
    for (const char* name : {"concreteness", "sentiment", "subjectivity"}) {
      for (const auto& bin : histograms[name]["bins"]) {
        rows.push_back({name, emocap::report::FormatNumber(bin["lo"].get<double>()),
                        emocap::report::FormatNumber(bin["hi"].get<double>()),
                        std::to_string(bin["count"].get<std::size_t>())});
      }
    }
    emocap::report::WriteCsv(dir / "affect_histograms.csv",
                             {"histogram", "bin_low", "bin_high", "count"}, rows);
    rows.clear();
    for (std::size_t i = 0; i < corpus.annotations().size(); ++i) {
      const auto& ann = corpus.annotations()[i];
      const auto& s = affect.per_utterance[i];
      rows.push_back(
          {std::to_string(i), corpus.artworks()[ann.artwork].id,
           std::string(ToString(ann.emotion)), std::to_string(tagged[i].tokens.size()),
           s.mean_concreteness ? emocap::report::FormatNumber(*s.mean_concreteness) : "",
           emocap::report::FormatNumber(s.sentiment_compound),
           std::string(ToString(s.sentiment_class)),
           emocap::report::FormatNumber(s.subjectivity), s.has_simile ? "1" : "0"});
    }
    emocap::report::WriteCsv(dir / "per_utterance.csv",
                             {"index", "painting", "emotion", "words", "concreteness",
                              "compound", "sentiment", "subjectivity", "simile"},
                             rows);
  }
  return 0;
}

// ---------------------------------------------------------------- classify

int RunClassifyTrain(const RunConfig& cfg) {
  const emocap::Corpus corpus = WithSplits(cfg, LoadCorpusFrom(cfg));
  const emocap::Corpus train = corpus.Subset(emocap::Split::kTrain);
  const emocap::Corpus test = corpus.Subset(emocap::Split::kTest);
  if (test.annotations().empty()) throw emocap::DataError("test split is empty");

  const auto model = emocap::NaiveBayesModel::Train(train, NbOptions(cfg));
  const fs::path model_path =
      cfg.model.empty() ? fs::path(cfg.out) / "nb_model.json" : fs::path(cfg.model);
  model.Save(model_path);

  const auto eval = emocap::EvaluateClassifier(model, test, cfg.workers);
  const emocap::Emotion majority = emocap::MajorityEmotion(train);

  Json confusion = Json::object();
  for (auto gold : emocap::kAllEmotions) {
    Json row = Json::object();
    for (auto pred : emocap::kAllEmotions) {
      row[std::string(ToString(pred))] = eval.confusion[Index(gold)][Index(pred)];
    }
    confusion[std::string(ToString(gold))] = row;
  }
  Json j;
  j["config"] = ConfigJson(cfg, "classify train");
  j["accuracy"] = Number(eval.accuracy);
  j["coarse_accuracy"] = Number(eval.coarse_accuracy);
  j["coarse_evaluated"] = eval.coarse_evaluated;
  j["confusion"] = confusion;
  j["evaluated"] = eval.evaluated;
  j["majority_baseline"] = {
      {"accuracy", Number(emocap::ConstantPredictorAccuracy(test, majority))},
      {"emotion", std::string(ToString(majority))}};
  j["train_annotations"] = train.annotations().size();
  j["vocabulary_size"] = model.vocabulary_size();
  EmitReport(cfg, "classify", j);
  return 0;
}

int RunClassifyPredict(const RunConfig& cfg) {
  Require(cfg.model, "model");
  Require(cfg.input, "input");
  const auto model = emocap::NaiveBayesModel::Load(cfg.model);
  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) throw emocap::DataError("cannot open " + cfg.input);
  emocap::csv::Reader reader(in);
  auto header = reader.Next();
  if (!header) throw emocap::DataError("empty file", cfg.input, 1);
  if (!header->empty() && header->front().starts_with("\xEF\xBB\xBF")) {
    header->front().erase(0, 3);
  }
  const auto find = [&](const char* name) -> std::optional<std::size_t> {
    const auto it = std::find(header->begin(), header->end(), name);
    if (it == header->end()) return std::nullopt;
    return static_cast<std::size_t>(it - header->begin());
  };
  const auto utt_col = find("utterance");
  if (!utt_col) throw emocap::DataError("header has no utterance column", cfg.input, 1);
  const auto painting_col = find("painting");

  std::vector<std::string> out_header = {"row", "painting", "predicted"};
  for (auto e : emocap::kAllEmotions) out_header.emplace_back(ToString(e));
  std::vector<std::vector<std::string>> rows;
  std::size_t row = 0;
  while (auto fields = reader.Next()) {
    if (fields->size() == 1 && fields->front().empty()) continue;
    if (fields->size() != header->size()) {
      throw emocap::DataError("expected " + std::to_string(header->size()) + " fields",
                              cfg.input, reader.line());
    }
    const auto dist = model.Predict((*fields)[*utt_col]);
    std::vector<std::string> out = {std::to_string(row++),
                                    painting_col ? (*fields)[*painting_col] : "",
                                    std::string(ToString(dist.Argmax()))};
    for (double p : dist.probs()) out.push_back(emocap::report::FormatNumber(p));
    rows.push_back(std::move(out));
  }
  emocap::report::WriteCsv(fs::path(cfg.out) / "predictions.csv", out_header, rows);
  return 0;
}

// ---------------------------------------------------------------- eval

int RunEval(const RunConfig& cfg) {
  Require(cfg.generations, "generations");
  const emocap::Corpus corpus = WithSplits(cfg, LoadCorpusFrom(cfg));
  const emocap::Corpus train = corpus.Subset(emocap::Split::kTrain);
  const auto generations = emocap::LoadGenerations(cfg.generations);
  const auto similes = emocap::LoadSimiles(cfg.similes);
  const auto model = cfg.model.empty() ? emocap::NaiveBayesModel::Train(train, NbOptions(cfg))
                                       : emocap::NaiveBayesModel::Load(cfg.model);

  std::vector<emocap::TokenSeq> training;
  training.reserve(train.annotations().size());
  for (const auto& ann : train.annotations()) training.push_back(emocap::Tokenize(ann.utterance));

  emocap::EvaluationOptions opts;
  opts.lcs_subsample = cfg.lcs_subsample;
  opts.seed = cfg.seed;
  opts.workers = cfg.workers;
  const auto report =
      emocap::EvaluateGenerations(generations, corpus, training, model, similes, opts);

  Json j;
  Json config = ConfigJson(cfg, "eval");
  config["generations"] = cfg.generations;
  if (!cfg.model.empty()) config["model"] = cfg.model;
  for (const auto& [k, v] : report.config) config["metric." + k] = v;
  j["config"] = config;
  Json metrics = Json::object();
  for (const auto& [k, v] : report.values) metrics[k] = Number(v);
  j["metrics"] = metrics;
  j["counts"] = report.counts;

  if (!cfg.predictions.empty()) {
    const auto predictions = emocap::LoadPredictions(cfg.predictions);
    const auto image = emocap::EvaluateImagePredictions(
        predictions, corpus.Subset(emocap::Split::kTest));
    j["image_predictions"] = {{"dominant_accuracy", Number(image.dominant_accuracy)},
                              {"evaluated", image.evaluated},
                              {"mean_kl", Number(image.mean_kl)},
                              {"qualifying", image.qualifying}};
    j["config"]["predictions"] = cfg.predictions;
  }
  EmitReport(cfg, "eval", j);
  return 0;
}

// ---------------------------------------------------------------- inject

int RunInject(const RunConfig& cfg) {
  Require(cfg.captions, "captions");
  if (cfg.distributions.empty() == cfg.target.empty()) {
    throw emocap::ConfigError("give exactly one of --distributions and --target");
  }
  const auto captions = emocap::LoadGenerations(cfg.captions);
  const auto anps = emocap::LoadAnps(cfg.anps);
  const auto tagger = emocap::TaggerModel::Load(cfg.tagger);

  std::optional<emocap::Polarity> fixed;
  emocap::PredictionSet distributions;
  if (!cfg.target.empty()) {
    fixed = emocap::ParsePolarity(cfg.target);
    if (!fixed) throw emocap::ConfigError("--target must be positive or negative");
  } else {
    distributions = emocap::LoadPredictions(cfg.distributions);
  }

  std::vector<std::vector<std::string>> rows;
  std::size_t injected = 0;
  std::size_t row = 0;
  for (const auto& [painting, text] : captions.utterances) {
    emocap::Rng rng(emocap::MixSeed(cfg.seed, row++));
    emocap::Polarity target;
    if (fixed) {
      target = *fixed;
    } else {
      const auto it = distributions.find(painting);
      if (it == distributions.end()) {
        throw emocap::DataError("no emotion distribution for painting " + painting);
      }
      target = emocap::ResolveSentiment(it->second, rng);
    }
    const auto result = emocap::InjectAnp(emocap::Analyze(text, tagger), target, anps, rng);
    if (result.injected) ++injected;
    rows.push_back({painting, result.utterance, result.injected ? "1" : "0",
                    result.anp ? result.anp->first : "", result.anp ? result.anp->second : "",
                    std::string(ToString(result.sentiment)), text});
  }
  emocap::report::WriteCsv(
      fs::path(cfg.out) / "injected.csv",
      {"painting", "utterance", "injected", "adjective", "noun", "sentiment", "original"},
      rows);
  Json j;
  j["config"] = ConfigJson(cfg, "inject");
  j["config"]["captions"] = cfg.captions;
  if (fixed) j["config"]["target"] = std::string(ToString(*fixed));
  if (!cfg.distributions.empty()) j["config"]["distributions"] = cfg.distributions;
  j["captions"] = captions.utterances.size();
  j["injected"] = injected;
  EmitReport(cfg, "inject", j);
  return 0;
}

// ---------------------------------------------------------------- tag-train

int RunTagTrain(const RunConfig& cfg) {
  Require(cfg.tagged, "tagged");
  if (cfg.epochs < 1) throw emocap::ConfigError("--epochs must be at least 1");
  const auto sentences = emocap::ReadTaggedCorpus(cfg.tagged);
  emocap::TaggerOptions opts;
  opts.epochs = cfg.epochs;
  opts.seed = cfg.seed;
  opts.dictionary_min_count = cfg.dictionary_min_count;
  const auto model = emocap::TaggerModel::Train(sentences, opts);
  const fs::path model_path =
      cfg.model.empty() ? fs::path(cfg.out) / "tagger.json" : fs::path(cfg.model);
  model.Save(model_path);

  std::size_t tokens = 0;
  for (const auto& s : sentences) tokens += s.tokens.size();
  Json j;
  j["config"] = {{"command", "tag-train"},
                 {"dictionary_min_count", cfg.dictionary_min_count},
                 {"epochs", cfg.epochs},
                 {"seed", cfg.seed},
                 {"tagged", cfg.tagged}};
  j["sentences"] = sentences.size();
  j["tokens"] = tokens;
  j["training_accuracy"] = Number(emocap::TaggingAccuracy(model, sentences));
  if (!cfg.heldout.empty()) {
    const auto gold = emocap::ReadTaggedCorpus(cfg.heldout);
    j["config"]["heldout"] = cfg.heldout;
    j["heldout_accuracy"] = Number(emocap::TaggingAccuracy(model, gold));
    j["heldout_sentences"] = gold.size();
  }
  EmitReport(cfg, "tag_train", j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.sentiment_lexicon = DataPath("lexicons/vader_lexicon.txt");
  cfg.sentiment_constants = DataPath("lexicons/sentiment_constants.json");
  cfg.subjectivity_lexicon = DataPath("lexicons/subjectivity.csv");
  cfg.concreteness_lexicon = DataPath("lexicons/concreteness_sample.tsv");
  cfg.similes = DataPath("lexicons/similes.txt");
  cfg.anps = DataPath("lexicons/anps.csv");
  cfg.tagger = DataPath("models/tagger.json");

  CLI::App app{"emocap: affective caption corpus toolkit"};
  app.set_config("--config", "", "TOML-style key = value file; flags override it");
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--corpus", cfg.corpus, "annotation file (csv or jsonl)")
      ->check(CLI::ExistingFile);
  app.add_option("--format", cfg.corpus_format, "corpus format")
      ->check(CLI::IsMember({"auto", "csv", "jsonl"}));
  app.add_option("--splits", cfg.splits, "painting,split file")->check(CLI::ExistingFile);
  app.add_option("--ratios", cfg.ratios, "train,val,test ratios")->delimiter(',');
  app.add_option("--seed", cfg.seed, "seed for every random choice");
  app.add_option("--sentiment-lexicon", cfg.sentiment_lexicon)->check(CLI::ExistingFile);
  app.add_option("--sentiment-constants", cfg.sentiment_constants)
      ->check(CLI::ExistingFile);
  app.add_option("--subjectivity", cfg.subjectivity_lexicon)->check(CLI::ExistingFile);
  app.add_option("--concreteness", cfg.concreteness_lexicon,
                 "TSV with Word and Conc.M columns")
      ->check(CLI::ExistingFile);
  app.add_option("--similes", cfg.similes)->check(CLI::ExistingFile);
  app.add_option("--anps", cfg.anps)->check(CLI::ExistingFile);
  app.add_option("--tagger", cfg.tagger)->check(CLI::ExistingFile);
  app.add_option("--lcs-subsample", cfg.lcs_subsample)->check(CLI::PositiveNumber);
  app.add_option("--nb-alpha", cfg.nb_alpha);
  app.add_option("--nb-orders", cfg.nb_orders)->delimiter(',');
  app.add_option("--out", cfg.out, "output directory");
  app.add_option("--emit", cfg.emit, "json, csv and/or text")
      ->delimiter(',')
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--workers", cfg.workers)->check(CLI::Range(1, 256));

  auto* ingest = app.add_subcommand("ingest", "load a corpus and write its split file");
  auto* analyze = app.add_subcommand("analyze", "corpus statistics and affect metrics");
  auto* classify = app.add_subcommand("classify", "naive Bayes emotion classifier");
  classify->require_subcommand(1);
  auto* train = classify->add_subcommand("train", "train on the train split, score the test split");
  train->add_option("--model", cfg.model, "where to save the model");
  auto* predict = classify->add_subcommand("predict", "emotion posteriors for a CSV");
  predict->add_option("--model", cfg.model)->check(CLI::ExistingFile);
  predict->add_option("--input", cfg.input, "CSV with an utterance column")
      ->check(CLI::ExistingFile);
  auto* eval = app.add_subcommand("eval", "score generated captions");
  eval->add_option("--generations", cfg.generations, "painting,utterance CSV")
      ->check(CLI::ExistingFile);
  eval->add_option("--predictions", cfg.predictions, "painting + 9 probabilities CSV")
      ->check(CLI::ExistingFile);
  eval->add_option("--model", cfg.model, "trained classifier (else trained here)")
      ->check(CLI::ExistingFile);
  auto* inject = app.add_subcommand("inject", "add sentiment adjectives to captions");
  inject->add_option("--captions", cfg.captions, "painting,utterance CSV")
      ->check(CLI::ExistingFile);
  inject->add_option("--distributions", cfg.distributions, "painting + 9 probabilities CSV")
      ->check(CLI::ExistingFile);
  inject->add_option("--target", cfg.target, "positive or negative for every caption");
  auto* tag_train = app.add_subcommand("tag-train", "train the part-of-speech tagger");
  tag_train->add_option("--tagged", cfg.tagged, "token_TAG corpus")->check(CLI::ExistingFile);
  tag_train->add_option("--heldout", cfg.heldout, "token_TAG corpus to score")
      ->check(CLI::ExistingFile);
  tag_train->add_option("--model", cfg.model, "where to save the model");
  tag_train->add_option("--epochs", cfg.epochs);
  tag_train->add_option("--dict-min-count", cfg.dictionary_min_count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    fs::create_directories(cfg.out);
    if (*ingest) return RunIngest(cfg);
    if (*analyze) return RunAnalyze(cfg);
    if (*train) return RunClassifyTrain(cfg);
    if (*predict) return RunClassifyPredict(cfg);
    if (*eval) return RunEval(cfg);
    if (*inject) return RunInject(cfg);
    if (*tag_train) return RunTagTrain(cfg);
    return 2;
  } catch (const emocap::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const emocap::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}

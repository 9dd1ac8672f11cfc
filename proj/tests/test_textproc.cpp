#include <doctest.h>

#include <sstream>

#include "emocap/error.hpp"
#include "emocap/textproc.hpp"
#include "support.hpp"

using namespace emocap;

namespace {

using Tokens = std::vector<std::string>;

const TaggerModel& Shipped() {
  static const TaggerModel m = TaggerModel::Load(testing::Data("models/tagger.json"));
  return m;
}

std::vector<TaggedSentence> Toy() {
  return ParseTaggedCorpus(
      "the_OTHER dog_NOUN runs_VERB in_ADP the_OTHER park_NOUN\n"
      "a_OTHER red_ADJ bird_NOUN sings_VERB\n"
      "she_PRON looks_VERB at_ADP the_OTHER sad_ADJ man_NOUN\n"
      "\n"
      "he_PRON sees_VERB a_OTHER dark_ADJ sky_NOUN\n");
}

}  // namespace

TEST_CASE("tokenizer: lowercase, punctuation, whitespace") {
  CHECK(Tokenize("The Painting is BEAUTIFUL!") == Tokens{"the", "painting", "is", "beautiful"});
  CHECK(Tokenize("  calm,\tquiet...\n lake ") == Tokens{"calm", "quiet", "lake"});
  CHECK(Tokenize("\"well-lit\" room") == Tokens{"well-lit", "room"});
  CHECK(Tokenize("").empty());
  CHECK(Tokenize(" ... !! ").empty());
  CHECK(Tokenize("a\xC2\xA0" "b") == Tokens{"a", "b"});
  CHECK(Tokenize("\xE2\x80\x9Cwow\xE2\x80\x9D") == Tokens{"wow"});
}

TEST_CASE("tokenizer: clitics") {
  CHECK(Tokenize("don't") == Tokens{"do", "n't"});
  CHECK(Tokenize("It's the man's hat") == Tokens{"it", "'s", "the", "man", "'s", "hat"});
  CHECK(Tokenize("I'm sure they're here, we'll see") ==
        Tokens{"i", "'m", "sure", "they", "'re", "here", "we", "'ll", "see"});
  CHECK(Tokenize("I\xE2\x80\x99ve seen it") == Tokens{"i", "'ve", "seen", "it"});
  CHECK(Tokenize("o'clock") == Tokens{"o'clock"});
}

TEST_CASE("tokenizer is idempotent on its own output") {
  const auto corpus = LoadCorpus(testing::Fixture("corpus_200.csv"));
  for (const auto& ann : corpus.annotations()) {
    const auto once = Tokenize(ann.utterance);
    std::string joined;
    for (const auto& t : once) joined += t + " ";
    CHECK(Tokenize(joined) == once);
  }
}

TEST_CASE("lemmatizer") {
  CHECK(Lemmatize("horses", PosTag::kNoun) == "horse");
  CHECK(Lemmatize("skies", PosTag::kNoun) == "sky");
  CHECK(Lemmatize("women", PosTag::kNoun) == "woman");
  CHECK(Lemmatize("boats", PosTag::kNoun) == "boat");
  CHECK(Lemmatize("glass", PosTag::kNoun) == "glass");
  CHECK(Lemmatize("running", PosTag::kVerb) == "run");
  CHECK(Lemmatize("was", PosTag::kVerb) == "be");
  CHECK(Lemmatize("smiling", PosTag::kVerb) == "smile");
  CHECK(Lemmatize("looked", PosTag::kVerb) == "look");
  CHECK(Lemmatize("makes", PosTag::kVerb) == "make");
  CHECK(Lemmatize("better", PosTag::kAdj) == "good");
  CHECK(Lemmatize("darker", PosTag::kAdj) == "dark");
  CHECK(Lemmatize("silver", PosTag::kAdj) == "silver");
  // other tags are left alone
  CHECK(Lemmatize("was", PosTag::kOther) == "was");
  CHECK(Lemmatize("horses", PosTag::kAdp) == "horses");
}

TEST_CASE("tagged corpus parsing") {
  const auto s = ParseTaggedCorpus("a_b_NOUN x_ADJ\n\n");
  REQUIRE(s.size() == 1);
  CHECK(s[0].tokens == Tokens{"a_b", "x"});
  CHECK(s[0].tags == std::vector<PosTag>{PosTag::kNoun, PosTag::kAdj});
  try {
    ParseTaggedCorpus("ok_NOUN\nbad_XYZ\n");
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(e.row() == 2);
  }
  CHECK_THROWS_AS(ParseTaggedCorpus("notag\n"), DataError);
  for (PosTag t : {PosTag::kNoun, PosTag::kPron, PosTag::kAdj, PosTag::kAdp, PosTag::kVerb,
                   PosTag::kOther}) {
    CHECK(ParsePosTag(ToString(t)) == t);
  }
}

TEST_CASE("tagger: training is deterministic and fits a toy corpus") {
  const auto data = Toy();
  TaggerOptions opts;
  opts.dictionary_min_count = 1000;
  const auto a = TaggerModel::Train(data, opts);
  const auto b = TaggerModel::Train(data, opts);
  CHECK(a.ToJson() == b.ToJson());
  CHECK(TaggingAccuracy(a, data) == 1.0);
}

TEST_CASE("tagger: JSON round-trip is byte-identical") {
  const auto m = TaggerModel::Train(Toy());
  const auto back = TaggerModel::FromJson(m.ToJson());
  CHECK(back == m);
  CHECK(back.ToJson() == m.ToJson());
  const Tokens s = {"the", "dark", "bird", "sings"};
  CHECK(back.Tag(s) == m.Tag(s));

  testing::TempDir dir("tagger");
  m.Save(dir / "m.json");
  CHECK(testing::ReadFile(dir / "m.json") == m.ToJson());
  CHECK(TaggerModel::Load(dir / "m.json") == m);
}

TEST_CASE("tagger: bad model files") {
  CHECK_THROWS_AS(TaggerModel::FromJson("not json"), DataError);
  CHECK_THROWS_AS(TaggerModel::FromJson("{\"version\": \"other/9\"}"), DataError);
  CHECK_THROWS_AS(TaggerModel::Load("/nonexistent/tagger.json"), DataError);
}

TEST_CASE("tagger: shipped model on held-out sentences") {
  const auto heldout = ReadTaggedCorpus(testing::Fixture("tagged_heldout.txt"));
  REQUIRE(heldout.size() == 500);
  CHECK(TaggingAccuracy(Shipped(), heldout) >= 0.85);
}

TEST_CASE("tagger: shipped model on caption-like text") {
  const auto t = Analyze("The old man is sitting by the river", Shipped());
  REQUIRE(t.tokens.size() == 8);
  CHECK(t.tags == std::vector<PosTag>{PosTag::kOther, PosTag::kAdj, PosTag::kNoun,
                                      PosTag::kVerb, PosTag::kVerb, PosTag::kAdp,
                                      PosTag::kOther, PosTag::kNoun});
  CHECK(t.lemmas[3] == "be");
  CHECK(t.lemmas[4] == "sit");
  const auto she = Analyze("she looks sad", Shipped());
  CHECK(she.tags[0] == PosTag::kPron);
  CHECK(she.tags[2] == PosTag::kAdj);
}

TEST_CASE("analyze keeps tokens, tags and lemmas aligned") {
  const auto corpus = LoadCorpus(testing::Fixture("corpus_200.csv"));
  for (const auto& ann : corpus.annotations()) {
    const auto t = Analyze(ann.utterance, Shipped());
    CHECK(t.tokens == Tokenize(ann.utterance));
    CHECK(t.tags.size() == t.tokens.size());
    CHECK(t.lemmas.size() == t.tokens.size());
  }
}

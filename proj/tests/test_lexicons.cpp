#include <doctest.h>

#include "emocap/error.hpp"
#include "emocap/lexicons.hpp"
#include "support.hpp"

using namespace emocap;

namespace {

template <typename F>
DataError ExpectDataError(F&& load) {
  try {
    load();
  } catch (const DataError& e) {
    return e;
  }
  FAIL("expected DataError");
  return DataError("unreachable");
}

}  // namespace

TEST_CASE("concreteness loader") {
  testing::TempDir dir("conc");
  SUBCASE("extra columns, CRLF, case folding, duplicates") {
    const auto p = dir.Write("c.tsv",
                             "Word\tBigram\tConc.M\tConc.SD\r\n"
                             "Apple\t0\t5\t0.1\r\n"
                             "idea\t0\t1.61\t1\r\n"
                             "\r\n"
                             "apple\t0\t4.9\t0.2\r\n");
    const auto lex = LoadConcreteness(p);
    CHECK(lex.ratings.size() == 2);
    CHECK(lex.duplicates == 1);
    CHECK(lex.Lookup("apple") == 4.9);
    CHECK(lex.Lookup("idea") == 1.61);
    CHECK_FALSE(lex.Lookup("pear").has_value());
  }
  SUBCASE("out of range rating names the row and column") {
    const auto e = ExpectDataError(
        [&] { LoadConcreteness(dir.Write("r.tsv", "Word\tConc.M\nok\t3\nbad\t5.5\n")); });
    CHECK(e.row() == 3);
    CHECK(e.column() == "Conc.M");
  }
  SUBCASE("not a number") {
    CHECK(ExpectDataError([&] {
            LoadConcreteness(dir.Write("n.tsv", "Word\tConc.M\nok\tx\n"));
          }).row() == 2);
  }
  SUBCASE("missing header columns") {
    CHECK(ExpectDataError([&] {
            LoadConcreteness(dir.Write("h.tsv", "Word\tRating\nok\t3\n"));
          }).row() == 1);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(LoadConcreteness(dir / "absent.tsv"), DataError);
  }
}

TEST_CASE("shipped concreteness sample") {
  const auto lex = LoadConcreteness(testing::Data("lexicons/concreteness_sample.tsv"));
  CHECK(lex.Lookup("banana") == 5.0);
  CHECK(lex.Lookup("bagel") == 5.0);
  CHECK(lex.Lookup("love") == 2.07);
  CHECK(lex.Lookup("psyche") == 1.34);
}

TEST_CASE("sentiment loader") {
  testing::TempDir dir("vader");
  SUBCASE("rows, duplicates, extra columns") {
    const auto p = dir.Write("v.txt", "good\t1.9\t0.9\t[2,2]\r\nbad\t-2.5\nGood\t2.0\n\n");
    const auto lex = LoadSentiment(p);
    CHECK(lex.valences.size() == 2);
    CHECK(lex.duplicates == 1);
    CHECK(lex.Lookup("good") == 2.0);
    CHECK(lex.Lookup("bad") == -2.5);
    CHECK(lex.constants == SentimentConstants::Defaults());
  }
  SUBCASE("range") {
    const auto e = ExpectDataError([&] { LoadSentiment(dir.Write("r.txt", "a\t1\nb\t-4.5\n")); });
    CHECK(e.row() == 2);
    CHECK(e.column() == "valence");
  }
  SUBCASE("one column") {
    ExpectDataError([&] { LoadSentiment(dir.Write("o.txt", "lonely\n")); });
  }
  SUBCASE("empty") {
    ExpectDataError([&] { LoadSentiment(dir.Write("e.txt", "\n\n")); });
  }
  SUBCASE("bad constants") {
    const auto lex = dir.Write("l.txt", "a\t1\n");
    ExpectDataError([&] { LoadSentiment(lex, dir.Write("c.json", "{ nope")); });
    ExpectDataError(
        [&] { LoadSentiment(lex, dir.Write("z.json", "{\"normalization_alpha\": 0}")); });
  }
}

TEST_CASE("shipped sentiment data") {
  const auto lex = LoadSentiment(testing::Data("lexicons/vader_lexicon.txt"),
                                 testing::Data("lexicons/sentiment_constants.json"));
  CHECK(lex.valences.size() > 7000);
  CHECK(lex.constants.normalization_alpha == 15.0);
  CHECK(lex.constants.negation_scalar == -0.74);
  CHECK(lex.constants.boosters.count("very") == 1);
  CHECK(lex.constants == SentimentConstants::Defaults());
}

TEST_CASE("subjectivity loader") {
  testing::TempDir dir("subj");
  const std::string header = "lemma,tag,polarity,subjectivity,intensity\n";
  SUBCASE("lookup prefers the exact tag") {
    const auto p = dir.Write("s.csv", header +
                                          "light,NOUN,0.4,0.1,1\n"
                                          "light,ADJ,0.4,0.7,1\n"
                                          "very,OTHER,0.2,0.3,1.3\n"
                                          "Light,ADJ,0.4,0.6,1\n");
    const auto lex = LoadSubjectivity(p);
    CHECK(lex.duplicates == 1);
    REQUIRE(lex.Lookup("light", PosTag::kAdj));
    CHECK(lex.Lookup("light", PosTag::kAdj)->subjectivity == 0.6);
    CHECK(lex.Lookup("light", PosTag::kNoun)->subjectivity == 0.1);
    // no VERB entry: falls back to the lowest-ordered tag (NOUN)
    CHECK(lex.Lookup("light", PosTag::kVerb)->subjectivity == 0.1);
    CHECK(lex.Lookup("very", PosTag::kAdj)->intensity == 1.3);
    CHECK(lex.Lookup("dark", PosTag::kAdj) == nullptr);
  }
  SUBCASE("errors") {
    CHECK(ExpectDataError([&] {
            LoadSubjectivity(dir.Write("a.csv", header + "x,ADJ,2,0.5,1\n"));
          }).column() == "polarity");
    CHECK(ExpectDataError([&] {
            LoadSubjectivity(dir.Write("b.csv", header + "x,ADJ,0,1.5,1\n"));
          }).column() == "subjectivity");
    CHECK(ExpectDataError([&] {
            LoadSubjectivity(dir.Write("c.csv", header + "x,ADV,0,0.5,1\n"));
          }).column() == "tag");
    CHECK(ExpectDataError([&] {
            LoadSubjectivity(dir.Write("d.csv", header + "x,ADJ,0,0.5,0\n"));
          }).column() == "intensity");
    ExpectDataError([&] { LoadSubjectivity(dir.Write("e.csv", "word,score\nx,1\n")); });
  }
}

TEST_CASE("shipped subjectivity lexicon") {
  const auto lex = LoadSubjectivity(testing::Data("lexicons/subjectivity.csv"));
  CHECK(lex.entries.size() > 1000);
  for (const auto& [lemma, per_tag] : lex.entries) {
    for (const auto& e : per_tag) {
      if (!e) continue;
      CHECK(e->subjectivity >= 0.0);
      CHECK(e->subjectivity <= 1.0);
      CHECK(e->polarity >= -1.0);
      CHECK(e->polarity <= 1.0);
      CHECK(e->intensity > 0.0);
    }
  }
}

TEST_CASE("simile loader") {
  testing::TempDir dir("sim");
  const auto lex = LoadSimiles(dir.Write("s.txt", "# comment\nLooks Like\n\n  reminds me of \n"));
  CHECK(lex.patterns == std::vector<std::string>{"looks like", "reminds me of"});
  CHECK(lex.tokenized[1] == std::vector<std::string>{"reminds", "me", "of"});
  CHECK(ExpectDataError([&] { LoadSimiles(dir.Write("d.txt", "as if\nAS IF\n")); }).row() == 2);
  ExpectDataError([&] { LoadSimiles(dir.Write("e.txt", "# only\n")); });
  const auto shipped = LoadSimiles(testing::Data("lexicons/similes.txt"));
  CHECK(shipped.patterns.size() == 21);
}

TEST_CASE("anp loader and writer") {
  testing::TempDir dir("anp");
  SUBCASE("header optional, duplicates last-wins") {
    const auto p = dir.Write("a.csv",
                             "beautiful,bird,positive,10\n"
                             "dead,bird,NEG,4\n"
                             "Beautiful,Bird,pos,12\n");
    const auto lex = LoadAnps(p);
    REQUIRE(lex.entries.size() == 2);
    CHECK(lex.duplicates == 1);
    CHECK(lex.entries[0].frequency == 12);
    CHECK(lex.ForNoun("bird", Polarity::kNegative) == std::vector<std::size_t>{1});
    CHECK(lex.HasNoun("bird", Polarity::kPositive));
    CHECK_FALSE(lex.HasNoun("tree", Polarity::kPositive));

    WriteAnps(lex, dir / "out.csv");
    CHECK(LoadAnps(dir / "out.csv").entries == lex.entries);
  }
  SUBCASE("errors") {
    CHECK(ExpectDataError([&] {
            LoadAnps(dir.Write("s.csv", "adjective,noun,sentiment,frequency\nx,y,neutral,1\n"));
          }).column() == "sentiment");
    CHECK(ExpectDataError([&] { LoadAnps(dir.Write("f.csv", "x,y,positive,1.5\n")); })
              .column() == "frequency");
    CHECK(ExpectDataError([&] { LoadAnps(dir.Write("n.csv", "x,y,positive,-1\n")); })
              .column() == "frequency");
    ExpectDataError([&] { LoadAnps(dir.Write("c.csv", "x,y,positive\n")); });
  }
  const auto shipped = LoadAnps(testing::Data("lexicons/anps.csv"));
  CHECK(shipped.entries.size() == 86);
  CHECK(shipped.duplicates == 0);
}

TEST_CASE("polarity names") {
  CHECK(ToString(Polarity::kPositive) == "POSITIVE");
  CHECK(ToString(Polarity::kNegative) == "NEGATIVE");
  CHECK(ParsePolarity("Positive") == Polarity::kPositive);
  CHECK(ParsePolarity("neg") == Polarity::kNegative);
  CHECK_FALSE(ParsePolarity("neutral").has_value());
}

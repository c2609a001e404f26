#include "presse/lexicon.h"

#include "doctest.h"
#include "presse/errors.h"
#include "presse/unicode.h"
#include "test_util.h"

namespace presse {
namespace {

using testing::FixtureNames;
using testing::TempDir;

TEST_CASE("fixture lexicon applies count, length and blocklist filters") {
  const NameLexicon &names = FixtureNames();
  REQUIRE(names.size() > 150);

  const NameEntry *jm = names.Find("jean-michel");
  REQUIRE(jm != nullptr);
  CHECK(jm->masculinity == 1.0);

  CHECK(names.Find("avril") == nullptr);
  CHECK(names.IsBlocked("Avril"));
  CHECK(names.Find("Paris") == nullptr);
  CHECK(names.Find("lou") == nullptr);    // 3 characters
  CHECK(names.Find("Léa") == nullptr);    // 3 characters
  CHECK(names.Find("Maëlyne") == nullptr);  // 40 births

  const NameEntry *anne = names.Find("anne");
  REQUIRE(anne != nullptr);
  const double expected = 500.0 / (500.0 + 100000.0);
  CHECK(anne->masculinity == expected);
  CHECK(anne->masculinity == doctest::Approx(0.004975).epsilon(1e-4));
}

TEST_CASE("masculinity_of reproduces the worked scores") {
  const NameLexicon &names = FixtureNames();
  CHECK(names.MasculinityOf("Camille") == 0.25);
  CHECK(names.MasculinityOf("Maëva") == 0.0);
  CHECK(names.MasculinityOf("Loïs") == 0.69);
  CHECK(names.MasculinityOf("Jean-Michel") == 1.0);
  CHECK_FALSE(names.MasculinityOf("xyzzy").has_value());
}

TEST_CASE("lookup is case-insensitive and diacritic-sensitive") {
  const NameLexicon &names = FixtureNames();
  CHECK(names.MasculinityOf("CAMILLE") == 0.25);
  CHECK(names.MasculinityOf("MAËVA") == 0.0);
  CHECK_FALSE(names.MasculinityOf("Maeva").has_value());
  // Decomposed "e" + combining diaeresis composes to the same key.
  CHECK(names.MasculinityOf("Mae\xCC\x88va") == 0.0);
}

TEST_CASE("every entry satisfies the lexicon invariants") {
  const NameLexicon &names = FixtureNames();
  for (const auto &[key, entry] : names.entries()) {
    const uint64_t total = entry.male_count + entry.female_count;
    CHECK(total >= 100);
    CHECK(CodePointLength(key) >= 4);
    CHECK(names.blocklist().count(key) == 0);
    CHECK(entry.masculinity >= 0.0);
    CHECK(entry.masculinity <= 1.0);
    CHECK(entry.masculinity == static_cast<double>(entry.male_count) /
                                   static_cast<double>(total));
    if (entry.female_count == 0) CHECK(entry.masculinity == 1.0);
    if (entry.male_count == 0) CHECK(entry.masculinity == 0.0);
    if (entry.male_count == entry.female_count) CHECK(entry.masculinity == 0.5);
  }
  CHECK(names.MasculinityOf("Dominique") == 0.5);
}

TEST_CASE("duplicate rows are summed before filtering") {
  std::vector<RawNameCount> rows = {
      {"Eden", 30, 20}, {"eden", 20, 30}, {"EDEN", 0, 0}};
  NameLexicon lexicon = NameLexicon::Build(rows, {});
  const NameEntry *eden = lexicon.Find("Eden");
  REQUIRE(eden != nullptr);
  CHECK(eden->male_count == 50);
  CHECK(eden->female_count == 50);
  CHECK(eden->masculinity == 0.5);
  // Each row alone would fall under the threshold of 100.
  CHECK(NameLexicon::Build({rows[0]}, {}).empty());
}

TEST_CASE("raising the occurrence threshold never adds entries") {
  TempDir dir;
  auto rows = ReadNameCounts(testing::DataPath("lexicon/names.csv"));
  auto blocklist = ReadWordList(testing::DataPath("lexicon/blocklist.txt"));
  const NameLexicon *previous = nullptr;
  std::vector<NameLexicon> built;
  built.reserve(6);
  for (uint64_t threshold : {1, 100, 1000, 10000, 100000, 1000000}) {
    built.push_back(NameLexicon::Build(rows, blocklist, {threshold, 4}));
    const NameLexicon &current = built.back();
    if (previous != nullptr) {
      CHECK(current.size() <= previous->size());
      for (const auto &[key, entry] : current.entries()) {
        CHECK(previous->Find(key) != nullptr);
      }
    }
    previous = &current;
  }
}

TEST_CASE("loading is deterministic") {
  auto path = testing::DataPath("lexicon/names.csv");
  auto block = testing::DataPath("lexicon/blocklist.txt");
  CHECK(LoadNameLexicon(path, block).Digest() ==
        LoadNameLexicon(path, block).Digest());
  TempDir dir;
  auto empty_block = dir.Write("empty.txt", "# nothing\n");
  CHECK(LoadNameLexicon(path, block).Digest() !=
        LoadNameLexicon(path, empty_block).Digest());
}

TEST_CASE("malformed rows report their line number") {
  TempDir dir;
  auto bad_count = dir.Write("bad.csv", "name;male;female\nJeanne;10;5\nPaul;x;3\n");
  try {
    ReadNameCounts(bad_count);
    FAIL("expected LoadError");
  } catch (const LoadError &e) {
    CHECK(e.line() == 3);
  }
  auto negative = dir.Write("neg.csv", "name;male;female\nPaul;-3;3\n");
  CHECK_THROWS_AS(ReadNameCounts(negative), LoadError);
  auto fields = dir.Write("fields.csv", "Paul;3\n");
  try {
    ReadNameCounts(fields);
    FAIL("expected LoadError");
  } catch (const LoadError &e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(ReadNameCounts(dir.File("missing.csv")), LoadError);
}

TEST_CASE("gender cue lexicons load and validate labels") {
  const GenderCueLexicons &cues = testing::FixtureCues();
  CHECK(cues.titles.at("madame") == Gender::kFemale);
  CHECK(cues.titles.at("m.") == Gender::kMale);
  CHECK(cues.pronouns.at("elle") == Gender::kFemale);
  CHECK(cues.pronouns.at("il") == Gender::kMale);
  CHECK(cues.professions.at("directrice") == Gender::kFemale);
  CHECK(cues.professions.count("ministre") == 0);
  CHECK(cues.speech_verbs.count("déclarer") == 1);
  CHECK(cues.first_names.at("doanna") == Gender::kFemale);

  TempDir dir;
  auto ok = dir.Write("ok.tsv", "# c\nmadame\tF\n");
  auto bad = dir.Write("bad.tsv", "madame\tF\nneutre\tX\n");
  auto verbs = dir.Write("verbs.txt", "dire\n");
  auto no_verbs = dir.Write("none.txt", "# only comments\n\n");
  CHECK_NOTHROW(LoadGenderCues({ok, ok, ok, verbs, ""}));
  try {
    LoadGenderCues({ok, bad, ok, verbs, ""});
    FAIL("expected LoadError");
  } catch (const LoadError &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(LoadGenderCues({ok, ok, ok, no_verbs, ""}), LoadError);
}

}  // namespace
}  // namespace presse

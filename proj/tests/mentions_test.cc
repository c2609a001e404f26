#include "presse/mentions.h"

#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "test_util.h"

namespace presse {
namespace {

using testing::FixtureNames;

TEST_CASE("worked example: one Jean-Michel and two Camille give 0.5") {
  MentionScore score = MasculinityRate(
      "Jean-Michel a vu Camille. Plus tard, Camille a répondu.", FixtureNames());
  CHECK(score.n_mentions == 3);
  REQUIRE(score.rate.has_value());
  CHECK(*score.rate == 0.5);
}

TEST_CASE("articles without names carry no rate") {
  MentionScore score = MasculinityRate("La séance est levée.", FixtureNames());
  CHECK(score.n_mentions == 0);
  CHECK_FALSE(score.rate.has_value());
  CHECK_FALSE(MasculinityRate("", FixtureNames()).rate.has_value());
}

TEST_CASE("single feminine name") {
  MentionScore score = MasculinityRate("Maëva chante.", FixtureNames());
  REQUIRE(score.rate.has_value());
  CHECK(*score.rate == 0.0);
}

TEST_CASE("seven mentions match the direct mean") {
  // Scores {1,1,1,0,0,0.5,0.69}; oracle is the arithmetic mean.
  const std::string text =
      "Jean-Michel, Jean-Luc et Jean-Pierre saluent Maëva et Joanne. "
      "Dominique observe Loïs.";
  MentionScore score = MasculinityRate(text, FixtureNames());
  REQUIRE(score.n_mentions == 7);
  const double scores[] = {1.0, 1.0, 1.0, 0.0, 0.0, 0.5, 0.69};
  double sum = 0.0;
  for (double s : scores) sum += s;
  const double oracle = sum / 7.0;
  CHECK(*score.rate == oracle);

  // Exact form with names whose scores are exactly those values.
  std::vector<PersonMention> mentions;
  for (double s : scores) mentions.push_back({0, {0, 1}, s});
  MentionScore exact = ScoreMentions(mentions);
  CHECK(*exact.rate == oracle);
  CHECK(*exact.rate == doctest::Approx(0.5985714285714).epsilon(1e-12));
}

std::string RandomArticle(std::mt19937 &rng, int sentences) {
  static const std::vector<std::string> names = {
      "Camille", "Jean-Michel", "Maëva", "Georges", "Nathalie",
      "Dominique", "Loïs", "Sophie", "Pierre", "Claude"};
  static const std::vector<std::string> fillers = {
      "a parlé avec", "rencontre", "soutient", "critique", "remplace"};
  std::string out;
  for (int s = 0; s < sentences; ++s) {
    out += names[rng() % names.size()] + " " + fillers[rng() % fillers.size()] +
           " " + names[rng() % names.size()];
    if (rng() % 2) out += " et " + names[rng() % names.size()];
    out += ". ";
  }
  return out;
}

TEST_CASE("mention-rate properties") {
  const NameLexicon &names = FixtureNames();
  std::mt19937 rng(2021);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string a = RandomArticle(rng, 1 + rng() % 6);
    const std::string b = RandomArticle(rng, 1 + rng() % 6);
    MentionScore sa = MasculinityRate(a, names);
    MentionScore sb = MasculinityRate(b, names);
    REQUIRE(sa.rate.has_value());
    REQUIRE(sb.rate.has_value());
    CHECK(*sa.rate >= 0.0);
    CHECK(*sa.rate <= 1.0);

    // Concatenation equals the mention-weighted mean.
    MentionScore sab = MasculinityRate(a + b, names);
    const double weighted =
        (*sa.rate * sa.n_mentions + *sb.rate * sb.n_mentions) /
        static_cast<double>(sa.n_mentions + sb.n_mentions);
    CHECK(std::fabs(*sab.rate - weighted) <= 1e-12);

    // Sentence order does not matter.
    MentionScore sba = MasculinityRate(b + a, names);
    CHECK(std::fabs(*sba.rate - *sab.rate) <= 1e-12);

    // One more mention moves the rate strictly toward its score.
    MentionScore more = MasculinityRate(a + "Maëva arrive.", names);
    if (*sa.rate != 0.0) {
      CHECK(*more.rate < *sa.rate);
      CHECK(*more.rate >= 0.0);
    }
    MentionScore more_m = MasculinityRate(a + "Jean-Michel arrive.", names);
    if (*sa.rate != 1.0) CHECK(*more_m.rate > *sa.rate);
  }
}

}  // namespace
}  // namespace presse

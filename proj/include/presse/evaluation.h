#ifndef PRESSE_EVALUATION_H_
#define PRESSE_EVALUATION_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "presse/lexicon.h"
#include "presse/textkit.h"

namespace presse {

enum class AnnotatedGender { kFemale, kMale, kNeutral, kUnknown };

// Accepts F, M, N and U (and the French words).
std::optional<AnnotatedGender> ParseAnnotatedGender(std::string_view label);

struct ManualMention {
  std::string name;
  AnnotatedGender gender = AnnotatedGender::kUnknown;
};

struct ManualQuote {
  TokenRange tokens;  // over Tokenize(text), end exclusive
  std::string speaker;
  AnnotatedGender gender = AnnotatedGender::kUnknown;
};

struct AnnotatedArticle {
  std::string id;
  std::string text;
  std::vector<ManualMention> manual_mentions;
  std::vector<ManualQuote> manual_quotes;
};

// Mean of M=1, F=0, Neutral=0.5 over the annotated mentions; Unknown is
// skipped. Absent when nothing is countable.
std::optional<double> ManualMentionRate(std::span<const ManualMention> mentions);

struct WilcoxonResult {
  // min(W+, W-) over the nonzero differences.
  double statistic = 0.0;
  double w_plus = 0.0;
  double w_minus = 0.0;
  double p_value = 1.0;
  size_t n = 0;  // pairs with a nonzero difference
  bool exact = false;
};

// Largest sample size for which the exact null distribution is used.
inline constexpr size_t kWilcoxonExactMax = 25;

// Two-sided signed-rank test on first - second. Zero differences are dropped
// and tied magnitudes share their average rank. Exact p for n <= 25 counts all
// 2^n sign assignments; larger samples use the normal approximation with tie
// and continuity corrections. Throws InvariantError("degenerate sample") when
// every difference is zero.
WilcoxonResult WilcoxonSignedRank(std::span<const std::pair<double, double>> pairs);

// Sample standard deviation of first - second; 0 for fewer than two pairs.
double DifferenceStdDev(std::span<const std::pair<double, double>> pairs);

struct PrecisionRecall {
  std::optional<double> precision;
  std::optional<double> recall;
  size_t matched = 0;
  size_t predicted = 0;
  size_t gold = 0;
};

// A prediction matches the first unmatched gold span sharing at least
// `tolerance` of the gold span's tokens. Predictions are visited in document
// order and each gold span is matched at most once.
PrecisionRecall QuotePrf(std::span<const TokenRange> predicted,
                         std::span<const TokenRange> gold, double tolerance);

// (men + women) / all attributed speakers; absent without speakers.
std::optional<double> GenderResolvedFraction(size_t men, size_t women,
                                             size_t unknown);

struct EvalResult {
  size_t n_articles = 0;
  size_t n_pairs = 0;
  std::optional<WilcoxonResult> wilcoxon;  // absent for a degenerate sample
  double std_dev = 0.0;
  PrecisionRecall quotes;
  size_t men = 0;
  size_t women = 0;
  size_t unknown = 0;
  std::optional<double> gender_resolved_fraction;
};

// One JSON object per line: `url`, `text`, `manual_mentions` as
// [{"name", "gender"}] and `manual_quotes` as [{"tokens": [b, e], "speaker",
// "gender"}]. Other record fields are ignored. Throws LoadError.
std::vector<AnnotatedArticle> LoadAnnotations(const std::string &path);

// Runs both indicators over the annotated corpus and compares them with the
// manual annotations. Quote precision and recall are pooled over articles.
EvalResult Evaluate(std::span<const AnnotatedArticle> articles,
                    const NameLexicon &names, const GenderCueLexicons &cues,
                    double tolerance = 0.3);

}  // namespace presse

#endif  // PRESSE_EVALUATION_H_

#include "presse/evaluation.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "json.hpp"
#include "presse/errors.h"
#include "presse/mentions.h"
#include "presse/quotes.h"
#include "presse/unicode.h"

namespace presse {

std::optional<AnnotatedGender> ParseAnnotatedGender(std::string_view label) {
  const std::string l = NormalizeWord(Trim(label));
  if (l == "m" || l == "masculin") return AnnotatedGender::kMale;
  if (l == "f" || l == "féminin" || l == "feminin") return AnnotatedGender::kFemale;
  if (l == "n" || l == "neutre") return AnnotatedGender::kNeutral;
  if (l == "u" || l == "inconnu") return AnnotatedGender::kUnknown;
  return std::nullopt;
}

std::optional<double> ManualMentionRate(std::span<const ManualMention> mentions) {
  double sum = 0.0;
  size_t n = 0;
  for (const auto &m : mentions) {
    switch (m.gender) {
      case AnnotatedGender::kMale: sum += 1.0; break;
      case AnnotatedGender::kFemale: break;
      case AnnotatedGender::kNeutral: sum += 0.5; break;
      case AnnotatedGender::kUnknown: continue;
    }
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

namespace {

// Magnitudes closer than this are tied; smaller differences count as zero.
constexpr double kTieEpsilon = 1e-12;

}  // namespace

WilcoxonResult WilcoxonSignedRank(
    std::span<const std::pair<double, double>> pairs) {
  std::vector<double> diffs;
  for (const auto &[a, b] : pairs) {
    const double d = a - b;
    if (std::abs(d) > kTieEpsilon) diffs.push_back(d);
  }
  if (diffs.empty()) throw InvariantError("degenerate sample");
  const size_t n = diffs.size();

  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return std::abs(diffs[a]) < std::abs(diffs[b]);
  });
  // Doubled ranks are integers even for average ranks.
  std::vector<long> rank2(n);
  double tie_term = 0.0;
  for (size_t i = 0; i < n;) {
    size_t j = i + 1;
    while (j < n && std::abs(diffs[order[j]]) - std::abs(diffs[order[i]]) <=
                        kTieEpsilon) {
      ++j;
    }
    const long doubled = static_cast<long>(i + 1 + j);  // 2 * mean of i+1..j
    for (size_t k = i; k < j; ++k) rank2[order[k]] = doubled;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }

  WilcoxonResult result;
  result.n = n;
  long w_plus2 = 0, total2 = 0;
  for (size_t i = 0; i < n; ++i) {
    total2 += rank2[i];
    if (diffs[i] > 0) w_plus2 += rank2[i];
  }
  const long t2 = std::min(w_plus2, total2 - w_plus2);
  result.w_plus = w_plus2 / 2.0;
  result.w_minus = (total2 - w_plus2) / 2.0;
  result.statistic = t2 / 2.0;

  if (n <= kWilcoxonExactMax) {
    // counts[s]: sign assignments whose doubled positive-rank sum is s.
    std::vector<double> counts(static_cast<size_t>(total2) + 1, 0.0);
    counts[0] = 1.0;
    long reach = 0;
    for (size_t i = 0; i < n; ++i) {
      for (long s = reach; s >= 0; --s) {
        if (counts[s] != 0.0) counts[s + rank2[i]] += counts[s];
      }
      reach += rank2[i];
    }
    double tail = 0.0;
    for (long s = 0; s <= t2; ++s) tail += counts[s];
    result.p_value = std::min(1.0, 2.0 * tail / std::ldexp(1.0, static_cast<int>(n)));
    result.exact = true;
  } else {
    const double nn = static_cast<double>(n);
    const double mean = nn * (nn + 1) / 4.0;
    const double var = nn * (nn + 1) * (2 * nn + 1) / 24.0 - tie_term / 48.0;
    const double dev = std::max(0.0, std::abs(result.statistic - mean) - 0.5);
    const double z = var > 0 ? dev / std::sqrt(var) : 0.0;
    result.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  }
  return result;
}

double DifferenceStdDev(std::span<const std::pair<double, double>> pairs) {
  if (pairs.size() < 2) return 0.0;
  double mean = 0.0;
  for (const auto &[a, b] : pairs) mean += a - b;
  mean /= static_cast<double>(pairs.size());
  double ss = 0.0;
  for (const auto &[a, b] : pairs) ss += (a - b - mean) * (a - b - mean);
  return std::sqrt(ss / static_cast<double>(pairs.size() - 1));
}

PrecisionRecall QuotePrf(std::span<const TokenRange> predicted,
                         std::span<const TokenRange> gold, double tolerance) {
  if (!(tolerance > 0.0 && tolerance <= 1.0)) {
    throw InvariantError("tolerance must lie in (0, 1]");
  }
  std::vector<TokenRange> preds(predicted.begin(), predicted.end());
  std::vector<TokenRange> golds(gold.begin(), gold.end());
  auto by_position = [](const TokenRange &a, const TokenRange &b) {
    return a.begin != b.begin ? a.begin < b.begin : a.end < b.end;
  };
  std::stable_sort(preds.begin(), preds.end(), by_position);
  std::stable_sort(golds.begin(), golds.end(), by_position);

  PrecisionRecall out;
  out.predicted = preds.size();
  out.gold = golds.size();
  std::vector<bool> used(golds.size(), false);
  for (const auto &p : preds) {
    for (size_t g = 0; g < golds.size(); ++g) {
      if (used[g] || golds[g].empty()) continue;
      const size_t lo = std::max(p.begin, golds[g].begin);
      const size_t hi = std::min(p.end, golds[g].end);
      const size_t shared = hi > lo ? hi - lo : 0;
      if (static_cast<double>(shared) >=
          tolerance * static_cast<double>(golds[g].size())) {
        used[g] = true;
        ++out.matched;
        break;
      }
    }
  }
  if (out.predicted > 0) {
    out.precision = static_cast<double>(out.matched) / out.predicted;
  }
  if (out.gold > 0) out.recall = static_cast<double>(out.matched) / out.gold;
  return out;
}

std::optional<double> GenderResolvedFraction(size_t men, size_t women,
                                             size_t unknown) {
  const size_t all = men + women + unknown;
  if (all == 0) return std::nullopt;
  return static_cast<double>(men + women) / static_cast<double>(all);
}

std::vector<AnnotatedArticle> LoadAnnotations(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, 0, "cannot open file");
  std::vector<AnnotatedArticle> out;
  std::string line;
  int line_no = 0;
  auto gender_of = [&](const nlohmann::json &j) {
    auto g = ParseAnnotatedGender(j.value("gender", std::string("U")));
    if (!g) throw LoadError(path, line_no, "unknown gender label");
    return *g;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    AnnotatedArticle a;
    try {
      const auto j = nlohmann::json::parse(line);
      a.id = j.at("url").get<std::string>();
      a.text = j.at("text").get<std::string>();
      const size_t n_tokens = Tokenize(a.text).size();
      for (const auto &m : j.value("manual_mentions", nlohmann::json::array())) {
        a.manual_mentions.push_back({m.at("name").get<std::string>(), gender_of(m)});
      }
      for (const auto &q : j.value("manual_quotes", nlohmann::json::array())) {
        const auto &t = q.at("tokens");
        ManualQuote mq;
        mq.tokens = {t.at(0).get<size_t>(), t.at(1).get<size_t>()};
        if (mq.tokens.empty() || mq.tokens.end > n_tokens) {
          throw LoadError(path, line_no, "quote token range outside the article");
        }
        mq.speaker = q.value("speaker", std::string());
        mq.gender = gender_of(q);
        a.manual_quotes.push_back(std::move(mq));
      }
    } catch (const nlohmann::json::exception &e) {
      throw LoadError(path, line_no, e.what());
    }
    out.push_back(std::move(a));
  }
  return out;
}

EvalResult Evaluate(std::span<const AnnotatedArticle> articles,
                    const NameLexicon &names, const GenderCueLexicons &cues,
                    double tolerance) {
  EvalResult result;
  result.n_articles = articles.size();
  QuoteExtractor extractor(cues, names);
  std::vector<std::pair<double, double>> pairs;
  std::vector<TokenRange> predicted, gold;
  // Articles are laid end to end so that the pooled matcher never pairs
  // spans from different articles.
  size_t base = 0;
  for (const auto &a : articles) {
    const auto tokens = Tokenize(a.text);
    const MentionScore score = ScoreMentions(FindPersonMentions(tokens, names));
    const auto manual = ManualMentionRate(a.manual_mentions);
    if (score.rate && manual) pairs.emplace_back(*score.rate, *manual);

    const QuoteAnalysis analysis = extractor.Analyze(tokens);
    for (const auto &q : analysis.quotations) {
      predicted.push_back({q.content_span.begin + base, q.content_span.end + base});
    }
    for (const auto &q : a.manual_quotes) {
      gold.push_back({q.tokens.begin + base, q.tokens.end + base});
    }
    const QuoteTally tally = extractor.Tally(a.text, tokens, analysis.quotations);
    result.men += tally.men;
    result.women += tally.women;
    result.unknown += tally.unknown;
    base += tokens.size() + 1;
  }
  result.n_pairs = pairs.size();
  try {
    result.wilcoxon = WilcoxonSignedRank(pairs);
  } catch (const InvariantError &) {
    result.wilcoxon.reset();
  }
  result.std_dev = DifferenceStdDev(pairs);
  result.quotes = QuotePrf(predicted, gold, tolerance);
  result.gender_resolved_fraction =
      GenderResolvedFraction(result.men, result.women, result.unknown);
  return result;
}

}  // namespace presse

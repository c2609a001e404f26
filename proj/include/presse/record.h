#ifndef PRESSE_RECORD_H_
#define PRESSE_RECORD_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "presse/dates.h"

namespace presse {

enum class Access { kFree, kPaywalled };

struct RecordDiagnostics {
  size_t unbalanced_quotes = 0;
  size_t unresolved_speakers = 0;
  // The page had no parseable date; published_date is the fetch date.
  bool date_fallback = false;

  bool operator==(const RecordDiagnostics &) const = default;
};

// Metadata and indicators for one article. The body text is never stored.
struct ArticleRecord {
  std::string url;
  Date published_date{};
  size_t word_count = 0;
  std::vector<std::string> authors;
  std::string source;
  std::string rubric;
  std::string title;
  std::optional<std::string> image_url;
  Access access = Access::kFree;
  std::string category;
  std::optional<double> mention_rate;
  size_t n_mentions = 0;
  size_t men_quoted = 0;
  size_t women_quoted = 0;
  size_t unknown_quoted = 0;
  RecordDiagnostics diagnostics;

  // men / (men + women), absent when no gendered speaker was quoted.
  std::optional<double> QuoteShare() const;

  bool operator==(const ArticleRecord &) const = default;
};

// Throws InvariantError when the record cannot be stored.
void ValidateRecord(const ArticleRecord &record);

nlohmann::ordered_json RecordToJson(const ArticleRecord &record);

// Throws InvariantError on missing or mistyped fields.
ArticleRecord RecordFromJson(const nlohmann::json &json);

// One compact JSON object, no trailing newline.
std::string RecordToLine(const ArticleRecord &record);

}  // namespace presse

#endif  // PRESSE_RECORD_H_

#ifndef PRESSE_CATALOG_H_
#define PRESSE_CATALOG_H_

#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "presse/dates.h"
#include "presse/record.h"

namespace presse {

inline constexpr std::string_view kUndefinedCategory = "INDEFINI";

// (source, rubric) -> shared thematic category. Lookups are case-folded and
// fall back to INDEFINI.
class CategoryMap {
 public:
  // Lines `source<TAB>rubric<TAB>CATEGORY`; `#` comments.
  static CategoryMap Load(const std::string &path);

  void Add(std::string_view source, std::string_view rubric,
           std::string_view category);
  std::string Categorize(std::string_view source,
                         std::string_view rubric) const;

  // All categories including INDEFINI.
  std::set<std::string> Categories() const;
  size_t size() const { return rows_.size(); }

 private:
  std::map<std::pair<std::string, std::string>, std::string> rows_;
};

std::string Categorize(const ArticleRecord &record, const CategoryMap &map);

// ArticleRecords keyed by url, persisted as newline-delimited JSON. Upserts
// append a line; later lines supersede earlier ones on load. Compaction
// rewrites the file with one line per record in (date, url) order.
class RecordStore {
 public:
  // In-memory store with no backing file.
  RecordStore() = default;

  // Loads `path` if it exists. A read-only store never writes.
  static RecordStore Open(const std::string &path, bool read_only = false);

  RecordStore(RecordStore &&) = default;
  RecordStore &operator=(RecordStore &&) = default;

  // Validates, then inserts or replaces. Throws InvariantError.
  void Upsert(const ArticleRecord &record);

  bool Contains(std::string_view url) const;
  const ArticleRecord *Find(std::string_view url) const;
  size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  // Records ordered by (published_date, url).
  std::vector<ArticleRecord> Snapshot() const;

  // Lines in the file that a later line superseded.
  size_t superseded_lines() const { return superseded_; }

  void Compact();
  const std::string &path() const { return path_; }

 private:
  void Append(const ArticleRecord &record);

  std::map<std::string, ArticleRecord, std::less<>> records_;
  std::string path_;
  bool read_only_ = true;
  size_t superseded_ = 0;
  std::unique_ptr<std::ofstream> out_;
};

enum class Dimension { kSource, kCategory, kOverall };

std::string_view DimensionName(Dimension d);
std::optional<Dimension> ParseDimension(std::string_view name);

// Key used for the overall dimension.
inline constexpr std::string_view kOverallKey = "all";

// Unweighted means of per-article indicators over one group and window.
struct AggregateRow {
  Dimension dimension = Dimension::kOverall;
  std::string key;
  DateRange window;
  std::optional<double> mean_mention_rate;
  std::optional<double> mean_male_quote_share;
  size_t n_articles_scored = 0;
  size_t n_articles_tallied = 0;
};

std::string GroupKey(const ArticleRecord &record, Dimension dimension);

// One row per group key with at least one scored or tallied article in the
// window, ordered by key. OpenMP kernel: fixed-size blocks are reduced in
// parallel and combined in block order, so results do not depend on the
// thread count.
std::vector<AggregateRow> Aggregate(std::span<const ArticleRecord> records,
                                    Dimension dimension, DateRange window);

// Single-threaded reference for Aggregate.
std::vector<AggregateRow> AggregateSerial(std::span<const ArticleRecord> records,
                                          Dimension dimension,
                                          DateRange window);

// One row per (key, Monday-to-Sunday week) from the earliest to the latest
// record, ordered by week then key. Weeks without indicators are omitted.
std::vector<AggregateRow> WeeklySeries(std::span<const ArticleRecord> records,
                                       Dimension dimension);

// One row per (key, day) for days with indicators, ordered by day then key.
std::vector<AggregateRow> DailySeries(std::span<const ArticleRecord> records,
                                      Dimension dimension);

}  // namespace presse

#endif  // PRESSE_CATALOG_H_

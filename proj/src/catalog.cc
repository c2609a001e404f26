#include "presse/catalog.h"

#include <omp.h>

#include <algorithm>
#include <filesystem>

#include "presse/errors.h"
#include "presse/unicode.h"

namespace presse {

namespace fs = std::filesystem;

CategoryMap CategoryMap::Load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, 0, "cannot open file");
  CategoryMap map;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    size_t a = view.find('\t');
    size_t b = a == std::string_view::npos ? a : view.find('\t', a + 1);
    if (b == std::string_view::npos) {
      throw LoadError(path, line_no, "expected `source<TAB>rubric<TAB>CATEGORY`");
    }
    std::string_view category = Trim(view.substr(b + 1));
    if (category.empty()) throw LoadError(path, line_no, "empty category");
    map.Add(Trim(view.substr(0, a)), Trim(view.substr(a + 1, b - a - 1)),
            category);
  }
  return map;
}

void CategoryMap::Add(std::string_view source, std::string_view rubric,
                      std::string_view category) {
  rows_[{NormalizeWord(Trim(source)), NormalizeWord(Trim(rubric))}] =
      std::string(category);
}

std::string CategoryMap::Categorize(std::string_view source,
                                    std::string_view rubric) const {
  auto it = rows_.find({NormalizeWord(Trim(source)), NormalizeWord(Trim(rubric))});
  return it == rows_.end() ? std::string(kUndefinedCategory) : it->second;
}

std::set<std::string> CategoryMap::Categories() const {
  std::set<std::string> out{std::string(kUndefinedCategory)};
  for (const auto &[key, category] : rows_) out.insert(category);
  return out;
}

std::string Categorize(const ArticleRecord &record, const CategoryMap &map) {
  return map.Categorize(record.source, record.rubric);
}

RecordStore RecordStore::Open(const std::string &path, bool read_only) {
  RecordStore store;
  store.path_ = path;
  store.read_only_ = read_only;
  if (fs::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError(path, 0, "cannot open store");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (Trim(line).empty()) continue;
      ArticleRecord record;
      try {
        record = RecordFromJson(nlohmann::json::parse(line));
      } catch (const nlohmann::json::exception &e) {
        throw LoadError(path, line_no, e.what());
      } catch (const InvariantError &e) {
        throw LoadError(path, line_no, e.what());
      }
      auto [it, inserted] = store.records_.insert_or_assign(record.url, record);
      if (!inserted) ++store.superseded_;
    }
  }
  if (!read_only) {
    store.out_ = std::make_unique<std::ofstream>(
        path, std::ios::binary | std::ios::app);
    if (!*store.out_) throw IoError("cannot open store for writing: " + path);
  }
  return store;
}

void RecordStore::Upsert(const ArticleRecord &record) {
  ValidateRecord(record);
  auto [it, inserted] = records_.insert_or_assign(record.url, record);
  if (!inserted && out_) ++superseded_;
  Append(record);
  if (out_ && superseded_ > std::max<size_t>(64, records_.size())) Compact();
}

void RecordStore::Append(const ArticleRecord &record) {
  if (!out_) return;
  *out_ << RecordToLine(record) << '\n';
  out_->flush();
  if (!*out_) throw IoError("write failed: " + path_);
}

bool RecordStore::Contains(std::string_view url) const {
  return records_.find(url) != records_.end();
}

const ArticleRecord *RecordStore::Find(std::string_view url) const {
  auto it = records_.find(url);
  return it == records_.end() ? nullptr : &it->second;
}

std::vector<ArticleRecord> RecordStore::Snapshot() const {
  std::vector<ArticleRecord> out;
  out.reserve(records_.size());
  for (const auto &[url, record] : records_) out.push_back(record);
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return a.published_date < b.published_date;
  });
  return out;
}

void RecordStore::Compact() {
  if (read_only_ || path_.empty()) return;
  const std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp);
    for (const auto &record : Snapshot()) out << RecordToLine(record) << '\n';
    if (!out) throw IoError("write failed: " + tmp);
  }
  out_.reset();
  fs::rename(tmp, path_);
  out_ = std::make_unique<std::ofstream>(path_, std::ios::binary | std::ios::app);
  superseded_ = 0;
}

std::string_view DimensionName(Dimension d) {
  switch (d) {
    case Dimension::kSource: return "source";
    case Dimension::kCategory: return "category";
    case Dimension::kOverall: return "overall";
  }
  return "overall";
}

std::optional<Dimension> ParseDimension(std::string_view name) {
  if (name == "source") return Dimension::kSource;
  if (name == "category") return Dimension::kCategory;
  if (name == "overall") return Dimension::kOverall;
  return std::nullopt;
}

std::string GroupKey(const ArticleRecord &record, Dimension dimension) {
  switch (dimension) {
    case Dimension::kSource: return record.source;
    case Dimension::kCategory:
      return record.category.empty() ? std::string(kUndefinedCategory)
                                     : record.category;
    case Dimension::kOverall: return std::string(kOverallKey);
  }
  return std::string(kOverallKey);
}

namespace {

struct Partial {
  double rate_sum = 0.0;
  size_t rate_n = 0;
  double share_sum = 0.0;
  size_t share_n = 0;

  void Add(const ArticleRecord &r) {
    if (r.mention_rate) {
      rate_sum += *r.mention_rate;
      ++rate_n;
    }
    if (auto share = r.QuoteShare()) {
      share_sum += *share;
      ++share_n;
    }
  }
  void Merge(const Partial &o) {
    rate_sum += o.rate_sum;
    rate_n += o.rate_n;
    share_sum += o.share_sum;
    share_n += o.share_n;
  }
};

AggregateRow MakeRow(Dimension dimension, const std::string &key,
                     DateRange window, const Partial &p) {
  AggregateRow row;
  row.dimension = dimension;
  row.key = key;
  row.window = window;
  row.n_articles_scored = p.rate_n;
  row.n_articles_tallied = p.share_n;
  if (p.rate_n > 0) row.mean_mention_rate = p.rate_sum / p.rate_n;
  if (p.share_n > 0) row.mean_male_quote_share = p.share_sum / p.share_n;
  return row;
}

constexpr size_t kBlockSize = 512;

// GroupKey without the copy.
std::string_view KeyView(const ArticleRecord &record, Dimension dimension) {
  switch (dimension) {
    case Dimension::kSource: return record.source;
    case Dimension::kCategory:
      return record.category.empty() ? kUndefinedCategory
                                     : std::string_view(record.category);
    case Dimension::kOverall: return kOverallKey;
  }
  return kOverallKey;
}

}  // namespace

std::vector<AggregateRow> AggregateSerial(std::span<const ArticleRecord> records,
                                          Dimension dimension,
                                          DateRange window) {
  std::map<std::string, Partial> groups;
  for (const auto &r : records) {
    if (!window.Contains(r.published_date)) continue;
    groups[GroupKey(r, dimension)].Add(r);
  }
  std::vector<AggregateRow> rows;
  for (const auto &[key, p] : groups) {
    if (p.rate_n == 0 && p.share_n == 0) continue;
    rows.push_back(MakeRow(dimension, key, window, p));
  }
  return rows;
}

std::vector<AggregateRow> Aggregate(std::span<const ArticleRecord> records,
                                    Dimension dimension, DateRange window) {
  // Each fixed block groups its records on its own; blocks are then merged
  // in block order, so sums do not depend on the thread count. Keys are
  // views into the records and never outlive this call.
  using Groups = std::map<std::string_view, Partial>;
  const size_t n = records.size();
  const auto num_blocks = static_cast<long>((n + kBlockSize - 1) / kBlockSize);
  std::vector<Groups> blocks(static_cast<size_t>(num_blocks));

#pragma omp parallel for schedule(static)
  for (long b = 0; b < num_blocks; ++b) {
    Groups &groups = blocks[static_cast<size_t>(b)];
    const size_t begin = static_cast<size_t>(b) * kBlockSize;
    const size_t end = std::min(n, begin + kBlockSize);
    for (size_t i = begin; i < end; ++i) {
      const ArticleRecord &r = records[i];
      if (window.Contains(r.published_date)) groups[KeyView(r, dimension)].Add(r);
    }
  }

  Groups totals;
  for (const Groups &groups : blocks) {
    for (const auto &[key, p] : groups) totals[key].Merge(p);
  }
  std::vector<AggregateRow> rows;
  for (const auto &[key, p] : totals) {
    if (p.rate_n == 0 && p.share_n == 0) continue;
    rows.push_back(MakeRow(dimension, std::string(key), window, p));
  }
  return rows;
}

namespace {

// Buckets records by period(date) -> first day and aggregates each bucket.
template <typename PeriodStart>
std::vector<AggregateRow> Series(std::span<const ArticleRecord> records,
                                 Dimension dimension, int period_days,
                                 PeriodStart period_start) {
  std::vector<ArticleRecord> sorted(records.begin(), records.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
    return a.published_date < b.published_date;
  });
  std::vector<AggregateRow> rows;
  size_t begin = 0;
  while (begin < sorted.size()) {
    const Date first = period_start(sorted[begin].published_date);
    const Date last = AddDays(first, period_days - 1);
    size_t end = begin;
    while (end < sorted.size() && sorted[end].published_date <= last) ++end;
    auto period = Aggregate(std::span(sorted).subspan(begin, end - begin),
                            dimension, {first, last});
    rows.insert(rows.end(), period.begin(), period.end());
    begin = end;
  }
  return rows;
}

}  // namespace

std::vector<AggregateRow> WeeklySeries(std::span<const ArticleRecord> records,
                                       Dimension dimension) {
  return Series(records, dimension, 7, WeekStart);
}

std::vector<AggregateRow> DailySeries(std::span<const ArticleRecord> records,
                                      Dimension dimension) {
  return Series(records, dimension, 1, [](Date d) { return d; });
}

}  // namespace presse

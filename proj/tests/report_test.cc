#include "presse/report.h"

#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "presse/errors.h"
#include "record_gen.h"
#include "test_util.h"

namespace presse {
namespace {

using namespace std::chrono;
using testing::Near;
using testing::OracleScan;

constexpr Date D(int y, unsigned m, unsigned d) {
  return Date{year{y}, month{m}, day{d}};
}

const char *const kFiles[] = {"summary.json",   "gauges.csv", "categories.csv",
                              "series.csv",     "gauges.svg", "categories.svg",
                              "series.svg"};

std::vector<std::vector<std::string>> ParseCsv(const std::string &text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          cell += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += c;
      }
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST_CASE("trailing window for 2021-12-23 spans 16 to 23 December") {
  DateRange w = TrailingWindow(D(2021, 12, 23));
  CHECK(w.first == D(2021, 12, 16));
  CHECK(w.last == D(2021, 12, 23));
}

TEST_CASE("one scored article yesterday gives one gauge row") {
  ArticleRecord r;
  r.url = "u";
  r.published_date = D(2021, 12, 22);
  r.source = "lemonde";
  r.category = "CULTURE";
  r.mention_rate = 0.25;
  r.n_mentions = 4;
  std::vector<ArticleRecord> records = {r};
  ReportBundle b = BuildReport(records, D(2021, 12, 23));
  REQUIRE(b.gauge_rows.size() == 1);
  CHECK(b.gauge_rows[0].key == "lemonde");
  CHECK(b.category_rows.size() == 1);
  CHECK(b.series_rows.size() == 1);
  CHECK(b.warnings.empty());
  CHECK(b.generated_at == "2021-12-23T00:00:00Z");

  ReportBundle early = BuildReport(records, D(2021, 11, 1));
  CHECK(early.gauge_rows.empty());
  CHECK(early.category_rows.empty());
}

TEST_CASE("empty store gives an empty bundle with a warning") {
  ReportBundle b = BuildReport({}, D(2021, 12, 23));
  CHECK(b.gauge_rows.empty());
  CHECK(b.series_rows.empty());
  CHECK_FALSE(b.warnings.empty());

  testing::TempDir dir;
  EmitReport(b, dir.File("out"));
  for (const char *name : kFiles) {
    CHECK_MESSAGE(std::filesystem::exists(dir.path() / "out" / name), name);
  }
  for (const char *name : {"gauges.csv", "categories.csv", "series.csv"}) {
    auto rows = ParseCsv(testing::ReadFile(dir.File(std::string("out/") + name)));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0][0] == "dimension");
  }
  auto json = nlohmann::json::parse(testing::ReadFile(dir.File("out/summary.json")));
  CHECK(json["format_version"] == kReportFormatVersion);
  CHECK(json["gauges"].empty());
}

TEST_CASE("bundle rows equal the aggregation oracle") {
  auto records = testing::RandomRecords(41, 300, D(2021, 11, 1), 60);
  const Date as_of = D(2021, 12, 23);
  ReportBundle b = BuildReport(records, as_of);
  REQUIRE_FALSE(b.gauge_rows.empty());
  for (const auto &row : b.gauge_rows) {
    auto m = OracleScan(records, Dimension::kSource, row.key, D(2021, 12, 16), as_of);
    CHECK(Near(row.mean_mention_rate, m.rate, 1e-12));
    CHECK(Near(row.mean_male_quote_share, m.share, 1e-12));
  }
  for (const auto &row : b.category_rows) {
    auto m = OracleScan(records, Dimension::kCategory, row.key, D(2021, 12, 16), as_of);
    CHECK(Near(row.mean_mention_rate, m.rate, 1e-12));
    CHECK(b.window.Contains(row.window.first));
    CHECK(b.window.Contains(row.window.last));
  }
  for (const auto &row : b.series_rows) {
    CHECK(row.window.first <= as_of);
    auto m = OracleScan(records, Dimension::kSource, row.key, row.window.first,
                        std::min(row.window.last, as_of));
    CHECK(Near(row.mean_mention_rate, m.rate, 1e-12));
    CHECK(Near(row.mean_male_quote_share, m.share, 1e-12));
  }
}

TEST_CASE("CSV values match summary.json exactly") {
  auto records = testing::RandomRecords(42, 250, D(2021, 11, 15), 40);
  records[0].source = "source, with \"comma\"";
  records[0].published_date = D(2021, 12, 20);
  ReportBundle b = BuildReport(records, D(2021, 12, 23));
  testing::TempDir dir;
  EmitReport(b, dir.File("r"));
  const std::string summary = testing::ReadFile(dir.File("r/summary.json"));
  auto json = nlohmann::json::parse(summary);

  const std::pair<const char *, const char *> pairs[] = {
      {"gauges.csv", "gauges"}, {"categories.csv", "categories"}, {"series.csv", "series"}};
  for (const auto &[file, field] : pairs) {
    auto rows = ParseCsv(testing::ReadFile(dir.File(std::string("r/") + file)));
    const auto &items = json[field];
    REQUIRE(rows.size() == items.size() + 1);
    for (size_t i = 0; i < items.size(); ++i) {
      const auto &csv = rows[i + 1];
      REQUIRE(csv.size() == 8);
      CHECK(csv[1] == items[i]["key"].get<std::string>());
      CHECK(csv[2] == items[i]["window_start"].get<std::string>());
      CHECK(csv[3] == items[i]["window_end"].get<std::string>());
      for (auto [col, name] : {std::pair{4, "mean_mention_rate"},
                               std::pair{5, "mean_male_quote_share"}}) {
        if (items[i][name].is_null()) {
          CHECK(csv[col].empty());
        } else {
          CHECK(csv[col].size() == 6);
          // Same token, textually, in the JSON.
          CHECK(summary.find("\"" + std::string(name) + "\": " + csv[col]) !=
                std::string::npos);
          CHECK(std::stod(csv[col]) == items[i][name].get<double>());
        }
      }
      CHECK(std::stoul(csv[6]) == items[i]["n_articles_scored"].get<size_t>());
    }
  }
}

TEST_CASE("emit is deterministic and SVGs are self-contained") {
  auto records = testing::RandomRecords(43, 200, D(2021, 11, 15), 40);
  ReportBundle b = BuildReport(records, D(2021, 12, 23));
  testing::TempDir dir;
  EmitReport(b, dir.File("a"));
  EmitReport(b, dir.File("b"));
  for (const char *name : kFiles) {
    const std::string a = testing::ReadFile(dir.File(std::string("a/") + name));
    CHECK(!a.empty());
    CHECK(a == testing::ReadFile(dir.File(std::string("b/") + name)));
    if (std::string_view(name).ends_with(".svg")) {
      CHECK(a.rfind("<svg", 0) == 0);
      CHECK(a.find("href") == std::string::npos);
      CHECK(a.find("<image") == std::string::npos);
    }
  }
}

TEST_CASE("IO failure names the path") {
  testing::TempDir dir;
  const std::string blocker = dir.Write("file", "x");
  try {
    EmitReport(BuildReport({}, D(2021, 12, 23)), blocker + "/sub");
    FAIL("expected IoError");
  } catch (const IoError &e) {
    CHECK(std::string(e.what()).find(blocker) != std::string::npos);
  }
}

TEST_CASE("indicator formatting") {
  CHECK(FormatIndicator(0.5) == "0.5000");
  CHECK(FormatIndicator(1.0) == "1.0000");
  CHECK(FormatIndicator(2.0 / 3.0) == "0.6667");
  CHECK(FormatIndicator(std::nullopt).empty());
}

}  // namespace
}  // namespace presse

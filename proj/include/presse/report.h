#ifndef PRESSE_REPORT_H_
#define PRESSE_REPORT_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "presse/catalog.h"
#include "presse/dates.h"
#include "presse/record.h"

namespace presse {

inline constexpr int kReportFormatVersion = 1;

// Everything the static dashboard shows for one as-of date.
struct ReportBundle {
  int format_version = kReportFormatVersion;
  // UTC timestamp derived from the as-of date so that output is reproducible.
  std::string generated_at;
  DateRange window;
  std::vector<AggregateRow> gauge_rows;
  std::vector<AggregateRow> category_rows;
  std::vector<AggregateRow> series_rows;
  std::vector<std::string> warnings;
};

// The trailing week shown by the gauges: [as_of - 7, as_of].
DateRange TrailingWindow(Date as_of);

// Gauges per source and bars per category over TrailingWindow(as_of); weekly
// series per source over all records dated on or before as_of.
ReportBundle BuildReport(std::span<const ArticleRecord> records, Date as_of);

// Fixed 4-decimal rendering shared by every textual output; empty when absent.
std::string FormatIndicator(std::optional<double> value);

std::string SummaryJson(const ReportBundle &bundle);
std::string RowsCsv(const std::vector<AggregateRow> &rows);

// Self-contained SVG charts.
std::string GaugesSvg(const ReportBundle &bundle);
std::string CategoriesSvg(const ReportBundle &bundle);
std::string SeriesSvg(const ReportBundle &bundle);

// Writes summary.json, gauges.csv, categories.csv, series.csv, gauges.svg,
// categories.svg and series.svg into `dir`, creating it if needed. Throws
// IoError naming the failing path.
void EmitReport(const ReportBundle &bundle, const std::string &dir);

}  // namespace presse

#endif  // PRESSE_REPORT_H_

#include "presse/report.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "json.hpp"
#include "presse/errors.h"

namespace presse {

namespace fs = std::filesystem;

DateRange TrailingWindow(Date as_of) { return {AddDays(as_of, -7), as_of}; }

ReportBundle BuildReport(std::span<const ArticleRecord> records, Date as_of) {
  ReportBundle bundle;
  bundle.generated_at = FormatDate(as_of) + "T00:00:00Z";
  bundle.window = TrailingWindow(as_of);
  if (records.empty()) {
    bundle.warnings.push_back("empty store");
    return bundle;
  }
  bundle.gauge_rows = Aggregate(records, Dimension::kSource, bundle.window);
  bundle.category_rows = Aggregate(records, Dimension::kCategory, bundle.window);
  std::vector<ArticleRecord> past;
  for (const auto &r : records) {
    if (r.published_date <= as_of) past.push_back(r);
  }
  bundle.series_rows = WeeklySeries(past, Dimension::kSource);
  if (bundle.gauge_rows.empty()) {
    bundle.warnings.push_back("no scored articles in window");
  }
  return bundle;
}

std::string FormatIndicator(std::optional<double> value) {
  if (!value) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", *value);
  return buf;
}

namespace {

std::string JsonString(const std::string &s) { return nlohmann::json(s).dump(); }

std::string JsonIndicator(std::optional<double> value) {
  return value ? FormatIndicator(value) : "null";
}

void AppendRowsJson(std::string &out, const char *name,
                    const std::vector<AggregateRow> &rows, bool last) {
  out += "  \"";
  out += name;
  out += "\": [";
  for (size_t i = 0; i < rows.size(); ++i) {
    const AggregateRow &r = rows[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"dimension\": " + JsonString(std::string(DimensionName(r.dimension)));
    out += ", \"key\": " + JsonString(r.key);
    out += ", \"window_start\": \"" + FormatDate(r.window.first) + "\"";
    out += ", \"window_end\": \"" + FormatDate(r.window.last) + "\"";
    out += ", \"mean_mention_rate\": " + JsonIndicator(r.mean_mention_rate);
    out += ", \"mean_male_quote_share\": " + JsonIndicator(r.mean_male_quote_share);
    out += ", \"n_articles_scored\": " + std::to_string(r.n_articles_scored);
    out += ", \"n_articles_tallied\": " + std::to_string(r.n_articles_tallied);
    out += "}";
  }
  out += rows.empty() ? "]" : "\n  ]";
  out += last ? "\n" : ",\n";
}

std::string CsvField(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string XmlEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

constexpr const char *kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                    "#66a61e", "#e6ab02", "#a6761d", "#666666"};

constexpr const char *kMentionTitle = "Taux de masculinité des mentions";
constexpr const char *kQuoteTitle = "Part des hommes cités";

using Getter = std::optional<double> (*)(const AggregateRow &);

std::optional<double> MentionOf(const AggregateRow &r) { return r.mean_mention_rate; }
std::optional<double> QuoteOf(const AggregateRow &r) { return r.mean_male_quote_share; }

constexpr double kWidth = 640;
constexpr double kLabelWidth = 170;
constexpr double kBarWidth = 380;
constexpr double kRowHeight = 22;

std::string SvgOpen(double height, const std::string &title) {
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(kWidth) +
      "\" height=\"" + Num(height) + "\" viewBox=\"0 0 " + Num(kWidth) + " " +
      Num(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out += "<text x=\"10\" y=\"20\" font-size=\"14\" font-weight=\"bold\">" +
         XmlEscape(title) + "</text>\n";
  return out;
}

// Horizontal bars on a [0, 1] scale with the parity line at 0.5. Returns the
// panel height.
double BarPanel(std::string &out, double y, const std::string &title,
                const std::vector<AggregateRow> &rows, Getter get) {
  out += "<text x=\"10\" y=\"" + Num(y + 14) + "\" font-weight=\"bold\">" +
         XmlEscape(title) + "</text>\n";
  const double top = y + 24;
  const double height = std::max<double>(1, rows.size()) * kRowHeight;
  for (size_t i = 0; i < rows.size(); ++i) {
    const double row_y = top + i * kRowHeight;
    out += "<text x=\"10\" y=\"" + Num(row_y + 15) + "\">" +
           XmlEscape(rows[i].key) + "</text>\n";
    auto value = get(rows[i]);
    out += "<rect x=\"" + Num(kLabelWidth) + "\" y=\"" + Num(row_y + 4) +
           "\" width=\"" + Num(kBarWidth) + "\" height=\"14\" fill=\"#eeeeee\"/>\n";
    if (value) {
      out += "<rect x=\"" + Num(kLabelWidth) + "\" y=\"" + Num(row_y + 4) +
             "\" width=\"" + Num(*value * kBarWidth) +
             "\" height=\"14\" fill=\"#d95f02\"/>\n";
    }
    out += "<text x=\"" + Num(kLabelWidth + kBarWidth + 8) + "\" y=\"" +
           Num(row_y + 15) + "\">" +
           (value ? FormatIndicator(value) : std::string("n/a")) + "</text>\n";
  }
  const double mid = kLabelWidth + kBarWidth / 2;
  out += "<line x1=\"" + Num(mid) + "\" y1=\"" + Num(top) + "\" x2=\"" +
         Num(mid) + "\" y2=\"" + Num(top + height) +
         "\" stroke=\"#333333\" stroke-dasharray=\"4 3\"/>\n";
  return 24 + height + 16;
}

std::string BarChart(const std::string &title,
                     const std::vector<AggregateRow> &rows) {
  const double panel = 24 + std::max<double>(1, rows.size()) * kRowHeight + 16;
  const double height = 36 + 2 * panel;
  std::string out = SvgOpen(height, title);
  double y = 36;
  y += BarPanel(out, y, kMentionTitle, rows, MentionOf);
  BarPanel(out, y, kQuoteTitle, rows, QuoteOf);
  out += "</svg>\n";
  return out;
}

std::string WindowLabel(const DateRange &w) {
  return FormatDate(w.first) + " / " + FormatDate(w.last);
}

}  // namespace

std::string SummaryJson(const ReportBundle &bundle) {
  std::string out = "{\n";
  out += "  \"format_version\": " + std::to_string(bundle.format_version) + ",\n";
  out += "  \"generated_at\": " + JsonString(bundle.generated_at) + ",\n";
  out += "  \"window\": {\"start\": \"" + FormatDate(bundle.window.first) +
         "\", \"end\": \"" + FormatDate(bundle.window.last) + "\"},\n";
  out += "  \"warnings\": [";
  for (size_t i = 0; i < bundle.warnings.size(); ++i) {
    if (i > 0) out += ", ";
    out += JsonString(bundle.warnings[i]);
  }
  out += "],\n";
  AppendRowsJson(out, "gauges", bundle.gauge_rows, false);
  AppendRowsJson(out, "categories", bundle.category_rows, false);
  AppendRowsJson(out, "series", bundle.series_rows, true);
  out += "}\n";
  return out;
}

std::string RowsCsv(const std::vector<AggregateRow> &rows) {
  std::string out =
      "dimension,key,window_start,window_end,mean_mention_rate,"
      "mean_male_quote_share,n_articles_scored,n_articles_tallied\n";
  for (const auto &r : rows) {
    out += std::string(DimensionName(r.dimension)) + "," + CsvField(r.key) + "," +
           FormatDate(r.window.first) + "," + FormatDate(r.window.last) + "," +
           FormatIndicator(r.mean_mention_rate) + "," +
           FormatIndicator(r.mean_male_quote_share) + "," +
           std::to_string(r.n_articles_scored) + "," +
           std::to_string(r.n_articles_tallied) + "\n";
  }
  return out;
}

std::string GaugesSvg(const ReportBundle &bundle) {
  return BarChart("Sources, " + WindowLabel(bundle.window), bundle.gauge_rows);
}

std::string CategoriesSvg(const ReportBundle &bundle) {
  return BarChart("Catégories, " + WindowLabel(bundle.window),
                  bundle.category_rows);
}

std::string SeriesSvg(const ReportBundle &bundle) {
  constexpr double kPlotLeft = 50, kPlotWidth = 440, kPlotHeight = 160;
  constexpr double kPanel = kPlotHeight + 50;
  std::set<Date> weeks;
  std::map<std::string, std::vector<const AggregateRow *>> by_key;
  for (const auto &r : bundle.series_rows) {
    weeks.insert(r.window.first);
    by_key[r.key].push_back(&r);
  }
  std::map<Date, size_t> week_index;
  for (Date w : weeks) week_index.emplace(w, week_index.size());
  const double step =
      weeks.size() > 1 ? kPlotWidth / static_cast<double>(weeks.size() - 1) : 0;

  std::string out = SvgOpen(36 + 2 * kPanel + 10, "Séries hebdomadaires par source");
  double y = 36;
  for (Getter get : {Getter(MentionOf), Getter(QuoteOf)}) {
    out += "<text x=\"10\" y=\"" + Num(y + 14) + "\" font-weight=\"bold\">" +
           (get == MentionOf ? kMentionTitle : kQuoteTitle) + "</text>\n";
    const double top = y + 24;
    const double bottom = top + kPlotHeight;
    out += "<rect x=\"" + Num(kPlotLeft) + "\" y=\"" + Num(top) + "\" width=\"" +
           Num(kPlotWidth) + "\" height=\"" + Num(kPlotHeight) +
           "\" fill=\"none\" stroke=\"#999999\"/>\n";
    for (double tick : {0.0, 0.5, 1.0}) {
      const double ty = bottom - tick * kPlotHeight;
      out += "<text x=\"10\" y=\"" + Num(ty + 4) + "\">" + Num(tick) + "</text>\n";
    }
    out += "<line x1=\"" + Num(kPlotLeft) + "\" y1=\"" +
           Num(bottom - 0.5 * kPlotHeight) + "\" x2=\"" +
           Num(kPlotLeft + kPlotWidth) + "\" y2=\"" +
           Num(bottom - 0.5 * kPlotHeight) +
           "\" stroke=\"#333333\" stroke-dasharray=\"4 3\"/>\n";
    size_t color = 0;
    double legend_y = top + 10;
    for (const auto &[key, rows] : by_key) {
      const char *stroke = kPalette[color++ % std::size(kPalette)];
      std::string points;
      for (const AggregateRow *r : rows) {
        auto value = get(*r);
        if (!value) continue;
        const double px = kPlotLeft + step * week_index[r->window.first];
        const double py = bottom - *value * kPlotHeight;
        if (!points.empty()) points += ' ';
        points += Num(px) + "," + Num(py);
      }
      if (!points.empty()) {
        out += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) +
               "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
      }
      out += "<text x=\"" + Num(kPlotLeft + kPlotWidth + 12) + "\" y=\"" +
             Num(legend_y) + "\" fill=\"" + stroke + "\">" + XmlEscape(key) +
             "</text>\n";
      legend_y += 14;
    }
    if (!weeks.empty()) {
      out += "<text x=\"" + Num(kPlotLeft) + "\" y=\"" + Num(bottom + 16) + "\">" +
             FormatDate(*weeks.begin()) + "</text>\n";
      out += "<text x=\"" + Num(kPlotLeft + kPlotWidth) + "\" y=\"" +
             Num(bottom + 16) + "\" text-anchor=\"end\">" +
             FormatDate(*weeks.rbegin()) + "</text>\n";
    }
    y += kPanel;
  }
  out += "</svg>\n";
  return out;
}

void EmitReport(const ReportBundle &bundle, const std::string &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir + ": " + ec.message());
  const std::pair<const char *, std::string> files[] = {
      {"summary.json", SummaryJson(bundle)},
      {"gauges.csv", RowsCsv(bundle.gauge_rows)},
      {"categories.csv", RowsCsv(bundle.category_rows)},
      {"series.csv", RowsCsv(bundle.series_rows)},
      {"gauges.svg", GaugesSvg(bundle)},
      {"categories.svg", CategoriesSvg(bundle)},
      {"series.svg", SeriesSvg(bundle)},
  };
  for (const auto &[name, content] : files) {
    const std::string path = (fs::path(dir) / name).string();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) throw IoError("cannot write " + path);
  }
}

}  // namespace presse

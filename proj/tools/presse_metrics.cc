// presse-metrics: gender representation indicators for online news.
//
//   presse-metrics ingest            fetch or read sources into the store
//   presse-metrics analyze           re-score stored articles from a corpus
//   presse-metrics aggregate         print aggregate rows as CSV
//   presse-metrics report            write the static dashboard files
//   presse-metrics eval FILE         evaluate against manual annotations
//
// Exit status: 0 on success, 1 on configuration or runtime errors, 2 on
// usage errors.

#include <omp.h>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "presse/catalog.h"
#include "presse/config.h"
#include "presse/dates.h"
#include "presse/errors.h"
#include "presse/evaluation.h"
#include "presse/ingest.h"
#include "presse/lexicon.h"
#include "presse/report.h"

namespace {

namespace fs = std::filesystem;
using namespace presse;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::optional<std::string> config;
  int jobs = 0;
  std::string as_of;
  std::optional<uint64_t> seed;
};

struct Lexicons {
  NameLexicon names;
  GenderCueLexicons cues;
};

Lexicons LoadLexicons(const PipelineConfig &config) {
  try {
    return {LoadNameLexicon(config.lexicons.names, config.lexicons.blocklist),
            LoadGenderCues(config.lexicons.cues)};
  } catch (const LoadError &e) {
    throw ConfigError(e.what());
  }
}

PipelineConfig LoadValidConfig(const GlobalOptions &g) {
  PipelineConfig config = LoadConfig(ResolveConfigPath(g.config));
  ValidateConfig(config);
  return config;
}

int Jobs(const GlobalOptions &g) {
  return g.jobs > 0 ? g.jobs : std::max(1, omp_get_num_procs());
}

Date AsOf(const GlobalOptions &g, const PipelineConfig &config) {
  if (!g.as_of.empty()) {
    auto d = ParseIsoDate(g.as_of);
    if (!d) throw ConfigError("--as-of must be YYYY-MM-DD, got " + g.as_of);
    return *d;
  }
  return config.as_of.value_or(Today());
}

std::vector<const SourceConfig *> SelectSources(const PipelineConfig &config,
                                                const std::vector<std::string> &ids) {
  std::vector<const SourceConfig *> out;
  for (const auto &s : config.sources) {
    if (ids.empty() || std::find(ids.begin(), ids.end(), s.id) != ids.end()) {
      out.push_back(&s);
    }
  }
  for (const auto &id : ids) {
    if (std::none_of(out.begin(), out.end(), [&](auto *s) { return s->id == id; })) {
      throw ConfigError("unknown source " + id);
    }
  }
  if (out.empty()) throw ConfigError(config.path + ": no sources configured");
  return out;
}

RecordStore OpenStore(const PipelineConfig &config, bool read_only) {
  if (!read_only) {
    const fs::path dir = fs::path(config.store).parent_path();
    std::error_code ec;
    if (!dir.empty()) fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string());
  }
  return RecordStore::Open(config.store, read_only);
}

int RunPipeline(const GlobalOptions &g, const std::vector<std::string> &ids,
                bool dry_run, bool rescore) {
  const PipelineConfig config = LoadValidConfig(g);
  const Lexicons lexicons = LoadLexicons(config);
  const CategoryMap categories = CategoryMap::Load(config.category_map);
  const ArticleAnalyzer analyzer(lexicons.names, lexicons.cues);
  RecordStore store = OpenStore(config, dry_run);

  IngestOptions options;
  options.jobs = Jobs(g);
  options.dry_run = dry_run;
  options.seed = g.seed;
  options.fetch_date = AsOf(g, config);
  options.rescore = rescore;

  for (const SourceConfig *source : SelectSources(config, ids)) {
    const IngestSummary summary =
        RunIngest(*source, analyzer, categories, store, options);
    for (const auto &item : summary.items) {
      if (item.outcome == Outcome::kSkippedError) {
        std::cerr << source->id << ": skipped " << item.input << ": "
                  << item.diagnostic << "\n";
      }
    }
    std::cout << source->id << ": input=" << summary.total()
              << " stored=" << summary.stored
              << " skipped-duplicate=" << summary.skipped_duplicate
              << " skipped-error=" << summary.skipped_error
              << (dry_run ? " (dry run)" : "") << "\n";
  }
  if (!dry_run) store.Compact();
  return 0;
}

int RunAggregate(const GlobalOptions &g, const std::string &by,
                 const std::string &series, int days) {
  const PipelineConfig config = LoadValidConfig(g);
  const auto dimension = ParseDimension(by);
  if (!dimension) throw ConfigError("--by must be source, category or overall");
  if (days < 1) throw ConfigError("--days must be positive");
  const RecordStore store = RecordStore::Open(config.store, true);
  const std::vector<ArticleRecord> records = store.Snapshot();
  std::vector<AggregateRow> rows;
  if (series == "weekly") {
    rows = WeeklySeries(records, *dimension);
  } else if (series == "daily") {
    rows = DailySeries(records, *dimension);
  } else {
    const Date as_of = AsOf(g, config);
    omp_set_num_threads(Jobs(g));
    rows = Aggregate(records, *dimension, {AddDays(as_of, -days), as_of});
  }
  std::cout << RowsCsv(rows);
  return 0;
}

int RunReport(const GlobalOptions &g, const std::string &out) {
  const PipelineConfig config = LoadValidConfig(g);
  const RecordStore store = RecordStore::Open(config.store, true);
  const std::vector<ArticleRecord> records = store.Snapshot();
  omp_set_num_threads(Jobs(g));
  const ReportBundle bundle = BuildReport(records, AsOf(g, config));
  const std::string dir = out.empty() ? config.report_dir : out;
  EmitReport(bundle, dir);
  for (const auto &w : bundle.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << "report " << FormatDate(bundle.window.first) << " to "
            << FormatDate(bundle.window.last) << ": " << bundle.gauge_rows.size()
            << " sources, " << bundle.category_rows.size() << " categories, "
            << bundle.series_rows.size() << " weekly rows in " << dir << "\n";
  return 0;
}

std::string Field(std::optional<double> v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", *v);
  return buf;
}

int RunEval(const GlobalOptions &g, const std::string &file, double tolerance) {
  const PipelineConfig config = LoadValidConfig(g);
  const Lexicons lexicons = LoadLexicons(config);
  if (!(tolerance > 0.0 && tolerance <= 1.0)) {
    throw ConfigError("--tolerance must lie in (0, 1]");
  }
  const std::vector<AnnotatedArticle> articles = LoadAnnotations(file);
  const EvalResult r = Evaluate(articles, lexicons.names, lexicons.cues, tolerance);
  std::cout << "articles: " << r.n_articles << "\n";
  std::cout << "mention_pairs: " << r.n_pairs << "\n";
  if (r.wilcoxon) {
    std::cout << "wilcoxon_statistic: " << r.wilcoxon->statistic << "\n";
    std::cout << "p_value: " << Field(r.wilcoxon->p_value) << "\n";
    std::cout << "wilcoxon_mode: " << (r.wilcoxon->exact ? "exact" : "normal") << "\n";
  } else {
    std::cout << "wilcoxon_statistic: n/a (degenerate sample)\np_value: n/a\n";
  }
  std::cout << "std_dev: " << Field(r.std_dev) << "\n";
  std::cout << "precision: " << Field(r.quotes.precision) << "\n";
  std::cout << "recall: " << Field(r.quotes.recall) << "\n";
  std::cout << "quotes_predicted: " << r.quotes.predicted << "\n";
  std::cout << "quotes_gold: " << r.quotes.gold << "\n";
  std::cout << "quotes_matched: " << r.quotes.matched << "\n";
  std::cout << "speakers_men: " << r.men << "\n";
  std::cout << "speakers_women: " << r.women << "\n";
  std::cout << "speakers_unknown: " << r.unknown << "\n";
  std::cout << "gender_resolved_fraction: " << Field(r.gender_resolved_fraction) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Gender representation indicators for online news articles.",
               "presse-metrics"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::string config_flag;
  app.add_option("--config", config_flag,
                 "Configuration file (default: $PRESSE_METRICS_CONFIG, then "
                 "./presse-metrics.json)");
  app.add_option("--jobs", g.jobs, "Worker threads (default: available cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--as-of", g.as_of,
                 "Reference date YYYY-MM-DD (default: config, then today)");
  uint64_t seed = 0;
  auto *seed_opt = app.add_option("--seed", seed, "Seed for randomized scheduling");

  std::vector<std::string> sources;
  bool dry_run = false;
  auto *ingest = app.add_subcommand("ingest", "Fetch or read configured sources into the store");
  ingest->add_option("--source", sources, "Restrict to these source ids");
  ingest->add_flag("--dry-run", dry_run, "Analyze and count without writing the store");

  auto *analyze = app.add_subcommand(
      "analyze", "Re-score stored articles from the configured local corpora");
  analyze->add_option("--source", sources, "Restrict to these source ids");
  analyze->add_flag("--dry-run", dry_run, "Analyze and count without writing the store");

  std::string by = "source", series = "window";
  int days = 7;
  auto *aggregate = app.add_subcommand("aggregate", "Print aggregate rows as CSV");
  aggregate->add_option("--by", by, "source, category or overall")
      ->check(CLI::IsMember({"source", "category", "overall"}));
  aggregate->add_option("--series", series, "window, weekly or daily")
      ->check(CLI::IsMember({"window", "weekly", "daily"}));
  aggregate->add_option("--days", days, "Window length before --as-of, in days");

  std::string out;
  auto *report = app.add_subcommand("report", "Write the static dashboard files");
  report->add_option("--out", out, "Output directory (default: report_dir from config)");

  std::string annotations;
  double tolerance = 0.3;
  auto *eval = app.add_subcommand("eval", "Evaluate indicators against annotations");
  eval->add_option("annotations", annotations, "Annotation file (JSON lines)")
      ->required();
  eval->add_option("--tolerance", tolerance, "Token-overlap tolerance for quotes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "presse-metrics: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  if (!config_flag.empty()) g.config = config_flag;
  if (seed_opt->count() > 0) g.seed = seed;

  try {
    if (*ingest) return RunPipeline(g, sources, dry_run, false);
    if (*analyze) return RunPipeline(g, sources, dry_run, true);
    if (*aggregate) return RunAggregate(g, by, series, days);
    if (*report) return RunReport(g, out);
    if (*eval) return RunEval(g, annotations, tolerance);
  } catch (const Error &e) {
    std::cerr << "presse-metrics: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception &e) {
    std::cerr << "presse-metrics: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

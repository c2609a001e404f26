#ifndef PRESSE_INGEST_H_
#define PRESSE_INGEST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "presse/catalog.h"
#include "presse/dates.h"
#include "presse/lexicon.h"
#include "presse/quotes.h"
#include "presse/record.h"

namespace presse {

enum class FetchMode { kUrlList, kLocalDirectory };

// CSS-like selectors that locate content on a source's pages. Empty means the
// generic fallback.
struct SelectorHints {
  std::string container;  // main article element
  std::string paywall;    // marker present on subscriber-only pages
  std::string rubric;
  std::string author;
  std::string date;
};

struct SourceConfig {
  std::string id;
  FetchMode mode = FetchMode::kLocalDirectory;
  // Seed list file (kUrlList) or corpus directory (kLocalDirectory).
  std::string input;
  int delay_ms = 0;
  SelectorHints selectors;
};

// Throws InvariantError on an empty id or input, or a negative delay.
void ValidateSourceConfig(const SourceConfig &config);

struct FetchResult {
  std::string url;  // requested url, or `file:` + path relative to the corpus
  int status = 0;
  std::string body;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

// Seed list: one url per line, `#` comments, blank lines ignored.
std::vector<std::string> ReadSeedList(const std::string &path);

// *.html and *.htm files below `dir`, relative to it, sorted.
std::vector<std::string> ListCorpus(const std::string &dir);

// Fetches urls with at most `jobs` hosts in flight and `delay_ms` between
// requests to the same host. Results are returned in input order; network
// failures and non-2xx statuses become errors. Only http and https.
std::vector<FetchResult> FetchUrls(const std::vector<std::string> &urls,
                                   int delay_ms, int jobs);

FetchResult ReadLocalDocument(const std::string &dir, const std::string &relative);

// Scheme, host and port of an absolute http(s) url; nullopt when malformed.
struct UrlParts {
  std::string scheme;
  std::string host;
  int port = 0;
  std::string path;  // with query, at least "/"
};
std::optional<UrlParts> ParseUrl(std::string_view url);

// Body text and metadata recovered from one page. published_date is absent
// when the page carries no parseable date.
struct ExtractedPage {
  std::string body_text;
  std::string url;  // canonical link when present
  std::optional<Date> published_date;
  std::string title;
  std::vector<std::string> authors;
  std::string rubric;
  std::optional<std::string> image_url;
  Access access = Access::kFree;
  size_t word_count = 0;
};

// Paragraph text of the article container: the selector hint when it
// matches, otherwise the element holding the most paragraph text outside
// navigation and boilerplate. Throws InvariantError when no paragraph text is
// found.
ExtractedPage ExtractTextAndMeta(std::string_view html, const SelectorHints &hints);

// Whitespace-separated tokens.
size_t CountWords(std::string_view text);

// Computes both indicators for one article. Holds references to the
// lexicons; const methods are thread-safe.
class ArticleAnalyzer {
 public:
  ArticleAnalyzer(const NameLexicon &names, const GenderCueLexicons &cues);

  // Fills the indicator fields and quote diagnostics of `record` from
  // `body_text`. Nothing derived from the text beyond counts is kept.
  void Analyze(std::string_view body_text, ArticleRecord &record) const;

 private:
  const NameLexicon &names_;
  QuoteExtractor quotes_;
};

enum class Outcome { kStored, kSkippedDuplicate, kSkippedError };

std::string_view OutcomeName(Outcome outcome);

struct IngestItem {
  std::string input;  // url or corpus-relative path
  std::string url;    // stored url, when known
  Outcome outcome = Outcome::kSkippedError;
  std::string diagnostic;
};

struct IngestSummary {
  std::vector<IngestItem> items;  // input order
  size_t stored = 0;
  size_t skipped_duplicate = 0;
  size_t skipped_error = 0;

  size_t total() const { return items.size(); }
};

struct IngestOptions {
  int jobs = 1;
  bool dry_run = false;
  // Shuffles the fetch and analysis schedule; results are committed in input
  // order either way.
  std::optional<uint64_t> seed;
  // Stand-in for pages without a date.
  Date fetch_date{};
  // Re-score urls already in the store instead of skipping them, and skip
  // urls that are not.
  bool rescore = false;
};

// A fetched page turned into a record, or the reason it could not be.
struct AnalyzedDocument {
  std::optional<ArticleRecord> record;
  std::string diagnostic;
};

// Extraction and analysis for every fetched document. The parallel kernel
// uses OpenMP; both produce identical output.
std::vector<AnalyzedDocument> AnalyzeDocuments(
    const std::vector<FetchResult> &documents, const SourceConfig &source,
    const ArticleAnalyzer &analyzer, const CategoryMap &categories,
    Date fetch_date, int jobs, const std::vector<size_t> &schedule = {});
std::vector<AnalyzedDocument> AnalyzeDocumentsSerial(
    const std::vector<FetchResult> &documents, const SourceConfig &source,
    const ArticleAnalyzer &analyzer, const CategoryMap &categories,
    Date fetch_date);

// Fetch, extract, analyze and store every input of one source. Each input
// ends in exactly one outcome. Store writes happen on the calling thread in
// input order; a dry run leaves the store untouched.
IngestSummary RunIngest(const SourceConfig &source, const ArticleAnalyzer &analyzer,
                        const CategoryMap &categories, RecordStore &store,
                        const IngestOptions &options);

}  // namespace presse

#endif  // PRESSE_INGEST_H_

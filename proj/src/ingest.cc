#include "presse/ingest.h"

#include <omp.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "presse/errors.h"
#include "presse/html.h"
#include "presse/mentions.h"
#include "presse/unicode.h"

namespace presse {

void ValidateSourceConfig(const SourceConfig &config) {
  if (config.id.empty()) throw InvariantError("source without an id");
  if (config.input.empty()) {
    throw InvariantError("source " + config.id + " has no input");
  }
  if (config.delay_ms < 0) {
    throw InvariantError("source " + config.id + " has a negative delay");
  }
}

size_t CountWords(std::string_view text) {
  size_t words = 0;
  bool in_word = false;
  for (char c : text) {
    const bool space = c == ' ' || c == '\t' || c == '\n' || c == '\r';
    if (!space && !in_word) ++words;
    in_word = !space;
  }
  return words;
}

namespace {

constexpr std::string_view kBoilerplate[] = {"nav", "header", "footer", "aside",
                                             "form", "figure", "figcaption"};

bool InBoilerplate(const HtmlNode *node, const HtmlNode *stop) {
  for (const HtmlNode *n = node->parent; n != nullptr && n != stop; n = n->parent) {
    for (std::string_view tag : kBoilerplate) {
      if (n->tag == tag) return true;
    }
  }
  return false;
}

bool IsAncestor(const HtmlNode *ancestor, const HtmlNode *node) {
  for (const HtmlNode *n = node; n != nullptr; n = n->parent) {
    if (n == ancestor) return true;
  }
  return false;
}

std::string FirstNonEmpty(const HtmlDocument &doc,
                          std::initializer_list<std::pair<const char *, const char *>>
                              selectors) {
  for (const auto &[selector, attribute] : selectors) {
    for (const HtmlNode *node : doc.Select(selector)) {
      std::string value = attribute == nullptr
                              ? InnerText(*node)
                              : CollapseWhitespace(node->Attribute(attribute));
      if (!value.empty()) return value;
    }
  }
  return {};
}

void AddAuthors(std::string_view text, std::vector<std::string> &out) {
  std::string s(text);
  for (size_t pos; (pos = s.find(" et ")) != std::string::npos;) {
    s.replace(pos, 4, ",");
  }
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::string name = CollapseWhitespace(std::string_view(s).substr(start, comma - start));
    if (name.rfind("Par ", 0) == 0 || name.rfind("par ", 0) == 0) name = name.substr(4);
    if (!name.empty() && std::find(out.begin(), out.end(), name) == out.end()) {
      out.push_back(name);
    }
    start = comma + 1;
  }
}

}  // namespace

ExtractedPage ExtractTextAndMeta(std::string_view html, const SelectorHints &hints) {
  const HtmlDocument doc = HtmlDocument::Parse(html);
  ExtractedPage page;

  const HtmlNode *container =
      hints.container.empty() ? nullptr : doc.SelectFirst(hints.container);
  std::vector<const HtmlNode *> paragraphs = doc.Select("p");
  double weight_of_best = 0.0;
  if (container == nullptr) {
    // Paragraph density: each paragraph credits its parent with its text
    // length and its grandparent with half of it.
    std::map<const HtmlNode *, double> weight;
    std::vector<const HtmlNode *> order;
    auto credit = [&](const HtmlNode *node, double w) {
      if (node == nullptr) return;
      auto [it, inserted] = weight.try_emplace(node, 0.0);
      if (inserted) order.push_back(node);
      it->second += w;
    };
    for (const HtmlNode *p : paragraphs) {
      if (InBoilerplate(p, nullptr)) continue;
      const double w = static_cast<double>(InnerText(*p).size());
      credit(p->parent, w);
      if (p->parent != nullptr) credit(p->parent->parent, w / 2);
    }
    double best = 0.0;
    for (const HtmlNode *candidate : order) {
      if (weight[candidate] > best) {
        best = weight[candidate];
        container = candidate;
      }
    }
    weight_of_best = best;
  }
  // Sites that wrap each paragraph in its own block spread the article over
  // siblings of the best candidate; keep those that look alike or carry text.
  std::vector<const HtmlNode *> containers;
  if (container != nullptr) containers.push_back(container);
  if (container != nullptr && hints.container.empty() && container->parent != nullptr) {
    containers.clear();
    const std::string_view cls = container->Attribute("class");
    for (const auto &sibling : container->parent->children) {
      const HtmlNode *s = sibling.get();
      if (s == container) {
        containers.push_back(s);
        continue;
      }
      double w = 0.0;
      for (const HtmlNode *p : paragraphs) {
        if (p->parent == s && !InBoilerplate(p, nullptr)) w += InnerText(*p).size();
      }
      const bool alike = s->tag == container->tag && !cls.empty() &&
                         s->Attribute("class") == cls;
      if (w > 0.0 && (alike || w >= 0.2 * weight_of_best)) containers.push_back(s);
    }
  }
  std::string body;
  for (const HtmlNode *p : paragraphs) {
    auto owner = std::find_if(containers.begin(), containers.end(),
                              [&](const HtmlNode *c) { return IsAncestor(c, p); });
    if (owner == containers.end() || InBoilerplate(p, *owner)) continue;
    std::string text = InnerText(*p);
    if (text.empty()) continue;
    if (!body.empty()) body += '\n';
    body += text;
  }
  if (body.empty()) throw InvariantError("no extractable paragraphs");
  page.body_text = std::move(body);
  page.word_count = CountWords(page.body_text);

  page.url = FirstNonEmpty(doc, {{"link[rel=canonical]", "href"},
                                 {"meta[property=og:url]", "content"}});
  page.title = FirstNonEmpty(doc, {{"meta[property=og:title]", "content"},
                                   {"title", nullptr},
                                   {"h1", nullptr}});

  std::vector<std::string> date_candidates;
  if (!hints.date.empty()) {
    for (const HtmlNode *node : doc.Select(hints.date)) {
      for (const char *attr : {"datetime", "content"}) {
        if (node->HasAttribute(attr)) date_candidates.emplace_back(node->Attribute(attr));
      }
      date_candidates.push_back(InnerText(*node));
    }
  }
  for (const auto &[selector, attr] :
       {std::pair{"meta[property=article:published_time]", "content"},
        std::pair{"meta[itemprop=datePublished]", "content"},
        std::pair{"meta[name=date]", "content"},
        std::pair{"time[datetime]", "datetime"}}) {
    for (const HtmlNode *node : doc.Select(selector)) {
      date_candidates.emplace_back(node->Attribute(attr));
    }
  }
  for (const auto &candidate : date_candidates) {
    if (auto date = ParseDate(candidate)) {
      page.published_date = *date;
      break;
    }
  }

  if (!hints.author.empty()) {
    for (const HtmlNode *node : doc.Select(hints.author)) {
      AddAuthors(InnerText(*node), page.authors);
    }
  }
  if (page.authors.empty()) {
    for (const HtmlNode *node : doc.Select("meta[name=author]")) {
      AddAuthors(node->Attribute("content"), page.authors);
    }
  }

  if (!hints.rubric.empty()) {
    if (const HtmlNode *node = doc.SelectFirst(hints.rubric)) {
      page.rubric = InnerText(*node);
    }
  }
  if (page.rubric.empty()) {
    page.rubric = FirstNonEmpty(doc, {{"meta[property=article:section]", "content"}});
  }

  std::string image = FirstNonEmpty(doc, {{"meta[property=og:image]", "content"}});
  if (!image.empty()) page.image_url = std::move(image);

  if (!hints.paywall.empty() && doc.SelectFirst(hints.paywall) != nullptr) {
    page.access = Access::kPaywalled;
  }
  return page;
}

ArticleAnalyzer::ArticleAnalyzer(const NameLexicon &names,
                                 const GenderCueLexicons &cues)
    : names_(names), quotes_(cues, names) {}

void ArticleAnalyzer::Analyze(std::string_view body_text,
                              ArticleRecord &record) const {
  const std::vector<Token> tokens = Tokenize(body_text);
  const MentionScore mentions = ScoreMentions(FindPersonMentions(tokens, names_));
  record.mention_rate = mentions.rate;
  record.n_mentions = mentions.n_mentions;
  const QuoteAnalysis analysis = quotes_.Analyze(tokens);
  const QuoteTally tally = quotes_.Tally(body_text, tokens, analysis.quotations);
  record.men_quoted = tally.men;
  record.women_quoted = tally.women;
  record.unknown_quoted = tally.unknown;
  record.diagnostics.unbalanced_quotes = analysis.diagnostics.unbalanced_quotes;
  record.diagnostics.unresolved_speakers = analysis.diagnostics.unresolved_speakers;
}

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kStored: return "stored";
    case Outcome::kSkippedDuplicate: return "skipped-duplicate";
    case Outcome::kSkippedError: return "skipped-error";
  }
  return "skipped-error";
}

namespace {

AnalyzedDocument AnalyzeOne(const FetchResult &document, const SourceConfig &source,
                            const ArticleAnalyzer &analyzer,
                            const CategoryMap &categories, Date fetch_date) {
  AnalyzedDocument out;
  if (!document.ok()) {
    out.diagnostic = document.error;
    return out;
  }
  ExtractedPage page;
  try {
    page = ExtractTextAndMeta(document.body, source.selectors);
  } catch (const InvariantError &e) {
    out.diagnostic = e.what();
    return out;
  }
  ArticleRecord r;
  // Local corpora prefer the page's canonical url; fetched pages keep the
  // url they were requested under.
  r.url = source.mode == FetchMode::kLocalDirectory && !page.url.empty()
              ? page.url
              : document.url;
  if (page.published_date) {
    r.published_date = *page.published_date;
  } else {
    r.published_date = fetch_date;
    r.diagnostics.date_fallback = true;
  }
  r.word_count = page.word_count;
  r.authors = std::move(page.authors);
  r.source = source.id;
  r.rubric = std::move(page.rubric);
  r.title = std::move(page.title);
  r.image_url = std::move(page.image_url);
  r.access = page.access;
  r.category = categories.Categorize(r.source, r.rubric);
  analyzer.Analyze(page.body_text, r);
  out.record = std::move(r);
  return out;
}

}  // namespace

std::vector<AnalyzedDocument> AnalyzeDocumentsSerial(
    const std::vector<FetchResult> &documents, const SourceConfig &source,
    const ArticleAnalyzer &analyzer, const CategoryMap &categories,
    Date fetch_date) {
  std::vector<AnalyzedDocument> out;
  out.reserve(documents.size());
  for (const auto &document : documents) {
    out.push_back(AnalyzeOne(document, source, analyzer, categories, fetch_date));
  }
  return out;
}

std::vector<AnalyzedDocument> AnalyzeDocuments(
    const std::vector<FetchResult> &documents, const SourceConfig &source,
    const ArticleAnalyzer &analyzer, const CategoryMap &categories,
    Date fetch_date, int jobs, const std::vector<size_t> &schedule) {
  const long n = static_cast<long>(documents.size());
  std::vector<AnalyzedDocument> out(documents.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
  for (long k = 0; k < n; ++k) {
    const size_t i = schedule.empty() ? static_cast<size_t>(k) : schedule[k];
    out[i] = AnalyzeOne(documents[i], source, analyzer, categories, fetch_date);
  }
  return out;
}

IngestSummary RunIngest(const SourceConfig &source, const ArticleAnalyzer &analyzer,
                        const CategoryMap &categories, RecordStore &store,
                        const IngestOptions &options) {
  ValidateSourceConfig(source);
  const bool url_mode = source.mode == FetchMode::kUrlList;
  const std::vector<std::string> inputs =
      url_mode ? ReadSeedList(source.input) : ListCorpus(source.input);
  const size_t n = inputs.size();

  IngestSummary summary;
  summary.items.resize(n);
  std::vector<bool> decided(n, false);
  for (size_t i = 0; i < n; ++i) summary.items[i].input = inputs[i];

  std::vector<size_t> schedule(n);
  for (size_t i = 0; i < n; ++i) schedule[i] = i;
  if (options.seed) {
    std::mt19937_64 rng(*options.seed);
    std::shuffle(schedule.begin(), schedule.end(), rng);
  }

  // Urls known before fetching are checked first so that duplicates are
  // never requested.
  if (url_mode) {
    std::set<std::string> seen;
    for (size_t i = 0; i < n; ++i) {
      IngestItem &item = summary.items[i];
      item.url = inputs[i];
      const bool in_store = store.Contains(inputs[i]);
      if (!seen.insert(inputs[i]).second || (in_store && !options.rescore)) {
        item.outcome = Outcome::kSkippedDuplicate;
        decided[i] = true;
      } else if (options.rescore && !in_store) {
        item.outcome = Outcome::kSkippedError;
        item.diagnostic = "not in store";
        decided[i] = true;
      }
    }
  }

  std::vector<FetchResult> documents(n);
  if (url_mode) {
    std::vector<std::string> to_fetch;
    std::vector<size_t> index;
    for (size_t i : schedule) {
      if (decided[i]) continue;
      to_fetch.push_back(inputs[i]);
      index.push_back(i);
    }
    auto fetched = FetchUrls(to_fetch, source.delay_ms, options.jobs);
    for (size_t k = 0; k < index.size(); ++k) documents[index[k]] = std::move(fetched[k]);
  } else {
    for (size_t i : schedule) documents[i] = ReadLocalDocument(source.input, inputs[i]);
  }
  for (size_t i = 0; i < n; ++i) {
    if (decided[i]) documents[i].error = "not fetched";
  }

  std::vector<AnalyzedDocument> analyzed =
      AnalyzeDocuments(documents, source, analyzer, categories, options.fetch_date,
                       options.jobs, schedule);

  std::set<std::string> committed;
  for (size_t i = 0; i < n; ++i) {
    if (decided[i]) continue;
    IngestItem &item = summary.items[i];
    AnalyzedDocument &doc = analyzed[i];
    if (!doc.record) {
      item.outcome = Outcome::kSkippedError;
      item.diagnostic = doc.diagnostic;
      continue;
    }
    item.url = doc.record->url;
    const bool in_store = store.Contains(item.url);
    if (!committed.insert(item.url).second || (in_store && !options.rescore)) {
      item.outcome = Outcome::kSkippedDuplicate;
      continue;
    }
    if (options.rescore && !in_store) {
      item.outcome = Outcome::kSkippedError;
      item.diagnostic = "not in store";
      continue;
    }
    try {
      if (!options.dry_run) store.Upsert(*doc.record);
      item.outcome = Outcome::kStored;
    } catch (const InvariantError &e) {
      item.outcome = Outcome::kSkippedError;
      item.diagnostic = e.what();
    }
  }

  for (const auto &item : summary.items) {
    switch (item.outcome) {
      case Outcome::kStored: ++summary.stored; break;
      case Outcome::kSkippedDuplicate: ++summary.skipped_duplicate; break;
      case Outcome::kSkippedError: ++summary.skipped_error; break;
    }
  }
  return summary;
}

}  // namespace presse

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include "presse/ingest.h"

#include <chrono>
#include <filesystem>
#include <thread>

#include "doctest.h"
#include "presse/errors.h"
#include "test_util.h"

namespace presse {
namespace {

namespace fs = std::filesystem;
using namespace std::chrono;
using testing::DataPath;
using testing::FixtureCues;
using testing::FixtureNames;

constexpr Date D(int y, unsigned m, unsigned d) {
  return Date{year{y}, month{m}, day{d}};
}

const CategoryMap &Categories() {
  static const CategoryMap map = CategoryMap::Load(DataPath("category_map.tsv"));
  return map;
}

const ArticleAnalyzer &Analyzer() {
  static const ArticleAnalyzer analyzer(FixtureNames(), FixtureCues());
  return analyzer;
}

SourceConfig LeMonde() {
  SourceConfig s;
  s.id = "lemonde";
  s.mode = FetchMode::kLocalDirectory;
  s.input = DataPath("fixtures/html/lemonde");
  s.selectors.container = "section.article__content";
  s.selectors.paywall = "p.article__status";
  return s;
}

SourceConfig LeFigaro() {
  SourceConfig s;
  s.id = "lefigaro";
  s.mode = FetchMode::kLocalDirectory;
  s.input = DataPath("fixtures/html/lefigaro");
  s.selectors.container = "div.fig-body";
  s.selectors.paywall = "div.fig-premium-paywall";
  s.selectors.rubric = "span.fig-rubric";
  s.selectors.author = "a.fig-author";
  return s;
}

SourceConfig LEquipe() {
  SourceConfig s;
  s.id = "lequipe";
  s.mode = FetchMode::kLocalDirectory;
  s.input = DataPath("fixtures/html/lequipe");
  s.selectors.rubric = "div.Article__rubric";
  s.selectors.author = "div.Author__name";
  s.selectors.date = "div.Article__date";
  return s;
}

std::string Fixture(const std::string &relative) {
  return testing::ReadFile(DataPath("fixtures/html/" + relative));
}

TEST_CASE("three paragraphs of 100 words") {
  ExtractedPage page =
      ExtractTextAndMeta(Fixture("lemonde/trois-paragraphes.html"), LeMonde().selectors);
  CHECK(page.word_count == 300);
  CHECK(page.published_date == D(2021, 12, 20));
  CHECK(page.rubric == "Société");
  CHECK(page.authors == std::vector<std::string>{"Léa Bonnet"});
  CHECK(page.url == "https://www.lemonde.fr/societe/trois-paragraphes.html");
  CHECK(page.access == Access::kFree);
  // Boilerplate stays out of the body.
  CHECK(page.body_text.find("Lire aussi") == std::string::npos);
  CHECK(page.body_text.find("droits réservés") == std::string::npos);
  CHECK(page.body_text.find("Accueil") == std::string::npos);
}

TEST_CASE("paywall marker") {
  ExtractedPage page = ExtractTextAndMeta(Fixture("lemonde/abonnes.html"), LeMonde().selectors);
  CHECK(page.access == Access::kPaywalled);
  CHECK(page.word_count > 0);

  // Without the hint the page counts as free.
  SelectorHints no_hint;
  CHECK(ExtractTextAndMeta(Fixture("lemonde/abonnes.html"), no_hint).access ==
        Access::kFree);
}

TEST_CASE("missing metadata stays absent") {
  ExtractedPage page =
      ExtractTextAndMeta(Fixture("lefigaro/sans-auteur.html"), LeFigaro().selectors);
  CHECK(page.authors.empty());
  CHECK(page.rubric == "Cinéma");

  ExtractedPage undated =
      ExtractTextAndMeta(Fixture("lequipe/sans-date.html"), LEquipe().selectors);
  CHECK_FALSE(undated.published_date);
}

TEST_CASE("French date text and density fallback") {
  // lequipe pages have no container hint; each paragraph sits in its own div.
  for (const auto &file : ListCorpus(DataPath("fixtures/html/lequipe"))) {
    if (file == "sans-date.html") continue;
    ExtractedPage page = ExtractTextAndMeta(Fixture("lequipe/" + file), LEquipe().selectors);
    CHECK(page.published_date.has_value());
    CHECK(page.body_text.find("droits réservés") == std::string::npos);
    CHECK(page.body_text.find('\n') != std::string::npos);  // several paragraphs
  }
}

TEST_CASE("no paragraphs is an error") {
  CHECK_THROWS_AS(ExtractTextAndMeta(Fixture("lemonde/vide.html"), LeMonde().selectors),
                  InvariantError);
}

TEST_CASE("unclosed paragraphs and a truncated paywalled page") {
  for (const auto &file : ListCorpus(DataPath("fixtures/html/lefigaro"))) {
    ExtractedPage page = ExtractTextAndMeta(Fixture("lefigaro/" + file), LeFigaro().selectors);
    CHECK(page.body_text.find("réservée aux abonnés") == std::string::npos);
    if (file != "sans-auteur.html") CHECK_FALSE(page.authors.empty());
  }
}

TEST_CASE("analyze_article") {
  ArticleRecord r;
  Analyzer().Analyze("Jean-Michel a vu Camille. Plus tard, Camille a répondu.", r);
  REQUIRE(r.mention_rate);
  CHECK(*r.mention_rate == 0.5);
  CHECK(r.n_mentions == 3);

  ArticleRecord council;
  Analyzer().Analyze(
      "Jeanne D et Georges E sont membres du conseil. Jeanne D dit: 'Je "
      "souhaite démissionner'",
      council);
  CHECK(council.men_quoted == 0);
  CHECK(council.women_quoted == 1);

  ArticleRecord empty;
  Analyzer().Analyze("", empty);
  CHECK_FALSE(empty.mention_rate);
  CHECK(empty.n_mentions == 0);
  CHECK(empty.men_quoted + empty.women_quoted + empty.unknown_quoted == 0);
}

TEST_CASE("word counting") {
  CHECK(CountWords("") == 0);
  CHECK(CountWords("  un  deux\ntrois ") == 3);
}

TEST_CASE("source config invariants") {
  SourceConfig s = LeMonde();
  CHECK_NOTHROW(ValidateSourceConfig(s));
  s.delay_ms = -1;
  CHECK_THROWS_AS(ValidateSourceConfig(s), InvariantError);
}

TEST_CASE("url parsing") {
  auto u = ParseUrl("https://www.lemonde.fr/culture/article.html?x=1#top");
  REQUIRE(u);
  CHECK(u->scheme == "https");
  CHECK(u->host == "www.lemonde.fr");
  CHECK(u->port == 443);
  CHECK(u->path == "/culture/article.html?x=1");
  auto local = ParseUrl("http://127.0.0.1:8080");
  REQUIRE(local);
  CHECK(local->port == 8080);
  CHECK(local->path == "/");
  CHECK_FALSE(ParseUrl("ftp://x/y"));
  CHECK_FALSE(ParseUrl("not a url"));
  CHECK_FALSE(ParseUrl("http://:80/"));
}

std::vector<std::string> AllBodyExcerpts() {
  // 8-word windows of every extractable fixture body, except those a
  // headline repeats (headlines are stored metadata).
  std::vector<std::string> out, titles;
  for (const auto &source : {LeMonde(), LeFigaro(), LEquipe()}) {
    for (const auto &file : ListCorpus(source.input)) {
      ExtractedPage page;
      try {
        page = ExtractTextAndMeta(testing::ReadFile(source.input + "/" + file),
                                  source.selectors);
      } catch (const InvariantError &) {
        continue;
      }
      titles.push_back(page.title);
      std::vector<std::string> words;
      std::string w;
      for (char c : page.body_text + " ") {
        if (c == ' ' || c == '\n') {
          if (!w.empty()) words.push_back(w);
          w.clear();
        } else {
          w += c;
        }
      }
      for (size_t i = 0; i + 8 <= words.size(); i += 4) {
        std::string excerpt = words[i];
        for (size_t k = 1; k < 8; ++k) excerpt += " " + words[i + k];
        out.push_back(excerpt);
      }
    }
  }
  std::erase_if(out, [&](const std::string &excerpt) {
    return std::any_of(titles.begin(), titles.end(), [&](const std::string &t) {
      return t.find(excerpt) != std::string::npos;
    });
  });
  return out;
}

TEST_CASE("local pipeline: totality, idempotence and no body text") {
  testing::TempDir dir;
  const std::string path = dir.File("store.ndjson");
  IngestOptions options;
  options.fetch_date = D(2021, 12, 23);
  options.jobs = 3;
  size_t inputs = 0, stored = 0;
  {
    auto store = RecordStore::Open(path);
    for (const auto &source : {LeMonde(), LeFigaro(), LEquipe()}) {
      IngestSummary s = RunIngest(source, Analyzer(), Categories(), store, options);
      CHECK(s.stored + s.skipped_duplicate + s.skipped_error == s.total());
      CHECK(s.total() == ListCorpus(source.input).size());
      inputs += s.total();
      stored += s.stored;
      if (source.id == "lemonde") {
        CHECK(s.skipped_duplicate == 1);  // prenoms-copie.html
        CHECK(s.skipped_error == 1);      // vide.html
      }
    }
    CHECK(store.size() == stored);
    const ArticleRecord *undated = store.Find("https://www.lequipe.fr/football/sans-date.html");
    REQUIRE(undated != nullptr);
    CHECK(undated->diagnostics.date_fallback);
    CHECK(undated->published_date == D(2021, 12, 23));
    const ArticleRecord *names = store.Find("https://www.lemonde.fr/culture/prenoms.html");
    REQUIRE(names != nullptr);
    CHECK(*names->mention_rate == 0.5);
    CHECK(names->category == "CULTURE");
    const ArticleRecord *council = store.Find("https://www.lefigaro.fr/politique/conseil.html");
    REQUIRE(council != nullptr);
    CHECK(council->men_quoted == 0);
    CHECK(council->women_quoted == 1);
  }
  const std::string first = testing::ReadFile(path);
  {
    auto store = RecordStore::Open(path);
    for (const auto &source : {LeMonde(), LeFigaro(), LEquipe()}) {
      IngestSummary s = RunIngest(source, Analyzer(), Categories(), store, options);
      CHECK(s.stored == 0);
    }
    CHECK(store.size() == stored);
  }
  auto reread = RecordStore::Open(path, true);
  CHECK(reread.size() == stored);
  CHECK(testing::ReadFile(path) == first);

  const auto excerpts = AllBodyExcerpts();
  CHECK(excerpts.size() > 100);
  for (const auto &excerpt : excerpts) {
    CHECK_MESSAGE(first.find(excerpt) == std::string::npos, excerpt);
  }
}

TEST_CASE("dry run leaves the store untouched") {
  testing::TempDir dir;
  const std::string path = dir.File("store.ndjson");
  IngestOptions options;
  options.fetch_date = D(2021, 12, 23);
  options.dry_run = true;
  auto store = RecordStore::Open(path);
  IngestSummary s = RunIngest(LeMonde(), Analyzer(), Categories(), store, options);
  CHECK(s.stored > 0);
  CHECK(store.empty());
  CHECK(testing::ReadFile(path).empty());
}

TEST_CASE("parallel analysis equals the serial reference for any schedule") {
  SourceConfig source = LeMonde();
  std::vector<FetchResult> docs;
  for (const auto &file : ListCorpus(source.input)) {
    docs.push_back(ReadLocalDocument(source.input, file));
  }
  auto serial = AnalyzeDocumentsSerial(docs, source, Analyzer(), Categories(), D(2021, 12, 23));
  std::vector<size_t> reversed(docs.size());
  for (size_t i = 0; i < docs.size(); ++i) reversed[i] = docs.size() - 1 - i;
  for (int jobs : {1, 2, 4}) {
    auto parallel = AnalyzeDocuments(docs, source, Analyzer(), Categories(),
                                     D(2021, 12, 23), jobs, reversed);
    REQUIRE(parallel.size() == serial.size());
    for (size_t i = 0; i < serial.size(); ++i) {
      CHECK(parallel[i].record == serial[i].record);
      CHECK(parallel[i].diagnostic == serial[i].diagnostic);
    }
  }
}

TEST_CASE("seeded schedules commit identical stores") {
  testing::TempDir dir;
  IngestOptions options;
  options.fetch_date = D(2021, 12, 23);
  options.jobs = 2;
  std::string reference;
  for (uint64_t seed : {0ull, 1ull, 42ull}) {
    const std::string path = dir.File("s" + std::to_string(seed) + ".ndjson");
    {
      auto store = RecordStore::Open(path);
      options.seed = seed;
      RunIngest(LeFigaro(), Analyzer(), Categories(), store, options);
    }
    if (reference.empty()) reference = testing::ReadFile(path);
    CHECK(testing::ReadFile(path) == reference);
  }
}

// Serves the lemonde fixtures over HTTP on a loopback port.
class FixtureServer {
 public:
  FixtureServer() {
    server_.Get(R"(/page/(.+))", [this](const httplib::Request &req,
                                         httplib::Response &res) {
      hits_.push_back(steady_clock::now());
      const std::string path = DataPath("fixtures/html/lemonde/" + req.matches[1].str());
      if (!fs::exists(path)) {
        res.status = 404;
        return;
      }
      res.set_content(testing::ReadFile(path), "text/html; charset=utf-8");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FixtureServer() {
    server_.stop();
    thread_.join();
  }
  std::string Url(const std::string &page) const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/page/" + page;
  }
  const std::vector<steady_clock::time_point> &hits() const { return hits_; }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::vector<steady_clock::time_point> hits_;
};

TEST_CASE("fetching: 404 is skipped, others succeed, delay is honoured") {
  FixtureServer server;
  std::vector<std::string> urls = {server.Url("prenoms.html"), server.Url("absent.html"),
                                   server.Url("abonnes.html")};
  auto results = FetchUrls(urls, 120, 4);
  REQUIRE(results.size() == 3);
  CHECK(results[0].ok());
  CHECK(results[0].status == 200);
  CHECK(results[0].body.find("Jean-Michel") != std::string::npos);
  CHECK_FALSE(results[1].ok());
  CHECK(results[1].status == 404);
  CHECK(results[1].error == "HTTP 404");
  CHECK(results[2].ok());
  REQUIRE(server.hits().size() == 3);
  for (size_t i = 1; i < 3; ++i) {
    CHECK(server.hits()[i] - server.hits()[i - 1] >= milliseconds(100));
  }

  auto refused = FetchUrls({"http://127.0.0.1:1/x", "nonsense"}, 0, 1);
  CHECK_FALSE(refused[0].ok());
  CHECK(refused[1].error == "malformed url");
}

TEST_CASE("url-list pipeline") {
  FixtureServer server;
  testing::TempDir dir;
  const std::string seeds = dir.Write(
      "seeds.txt", "# seed list\n" + server.Url("prenoms.html") + "\n\n" +
                       server.Url("absent.html") + "\n" + server.Url("prenoms.html") +
                       "\n" + server.Url("vide.html") + "\n");
  SourceConfig source = LeMonde();
  source.mode = FetchMode::kUrlList;
  source.input = seeds;
  IngestOptions options;
  options.fetch_date = D(2021, 12, 23);
  RecordStore store;
  IngestSummary s = RunIngest(source, Analyzer(), Categories(), store, options);
  REQUIRE(s.total() == 4);
  CHECK(s.items[0].outcome == Outcome::kStored);
  CHECK(s.items[1].outcome == Outcome::kSkippedError);
  CHECK(s.items[1].diagnostic == "HTTP 404");
  CHECK(s.items[2].outcome == Outcome::kSkippedDuplicate);
  CHECK(s.items[3].outcome == Outcome::kSkippedError);
  CHECK(store.size() == 1);
  // Fetched pages keep the url they were requested under.
  CHECK(store.Contains(server.Url("prenoms.html")));
  CHECK(server.hits().size() == 3);  // the duplicate is never requested

  IngestSummary again = RunIngest(source, Analyzer(), Categories(), store, options);
  CHECK(again.items[0].outcome == Outcome::kSkippedDuplicate);
  CHECK(server.hits().size() == 5);
}

}  // namespace
}  // namespace presse

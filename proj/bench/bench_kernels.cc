// Parallel kernels against their serial references.
//
//   build/bench/bench_kernels --benchmark_counters_tabular=true
//
// Thread counts above the number of cores only measure scheduling overhead.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <string>
#include <vector>

#include "presse/catalog.h"
#include "presse/ingest.h"
#include "presse/lexicon.h"
#include "record_gen.h"

namespace presse {
namespace {

constexpr Date kFirst{std::chrono::year{2021}, std::chrono::month{1},
                      std::chrono::day{4}};

const std::vector<ArticleRecord> &Records(size_t n) {
  static std::map<size_t, std::vector<ArticleRecord>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, testing::RandomRecords(7, n, kFirst, 365)).first;
  return it->second;
}

const DateRange kYear{kFirst, AddDays(kFirst, 364)};

void BM_AggregateSerial(benchmark::State &state) {
  const auto &records = Records(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(AggregateSerial(records, Dimension::kCategory, kYear));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Aggregate(benchmark::State &state) {
  const auto &records = Records(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Aggregate(records, Dimension::kCategory, kYear));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_AggregateSerial)->Arg(10'000)->Arg(200'000);
BENCHMARK(BM_Aggregate)->ArgsProduct({{10'000, 200'000}, {1, 2, 4}});

struct Corpus {
  NameLexicon names;
  GenderCueLexicons cues;
  CategoryMap categories;
  SourceConfig source;
  std::vector<FetchResult> documents;
};

const Corpus &FixtureCorpus() {
  static const Corpus corpus = [] {
    const std::string data = PRESSE_DATA_DIR;
    Corpus c{LoadNameLexicon(data + "/lexicon/names.csv", data + "/lexicon/blocklist.txt"),
             LoadGenderCues({data + "/lexicon/titles.tsv", data + "/lexicon/professions.tsv",
                             data + "/lexicon/pronouns.tsv",
                             data + "/lexicon/speech_verbs.txt",
                             data + "/lexicon/first_names.tsv"}),
             CategoryMap::Load(data + "/category_map.tsv"),
             {},
             {}};
    c.source.id = "lefigaro";
    c.source.input = data + "/fixtures/html/lefigaro";
    c.source.selectors.container = "div.fig-body";
    for (int copy = 0; copy < 8; ++copy) {
      for (const auto &file : ListCorpus(c.source.input)) {
        c.documents.push_back(ReadLocalDocument(c.source.input, file));
      }
    }
    return c;
  }();
  return corpus;
}

void BM_AnalyzeSerial(benchmark::State &state) {
  const Corpus &c = FixtureCorpus();
  const ArticleAnalyzer analyzer(c.names, c.cues);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        AnalyzeDocumentsSerial(c.documents, c.source, analyzer, c.categories, kFirst));
  }
  state.SetItemsProcessed(state.iterations() * c.documents.size());
}

void BM_Analyze(benchmark::State &state) {
  const Corpus &c = FixtureCorpus();
  const ArticleAnalyzer analyzer(c.names, c.cues);
  for (auto _ : state) {
    benchmark::DoNotOptimize(AnalyzeDocuments(c.documents, c.source, analyzer,
                                              c.categories, kFirst,
                                              static_cast<int>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * c.documents.size());
}

BENCHMARK(BM_AnalyzeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Analyze)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace presse

BENCHMARK_MAIN();

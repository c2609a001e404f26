#ifndef PRESSE_TESTS_CONFIG_FIXTURE_H_
#define PRESSE_TESTS_CONFIG_FIXTURE_H_

#include <string>

#include "json.hpp"
#include "test_util.h"

namespace presse::testing {

// The repository configuration with absolute lexicon and corpus paths and
// store/report paths relative to wherever the file is written.
inline nlohmann::json FixtureConfig() {
  using nlohmann::json;
  json sources = json::array();
  sources.push_back({{"id", "lemonde"},
                     {"mode", "local_directory"},
                     {"input", DataPath("fixtures/html/lemonde")},
                     {"selectors",
                      {{"container", "section.article__content"},
                       {"paywall", "p.article__status"}}}});
  sources.push_back({{"id", "lefigaro"},
                     {"mode", "local_directory"},
                     {"input", DataPath("fixtures/html/lefigaro")},
                     {"selectors",
                      {{"container", "div.fig-body"},
                       {"paywall", "div.fig-premium-paywall"},
                       {"rubric", "span.fig-rubric"},
                       {"author", "a.fig-author"}}}});
  sources.push_back({{"id", "lequipe"},
                     {"mode", "local_directory"},
                     {"input", DataPath("fixtures/html/lequipe")},
                     {"delay_ms", 0},
                     {"selectors",
                      {{"rubric", "div.Article__rubric"},
                       {"author", "div.Author__name"},
                       {"date", "div.Article__date"}}}});
  return {{"lexicons",
           {{"names", DataPath("lexicon/names.csv")},
            {"blocklist", DataPath("lexicon/blocklist.txt")},
            {"titles", DataPath("lexicon/titles.tsv")},
            {"professions", DataPath("lexicon/professions.tsv")},
            {"pronouns", DataPath("lexicon/pronouns.tsv")},
            {"speech_verbs", DataPath("lexicon/speech_verbs.txt")},
            {"first_names", DataPath("lexicon/first_names.tsv")}}},
          {"category_map", DataPath("category_map.tsv")},
          {"store", "var/store.ndjson"},
          {"report_dir", "var/report"},
          {"as_of", "2021-12-23"},
          {"sources", sources}};
}

}  // namespace presse::testing

#endif  // PRESSE_TESTS_CONFIG_FIXTURE_H_

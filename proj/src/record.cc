#include "presse/record.h"

#include "presse/errors.h"

namespace presse {

using nlohmann::json;
using nlohmann::ordered_json;

std::optional<double> ArticleRecord::QuoteShare() const {
  const size_t gendered = men_quoted + women_quoted;
  if (gendered == 0) return std::nullopt;
  return static_cast<double>(men_quoted) / static_cast<double>(gendered);
}

void ValidateRecord(const ArticleRecord &r) {
  if (r.url.empty()) throw InvariantError("record has an empty url");
  if (!r.published_date.ok()) {
    throw InvariantError("record " + r.url + " has an invalid date");
  }
  if (r.mention_rate.has_value() != (r.n_mentions > 0)) {
    throw InvariantError("record " + r.url +
                         ": mention_rate must be present iff n_mentions > 0");
  }
  if (r.mention_rate && (*r.mention_rate < 0.0 || *r.mention_rate > 1.0)) {
    throw InvariantError("record " + r.url + ": mention_rate outside [0,1]");
  }
}

ordered_json RecordToJson(const ArticleRecord &r) {
  ordered_json j;
  j["url"] = r.url;
  j["published_date"] = FormatDate(r.published_date);
  j["word_count"] = r.word_count;
  j["authors"] = r.authors;
  j["source"] = r.source;
  j["rubric"] = r.rubric;
  j["title"] = r.title;
  j["image_url"] = r.image_url ? ordered_json(*r.image_url) : ordered_json();
  j["access"] = r.access == Access::kPaywalled ? "paywalled" : "free";
  j["category"] = r.category;
  j["mention_rate"] =
      r.mention_rate ? ordered_json(*r.mention_rate) : ordered_json();
  j["n_mentions"] = r.n_mentions;
  j["men_quoted"] = r.men_quoted;
  j["women_quoted"] = r.women_quoted;
  j["unknown_quoted"] = r.unknown_quoted;
  j["diagnostics"] = {
      {"unbalanced_quotes", r.diagnostics.unbalanced_quotes},
      {"unresolved_speakers", r.diagnostics.unresolved_speakers},
      {"date_fallback", r.diagnostics.date_fallback},
  };
  return j;
}

ArticleRecord RecordFromJson(const json &j) {
  try {
    ArticleRecord r;
    r.url = j.at("url").get<std::string>();
    auto date = ParseIsoDate(j.at("published_date").get<std::string>());
    if (!date) throw InvariantError("bad published_date for " + r.url);
    r.published_date = *date;
    r.word_count = j.value("word_count", size_t{0});
    r.authors = j.value("authors", std::vector<std::string>{});
    r.source = j.value("source", std::string());
    r.rubric = j.value("rubric", std::string());
    r.title = j.value("title", std::string());
    if (j.contains("image_url") && !j["image_url"].is_null()) {
      r.image_url = j["image_url"].get<std::string>();
    }
    r.access = j.value("access", std::string("free")) == "paywalled"
                   ? Access::kPaywalled
                   : Access::kFree;
    r.category = j.value("category", std::string());
    if (j.contains("mention_rate") && !j["mention_rate"].is_null()) {
      r.mention_rate = j["mention_rate"].get<double>();
    }
    r.n_mentions = j.value("n_mentions", size_t{0});
    r.men_quoted = j.value("men_quoted", size_t{0});
    r.women_quoted = j.value("women_quoted", size_t{0});
    r.unknown_quoted = j.value("unknown_quoted", size_t{0});
    if (j.contains("diagnostics")) {
      const json &d = j["diagnostics"];
      r.diagnostics.unbalanced_quotes = d.value("unbalanced_quotes", size_t{0});
      r.diagnostics.unresolved_speakers =
          d.value("unresolved_speakers", size_t{0});
      r.diagnostics.date_fallback = d.value("date_fallback", false);
    }
    return r;
  } catch (const json::exception &e) {
    throw InvariantError(std::string("malformed record: ") + e.what());
  }
}

std::string RecordToLine(const ArticleRecord &record) {
  return RecordToJson(record).dump(-1, ' ', false,
                                   json::error_handler_t::replace);
}

}  // namespace presse

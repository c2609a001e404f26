#include "presse/config.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "json.hpp"
#include "presse/errors.h"

namespace presse {

namespace fs = std::filesystem;
using nlohmann::json;

std::string ResolveConfigPath(const std::optional<std::string> &flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char *env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') {
    return env;
  }
  return kDefaultConfigFile;
}

namespace {

std::string Resolve(const fs::path &base, const std::string &p) {
  if (p.empty()) return p;
  fs::path path(p);
  return (path.is_absolute() ? path : base / path).lexically_normal().string();
}

std::string RequiredString(const json &j, const char *key, const std::string &where) {
  if (!j.contains(key) || !j[key].is_string() || j[key].get<std::string>().empty()) {
    throw ConfigError(where + ": missing string field `" + key + "`");
  }
  return j[key].get<std::string>();
}

std::string OptionalString(const json &j, const char *key) {
  if (!j.contains(key) || j[key].is_null()) return {};
  if (!j[key].is_string()) throw ConfigError(std::string("field `") + key + "` must be a string");
  return j[key].get<std::string>();
}

}  // namespace

PipelineConfig LoadConfig(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open configuration " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception &e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError(path + ": expected a JSON object");
  const fs::path base = fs::absolute(path).parent_path();

  PipelineConfig c;
  c.path = path;
  try {
    if (!j.contains("lexicons") || !j["lexicons"].is_object()) {
      throw ConfigError(path + ": missing object `lexicons`");
    }
    const json &lex = j["lexicons"];
    const std::string where = path + ": lexicons";
    c.lexicons.names = Resolve(base, RequiredString(lex, "names", where));
    c.lexicons.blocklist = Resolve(base, RequiredString(lex, "blocklist", where));
    c.lexicons.cues.titles = Resolve(base, RequiredString(lex, "titles", where));
    c.lexicons.cues.professions = Resolve(base, RequiredString(lex, "professions", where));
    c.lexicons.cues.pronouns = Resolve(base, RequiredString(lex, "pronouns", where));
    c.lexicons.cues.speech_verbs = Resolve(base, RequiredString(lex, "speech_verbs", where));
    c.lexicons.cues.first_names = Resolve(base, OptionalString(lex, "first_names"));

    c.category_map = Resolve(base, RequiredString(j, "category_map", path));
    c.store = Resolve(base, RequiredString(j, "store", path));
    c.report_dir = Resolve(base, RequiredString(j, "report_dir", path));
    if (std::string as_of = OptionalString(j, "as_of"); !as_of.empty()) {
      c.as_of = ParseIsoDate(as_of);
      if (!c.as_of) throw ConfigError(path + ": `as_of` must be YYYY-MM-DD");
    }

    if (j.contains("sources")) {
      if (!j["sources"].is_array()) throw ConfigError(path + ": `sources` must be an array");
      for (const json &s : j["sources"]) {
        SourceConfig source;
        source.id = RequiredString(s, "id", path + ": source");
        const std::string where = path + ": source " + source.id;
        const std::string mode = RequiredString(s, "mode", where);
        if (mode == "url_list") {
          source.mode = FetchMode::kUrlList;
        } else if (mode == "local_directory") {
          source.mode = FetchMode::kLocalDirectory;
        } else {
          throw ConfigError(where + ": mode must be url_list or local_directory");
        }
        source.input = Resolve(base, RequiredString(s, "input", where));
        if (s.contains("delay_ms")) {
          if (!s["delay_ms"].is_number_integer()) {
            throw ConfigError(where + ": delay_ms must be an integer");
          }
          source.delay_ms = s["delay_ms"].get<int>();
        }
        if (s.contains("selectors")) {
          const json &sel = s["selectors"];
          if (!sel.is_object()) throw ConfigError(where + ": selectors must be an object");
          source.selectors.container = OptionalString(sel, "container");
          source.selectors.paywall = OptionalString(sel, "paywall");
          source.selectors.rubric = OptionalString(sel, "rubric");
          source.selectors.author = OptionalString(sel, "author");
          source.selectors.date = OptionalString(sel, "date");
        }
        c.sources.push_back(std::move(source));
      }
    }
  } catch (const json::exception &e) {
    throw ConfigError(path + ": " + e.what());
  }
  return c;
}

void ValidateConfig(const PipelineConfig &c) {
  auto require = [&](const std::string &p, const char *what) {
    if (!fs::exists(p)) throw ConfigError(c.path + ": " + what + " not found: " + p);
  };
  require(c.lexicons.names, "name lexicon");
  require(c.lexicons.blocklist, "blocklist");
  require(c.lexicons.cues.titles, "title list");
  require(c.lexicons.cues.professions, "profession list");
  require(c.lexicons.cues.pronouns, "pronoun list");
  require(c.lexicons.cues.speech_verbs, "speech verb list");
  if (!c.lexicons.cues.first_names.empty()) {
    require(c.lexicons.cues.first_names, "first-name list");
  }
  require(c.category_map, "category map");
  std::set<std::string> ids;
  for (const auto &s : c.sources) {
    if (!ids.insert(s.id).second) {
      throw ConfigError(c.path + ": duplicate source id " + s.id);
    }
    try {
      ValidateSourceConfig(s);
    } catch (const InvariantError &e) {
      throw ConfigError(c.path + ": " + e.what());
    }
    require(s.input, "source input");
  }
}

}  // namespace presse

#ifndef PRESSE_CONFIG_H_
#define PRESSE_CONFIG_H_

#include <optional>
#include <string>
#include <vector>

#include "presse/dates.h"
#include "presse/ingest.h"
#include "presse/lexicon.h"

namespace presse {

// Environment variable naming the configuration file.
inline constexpr const char *kConfigEnv = "PRESSE_METRICS_CONFIG";
inline constexpr const char *kDefaultConfigFile = "presse-metrics.json";

struct LexiconPaths {
  std::string names;
  std::string blocklist;
  CuePaths cues;
};

// Paths are absolute after loading: relative entries resolve against the
// directory of the configuration file.
struct PipelineConfig {
  std::string path;  // the file this was loaded from
  LexiconPaths lexicons;
  std::string category_map;
  std::string store;
  std::string report_dir;
  std::optional<Date> as_of;
  std::vector<SourceConfig> sources;
};

// --config, then $PRESSE_METRICS_CONFIG, then ./presse-metrics.json.
std::string ResolveConfigPath(const std::optional<std::string> &flag);

// Parses the JSON configuration. Throws ConfigError.
PipelineConfig LoadConfig(const std::string &path);

// Every input path must exist and every source must be valid. The store and
// the report directory are created by the commands that write them. Throws
// ConfigError.
void ValidateConfig(const PipelineConfig &config);

}  // namespace presse

#endif  // PRESSE_CONFIG_H_

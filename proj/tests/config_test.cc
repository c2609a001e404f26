#include "presse/config.h"

#include <cstdlib>
#include <filesystem>

#include "config_fixture.h"
#include "doctest.h"
#include "presse/errors.h"

namespace presse {
namespace {

namespace fs = std::filesystem;
using testing::FixtureConfig;
using testing::TempDir;

std::string WriteConfig(const TempDir &dir, const nlohmann::json &j,
                        const std::string &name = "presse-metrics.json") {
  return dir.Write(name, j.dump(2));
}

// Restores an environment variable on scope exit.
class EnvGuard {
 public:
  explicit EnvGuard(const char *name) : name_(name) {
    if (const char *v = std::getenv(name)) saved_ = v;
  }
  ~EnvGuard() {
    if (saved_) {
      setenv(name_, saved_->c_str(), 1);
    } else {
      unsetenv(name_);
    }
  }

 private:
  const char *name_;
  std::optional<std::string> saved_;
};

TEST_CASE("config path precedence") {
  EnvGuard guard(kConfigEnv);
  unsetenv(kConfigEnv);
  CHECK(ResolveConfigPath(std::nullopt) == kDefaultConfigFile);
  setenv(kConfigEnv, "/etc/from-env.json", 1);
  CHECK(ResolveConfigPath(std::nullopt) == "/etc/from-env.json");
  CHECK(ResolveConfigPath("flag.json") == "flag.json");
  setenv(kConfigEnv, "", 1);
  CHECK(ResolveConfigPath(std::nullopt) == kDefaultConfigFile);
}

TEST_CASE("relative paths resolve against the config file") {
  TempDir dir;
  auto j = FixtureConfig();
  j["report_dir"] = "../reports";
  const std::string path = WriteConfig(dir, j, "conf/presse.json");
  const PipelineConfig c = LoadConfig(path);
  CHECK(fs::path(c.store) == fs::weakly_canonical(dir.path() / "conf/var/store.ndjson"));
  CHECK(fs::path(c.report_dir) == fs::weakly_canonical(dir.path() / "reports"));
  CHECK(c.lexicons.names == testing::DataPath("lexicon/names.csv"));
  REQUIRE(c.as_of);
  CHECK(*c.as_of == Date{std::chrono::year{2021}, std::chrono::month{12},
                         std::chrono::day{23}});
  REQUIRE(c.sources.size() == 3);
  CHECK(c.sources[1].id == "lefigaro");
  CHECK(c.sources[1].selectors.author == "a.fig-author");
  CHECK(c.sources[0].mode == FetchMode::kLocalDirectory);
  CHECK(c.sources[0].delay_ms == 0);
  CHECK_NOTHROW(ValidateConfig(c));
  // Validation creates nothing.
  CHECK_FALSE(fs::exists(dir.path() / "conf/var"));
  CHECK_FALSE(fs::exists(dir.path() / "reports"));
}

TEST_CASE("the repository configuration validates") {
  const PipelineConfig c = LoadConfig(testing::DataPath("../presse-metrics.json"));
  CHECK_NOTHROW(ValidateConfig(c));
  CHECK(c.sources.size() == 3);
}

TEST_CASE("config violations") {
  TempDir dir;
  CHECK_THROWS_AS(LoadConfig(dir.File("absent.json")), ConfigError);
  CHECK_THROWS_AS(LoadConfig(dir.Write("bad.json", "{ not json")), ConfigError);
  CHECK_THROWS_AS(LoadConfig(dir.Write("array.json", "[]")), ConfigError);

  auto missing_key = FixtureConfig();
  missing_key.erase("store");
  CHECK_THROWS_AS(LoadConfig(WriteConfig(dir, missing_key)), ConfigError);

  auto bad_mode = FixtureConfig();
  bad_mode["sources"][0]["mode"] = "carrier_pigeon";
  CHECK_THROWS_AS(LoadConfig(WriteConfig(dir, bad_mode)), ConfigError);

  auto bad_date = FixtureConfig();
  bad_date["as_of"] = "23/12/2021";
  CHECK_THROWS_AS(LoadConfig(WriteConfig(dir, bad_date)), ConfigError);

  auto wrong_type = FixtureConfig();
  wrong_type["sources"][0]["delay_ms"] = "fast";
  CHECK_THROWS_AS(LoadConfig(WriteConfig(dir, wrong_type)), ConfigError);

  auto negative = FixtureConfig();
  negative["sources"][0]["delay_ms"] = -5;
  CHECK_THROWS_AS(ValidateConfig(LoadConfig(WriteConfig(dir, negative))), ConfigError);

  auto absent_lexicon = FixtureConfig();
  absent_lexicon["lexicons"]["names"] = "nowhere/names.csv";
  CHECK_THROWS_AS(ValidateConfig(LoadConfig(WriteConfig(dir, absent_lexicon))),
                  ConfigError);

  auto absent_input = FixtureConfig();
  absent_input["sources"][2]["input"] = "nowhere";
  CHECK_THROWS_AS(ValidateConfig(LoadConfig(WriteConfig(dir, absent_input))),
                  ConfigError);

  auto duplicate_id = FixtureConfig();
  duplicate_id["sources"][1]["id"] = "lemonde";
  CHECK_THROWS_AS(ValidateConfig(LoadConfig(WriteConfig(dir, duplicate_id))),
                  ConfigError);

  auto empty_id = FixtureConfig();
  empty_id["sources"][1]["id"] = "";
  CHECK_THROWS_AS(ValidateConfig(LoadConfig(WriteConfig(dir, empty_id))), ConfigError);
}

}  // namespace
}  // namespace presse

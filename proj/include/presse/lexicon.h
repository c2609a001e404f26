#ifndef PRESSE_LEXICON_H_
#define PRESSE_LEXICON_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "presse/gender.h"

namespace presse {

// A first name with civil-registry birth counts. masculinity is the share
// of children with that name registered as boys.
struct NameEntry {
  std::string name;
  uint64_t male_count = 0;
  uint64_t female_count = 0;
  double masculinity = 0.0;
};

struct RawNameCount {
  std::string name;
  uint64_t male_count = 0;
  uint64_t female_count = 0;
};

struct NameFilter {
  uint64_t min_occurrences = 100;
  size_t min_length = 4;  // in code points
};

using WordSet = std::set<std::string, std::less<>>;

// Unambiguous first names with masculinity scores. Immutable once built and
// safe to share across threads.
class NameLexicon {
 public:
  NameLexicon() = default;

  // Merges duplicate names (after normalization) by summing counts, then
  // keeps rows that pass the filter and are not blocklisted.
  static NameLexicon Build(const std::vector<RawNameCount> &rows,
                           const WordSet &blocklist,
                           const NameFilter &filter = {});

  // Lookup is case-insensitive and diacritic-sensitive.
  const NameEntry *Find(std::string_view token) const;
  std::optional<double> MasculinityOf(std::string_view token) const;
  bool IsBlocked(std::string_view token) const;

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, NameEntry, std::less<>> &entries() const {
    return entries_;
  }
  const WordSet &blocklist() const { return blocklist_; }

  // FNV-1a digest over the serialized entries and blocklist.
  uint64_t Digest() const;

 private:
  std::map<std::string, NameEntry, std::less<>> entries_;
  WordSet blocklist_;
};

// Reads a `name;male;female` table. Throws LoadError naming the line of the
// first malformed row.
std::vector<RawNameCount> ReadNameCounts(const std::string &path);

// One normalized word per line; blank lines and `#` comments are skipped.
WordSet ReadWordList(const std::string &path);

NameLexicon LoadNameLexicon(const std::string &counts_path,
                            const std::string &blocklist_path,
                            const NameFilter &filter = {});

using GenderMap = std::map<std::string, Gender, std::less<>>;

// Cue words used to resolve the gender of a quoted speaker.
struct GenderCueLexicons {
  GenderMap titles;
  GenderMap professions;
  GenderMap pronouns;
  // Secondary first-name dictionary, consulted after the name lexicon.
  GenderMap first_names;
  WordSet speech_verbs;
};

struct CuePaths {
  std::string titles;
  std::string professions;
  std::string pronouns;
  std::string speech_verbs;
  std::string first_names;  // optional, empty when unused
};

// Parses `word<TAB>F|M` lines.
GenderMap ReadGenderMap(const std::string &path);

GenderCueLexicons LoadGenderCues(const CuePaths &paths);

}  // namespace presse

#endif  // PRESSE_LEXICON_H_

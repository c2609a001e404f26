#include "presse/lexicon.h"

#include <charconv>
#include <fstream>
#include <utility>

#include "presse/errors.h"
#include "presse/unicode.h"

namespace presse {

namespace {

std::ifstream OpenOrThrow(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, 0, "cannot open file");
  return in;
}

bool ParseCount(std::string_view field, uint64_t *out) {
  field = Trim(field);
  if (field.empty()) return false;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), *out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

bool IsCommentOrBlank(std::string_view line) {
  line = Trim(line);
  return line.empty() || line.front() == '#';
}

void Mix(uint64_t *h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    *h ^= c;
    *h *= 1099511628211ULL;
  }
}

}  // namespace

NameLexicon NameLexicon::Build(const std::vector<RawNameCount> &rows,
                               const WordSet &blocklist,
                               const NameFilter &filter) {
  NameLexicon lexicon;
  for (const auto &word : blocklist) lexicon.blocklist_.insert(NormalizeWord(word));

  std::map<std::string, RawNameCount, std::less<>> merged;
  for (const auto &row : rows) {
    std::string key = NormalizeWord(Trim(row.name));
    if (key.empty()) continue;
    auto &slot = merged[key];
    slot.name = key;
    slot.male_count += row.male_count;
    slot.female_count += row.female_count;
  }

  for (auto &[key, row] : merged) {
    const uint64_t total = row.male_count + row.female_count;
    if (total < filter.min_occurrences || total == 0) continue;
    if (CodePointLength(key) < filter.min_length) continue;
    if (lexicon.blocklist_.count(key) > 0) continue;
    NameEntry entry;
    entry.name = key;
    entry.male_count = row.male_count;
    entry.female_count = row.female_count;
    entry.masculinity =
        static_cast<double>(row.male_count) / static_cast<double>(total);
    lexicon.entries_.emplace(key, std::move(entry));
  }
  return lexicon;
}

const NameEntry *NameLexicon::Find(std::string_view token) const {
  auto it = entries_.find(NormalizeWord(token));
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<double> NameLexicon::MasculinityOf(std::string_view token) const {
  const NameEntry *entry = Find(token);
  if (entry == nullptr) return std::nullopt;
  return entry->masculinity;
}

bool NameLexicon::IsBlocked(std::string_view token) const {
  return blocklist_.count(NormalizeWord(token)) > 0;
}

uint64_t NameLexicon::Digest() const {
  uint64_t h = 14695981039346656037ULL;
  for (const auto &[key, entry] : entries_) {
    Mix(&h, key);
    Mix(&h, ";" + std::to_string(entry.male_count) + ";" +
                std::to_string(entry.female_count) + "\n");
  }
  Mix(&h, "#blocklist\n");
  for (const auto &word : blocklist_) {
    Mix(&h, word);
    Mix(&h, "\n");
  }
  return h;
}

std::vector<RawNameCount> ReadNameCounts(const std::string &path) {
  std::ifstream in = OpenOrThrow(path);
  std::vector<RawNameCount> rows;
  std::string line;
  int line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (IsCommentOrBlank(view)) continue;
    if (std::exchange(first_row, false) &&
        NormalizeWord(view) == "name;male;female") {
      continue;
    }

    std::vector<std::string_view> fields;
    size_t pos = 0;
    while (true) {
      size_t semi = view.find(';', pos);
      fields.push_back(view.substr(pos, semi - pos));
      if (semi == std::string_view::npos) break;
      pos = semi + 1;
    }
    if (fields.size() != 3) {
      throw LoadError(path, line_no, "expected 3 fields `name;male;female`");
    }
    RawNameCount row;
    row.name = std::string(Trim(fields[0]));
    if (row.name.empty()) throw LoadError(path, line_no, "empty name");
    if (!ParseCount(fields[1], &row.male_count) ||
        !ParseCount(fields[2], &row.female_count)) {
      throw LoadError(path, line_no, "counts must be non-negative integers");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

WordSet ReadWordList(const std::string &path) {
  std::ifstream in = OpenOrThrow(path);
  WordSet words;
  std::string line;
  while (std::getline(in, line)) {
    if (IsCommentOrBlank(line)) continue;
    words.insert(NormalizeWord(Trim(line)));
  }
  return words;
}

NameLexicon LoadNameLexicon(const std::string &counts_path,
                            const std::string &blocklist_path,
                            const NameFilter &filter) {
  return NameLexicon::Build(ReadNameCounts(counts_path),
                            ReadWordList(blocklist_path), filter);
}

GenderMap ReadGenderMap(const std::string &path) {
  std::ifstream in = OpenOrThrow(path);
  GenderMap map;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsCommentOrBlank(line)) continue;
    std::string_view view = Trim(line);
    size_t tab = view.find('\t');
    if (tab == std::string_view::npos) {
      throw LoadError(path, line_no, "expected `word<TAB>F|M`");
    }
    std::string word = NormalizeWord(Trim(view.substr(0, tab)));
    auto gender = ParseBinaryGender(Trim(view.substr(tab + 1)));
    if (!gender) {
      throw LoadError(path, line_no,
                      "unknown gender label `" +
                          std::string(Trim(view.substr(tab + 1))) + "`");
    }
    if (word.empty()) throw LoadError(path, line_no, "empty word");
    map[word] = *gender;
  }
  return map;
}

GenderCueLexicons LoadGenderCues(const CuePaths &paths) {
  GenderCueLexicons cues;
  cues.titles = ReadGenderMap(paths.titles);
  cues.professions = ReadGenderMap(paths.professions);
  cues.pronouns = ReadGenderMap(paths.pronouns);
  if (!paths.first_names.empty()) {
    cues.first_names = ReadGenderMap(paths.first_names);
  }
  cues.speech_verbs = ReadWordList(paths.speech_verbs);
  if (cues.speech_verbs.empty()) {
    throw LoadError(paths.speech_verbs, 0, "speech verb list is empty");
  }
  return cues;
}

}  // namespace presse

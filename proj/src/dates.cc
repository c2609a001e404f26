#include "presse/dates.h"

#include <array>
#include <charconv>
#include <cstdio>
#include <vector>

#include "presse/unicode.h"

namespace presse {

namespace {

using namespace std::chrono;

std::optional<int> ParseInt(std::string_view s) {
  int value = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::optional<Date> Make(int y, int m, int d) {
  Date date{year{y}, month{static_cast<unsigned>(m)},
            day{static_cast<unsigned>(d)}};
  if (!date.ok() || y < 1900 || y > 2200) return std::nullopt;
  return date;
}

struct MonthName {
  std::string_view name;
  int month;
};

constexpr std::array<MonthName, 30> kMonths = {{
    {"janvier", 1},  {"janv", 1},     {"février", 2},  {"fevrier", 2},
    {"févr", 2},     {"fevr", 2},     {"mars", 3},     {"avril", 4},
    {"avr", 4},      {"mai", 5},      {"juin", 6},     {"juillet", 7},
    {"juil", 7},     {"août", 8},     {"aout", 8},     {"septembre", 9},
    {"sept", 9},     {"octobre", 10}, {"oct", 10},     {"novembre", 11},
    {"nov", 11},     {"décembre", 12}, {"decembre", 12}, {"déc", 12},
    {"dec", 12},     {"january", 1},  {"february", 2}, {"march", 3},
    {"april", 4},    {"december", 12},
}};

std::optional<int> MonthFromName(std::string word) {
  while (!word.empty() && word.back() == '.') word.pop_back();
  for (const auto &m : kMonths) {
    if (m.name == word) return m.month;
  }
  return std::nullopt;
}

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t' || c == '\n') {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

}  // namespace

std::optional<Date> ParseIsoDate(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    return std::nullopt;
  }
  auto y = ParseInt(text.substr(0, 4));
  auto m = ParseInt(text.substr(5, 2));
  auto d = ParseInt(text.substr(8, 2));
  if (!y || !m || !d) return std::nullopt;
  return Make(*y, *m, *d);
}

std::optional<Date> ParseDate(std::string_view raw) {
  std::string_view text = Trim(raw);
  if (text.size() >= 10) {
    if (auto iso = ParseIsoDate(text.substr(0, 10))) {
      if (text.size() == 10 || text[10] == 'T' || text[10] == ' ') return iso;
    }
  }
  // dd/mm/yyyy or dd-mm-yyyy or dd.mm.yyyy
  for (char sep : {'/', '-', '.'}) {
    size_t a = text.find(sep);
    size_t b = a == std::string_view::npos ? a : text.find(sep, a + 1);
    if (a == std::string_view::npos || b == std::string_view::npos) continue;
    size_t end = text.find_first_of(" T", b);
    auto d = ParseInt(text.substr(0, a));
    auto m = ParseInt(text.substr(a + 1, b - a - 1));
    auto y = ParseInt(text.substr(b + 1, end == std::string_view::npos
                                             ? std::string_view::npos
                                             : end - b - 1));
    if (d && m && y) {
      if (*y < 100) *y += 2000;
      return Make(*y, *m, *d);
    }
  }
  // "[jour] 23 décembre 2021 [à 10h]"
  std::vector<std::string> words = Words(NormalizeWord(text));
  for (size_t i = 0; i + 2 < words.size(); ++i) {
    std::string day_word = words[i];
    if (day_word == "1er") day_word = "1";
    auto d = ParseInt(day_word);
    auto m = MonthFromName(words[i + 1]);
    auto y = ParseInt(words[i + 2]);
    if (d && m && y) return Make(*y, *m, *d);
  }
  return std::nullopt;
}

std::string FormatDate(Date d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
  return buf;
}

Date AddDays(Date d, int days) {
  return Date{sys_days{d} + std::chrono::days{days}};
}

Date WeekStart(Date d) {
  const sys_days sd{d};
  const unsigned iso = weekday{sd}.iso_encoding();  // Monday = 1
  return Date{sd - std::chrono::days{iso - 1}};
}

Date Today() {
  return Date{floor<std::chrono::days>(system_clock::now())};
}

}  // namespace presse

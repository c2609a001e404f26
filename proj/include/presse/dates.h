#ifndef PRESSE_DATES_H_
#define PRESSE_DATES_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace presse {

using Date = std::chrono::year_month_day;

// Inclusive calendar-date range.
struct DateRange {
  Date first;
  Date last;

  bool Contains(Date d) const { return d >= first && d <= last; }
  bool operator==(const DateRange &) const = default;
};

// Strict `YYYY-MM-DD`.
std::optional<Date> ParseIsoDate(std::string_view text);

// ISO-8601 dates or datetimes ("2021-12-23T08:15:00+01:00") and the common
// French forms: "23/12/2021", "23 décembre 2021", "jeudi 23 déc. 2021",
// "1er mars 2021".
std::optional<Date> ParseDate(std::string_view text);

std::string FormatDate(Date d);

Date AddDays(Date d, int days);

// Monday of the ISO week containing d.
Date WeekStart(Date d);

Date Today();

}  // namespace presse

#endif  // PRESSE_DATES_H_

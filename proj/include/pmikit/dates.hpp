#pragma once

#include <chrono>
#include <cstdio>
#include <string>
#include <string_view>

#include "pmikit/errors.hpp"

namespace pmikit {

// Day-resolution calendar date. std::chrono::sys_days gives value semantics,
// total ordering, and day arithmetic via the <chrono> calendar.
using Date = std::chrono::sys_days;

inline Date make_date(int year, unsigned month, unsigned day) {
    std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                    std::chrono::day{day}};
    if (!ymd.ok()) {
        throw ParseError("invalid calendar date: " + std::to_string(year) + "-" +
                         std::to_string(month) + "-" + std::to_string(day));
    }
    return Date{ymd};
}

// Parses strict ISO-8601 "YYYY-MM-DD".
inline Date parse_date(std::string_view text) {
    int y = 0;
    unsigned m = 0, d = 0;
    char trailing = 0;
    std::string s(text);
    if (std::sscanf(s.c_str(), "%d-%u-%u%c", &y, &m, &d, &trailing) != 3) {
        throw ParseError("expected ISO-8601 date (YYYY-MM-DD), got '" + s + "'");
    }
    return make_date(y, m, d);
}

inline std::string format_date(Date date) {
    std::chrono::year_month_day ymd{date};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()), unsigned(ymd.month()),
                  unsigned(ymd.day()));
    return buf;
}

// Signed whole days from `from` to `to`.
inline long days_between(Date from, Date to) {
    return (to - from).count();
}

inline unsigned month_of(Date date) {
    return unsigned(std::chrono::year_month_day{date}.month());
}

// 1-based day of year.
inline int day_of_year(Date date) {
    std::chrono::year_month_day ymd{date};
    Date jan1 = Date{std::chrono::year_month_day{ymd.year(), std::chrono::month{1},
                                                 std::chrono::day{1}}};
    return int(days_between(jan1, date)) + 1;
}

}  // namespace pmikit

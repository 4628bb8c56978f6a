#pragma once

#include <compare>
#include <string>
#include <vector>

namespace lppl {

// Calendar date. Trading-day arithmetic in this library is done on integer
// ordinals (positions in a PriceSeries); Date is only parsed, compared and
// formatted, plus converted to a civil serial day for weekday math.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;

    // Days since 1970-01-01 (proleptic Gregorian).
    long serial() const;
    // Monday=0 .. Sunday=6.
    int weekday() const;
    bool is_weekend() const { return weekday() >= 5; }

    std::string to_string() const;  // ISO-8601 YYYY-MM-DD

    static Date from_serial(long days);
    // Strict ISO-8601 parse; throws std::invalid_argument on malformed input.
    static Date parse(const std::string& text);
};

// Next calendar day, skipping Saturdays and Sundays.
Date next_weekday(Date d);

// n consecutive weekdays starting at `start` (moved forward to a weekday
// first if it falls on a weekend).
std::vector<Date> weekday_calendar(Date start, int n);

}  // namespace lppl

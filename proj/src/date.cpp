#include "lppl/date.hpp"

#include <cstdio>
#include <stdexcept>

namespace lppl {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

int days_in_month(int y, int m) {
    static const int table[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2) {
        const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
        return leap ? 29 : 28;
    }
    return table[m - 1];
}

}  // namespace

// Howard Hinnant's days_from_civil / civil_from_days (public domain algorithm).
long Date::serial() const {
    int y = year;
    const int m = month, d = day;
    y -= m <= 2;
    const long era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<long>(doe) - 719468;
}

Date Date::from_serial(long days) {
    days += 719468;
    const long era = (days >= 0 ? days : days - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(days - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const long y = static_cast<long>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

int Date::weekday() const {
    const long s = serial();
    // 1970-01-01 was a Thursday (3 in Monday=0 convention).
    return static_cast<int>(((s % 7) + 7 + 3) % 7);
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

Date Date::parse(const std::string& text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        throw std::invalid_argument("bad date '" + text + "': expected YYYY-MM-DD");
    }
    for (int i : {0, 1, 2, 3, 5, 6, 8, 9}) {
        if (!is_digit(text[i])) {
            throw std::invalid_argument("bad date '" + text + "': expected YYYY-MM-DD");
        }
    }
    const int y = std::stoi(text.substr(0, 4));
    const int m = std::stoi(text.substr(5, 2));
    const int d = std::stoi(text.substr(8, 2));
    if (m < 1 || m > 12 || d < 1 || d > days_in_month(y, m)) {
        throw std::invalid_argument("bad date '" + text + "': no such calendar day");
    }
    return Date{y, m, d};
}

Date next_weekday(Date d) {
    Date n = Date::from_serial(d.serial() + 1);
    while (n.is_weekend()) n = Date::from_serial(n.serial() + 1);
    return n;
}

std::vector<Date> weekday_calendar(Date start, int n) {
    std::vector<Date> out;
    out.reserve(static_cast<std::size_t>(n > 0 ? n : 0));
    Date d = start;
    while (d.is_weekend()) d = Date::from_serial(d.serial() + 1);
    for (int i = 0; i < n; ++i) {
        out.push_back(d);
        d = next_weekday(d);
    }
    return out;
}

}  // namespace lppl

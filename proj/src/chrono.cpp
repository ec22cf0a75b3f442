#include "javacal/chrono.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

#include "javacal/types.hpp"

namespace javacal {

namespace {

namespace chr = std::chrono;

chr::year_month_day to_ymd(const GregorianDate& date) {
    return chr::year{date.year} / date.month / date.day;
}

constexpr chr::sys_days epoch_days = chr::sys_days{chr::year{1633} / 7 / 8};

}  // namespace

bool is_valid_gregorian(const GregorianDate& date) {
    return to_ymd(date).ok() && date >= gregorian_min;
}

DayNumber day_number_from_gregorian(const GregorianDate& date) {
    auto ymd = to_ymd(date);
    if (!ymd.ok()) {
        throw domain_error("invalid Gregorian date " + to_iso(date));
    }
    if (date < gregorian_min) {
        throw domain_error("date " + to_iso(date) +
                           " precedes the Gregorian reform (1582-10-15)");
    }
    return (chr::sys_days{ymd} - epoch_days).count();
}

GregorianDate gregorian_from_day_number(DayNumber dn) {
    if (dn < day_number_min) {
        throw domain_error("day number " + std::to_string(dn) +
                           " precedes the Gregorian reform (1582-10-15)");
    }
    chr::year_month_day ymd{epoch_days + chr::days{dn}};
    return GregorianDate{int(ymd.year()), int(unsigned(ymd.month())),
                         int(unsigned(ymd.day()))};
}

std::string to_iso(const GregorianDate& date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", date.year, date.month, date.day);
    return buf;
}

GregorianDate gregorian_from_iso(std::string_view text) {
    auto parse_int = [](std::string_view part, int& out) {
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
        return ec == std::errc{} && ptr == part.data() + part.size();
    };
    GregorianDate date;
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        !parse_int(text.substr(0, 4), date.year) ||
        !parse_int(text.substr(5, 2), date.month) ||
        !parse_int(text.substr(8, 2), date.day)) {
        throw domain_error("expected an ISO date (YYYY-MM-DD), got '" +
                           std::string(text) + "'");
    }
    return date;
}

int weekday_index(DayNumber dn) {
    // Day 0 is a Friday; Saturday indexes as 0.
    return int(floor_mod(dn + 6, 7));
}

int pasaran_index(DayNumber dn) {
    // Day 0 is Lêgi (index 3).
    return int(floor_mod(dn + 3, 5));
}

Weton weton_of(DayNumber dn) {
    return Weton{weekday_index(dn), pasaran_index(dn)};
}

int wuku_index(DayNumber dn, int anchor) {
    if (anchor < 0 || anchor >= wuku_cycle_days) {
        throw domain_error("wuku anchor must be in 0..209, got " + std::to_string(anchor));
    }
    return int(floor_mod(dn + anchor, wuku_cycle_days) / 7);
}

int paringkelan_index(DayNumber dn, int anchor) {
    if (anchor < 0 || anchor >= 6) {
        throw domain_error("paringkelan anchor must be in 0..5, got " + std::to_string(anchor));
    }
    return int(floor_mod(dn + anchor, 6));
}

}  // namespace javacal

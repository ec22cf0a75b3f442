#include "javacal/congruence.hpp"

namespace javacal {

namespace {

// Minimal validity check, independent of chrono.cpp: month lengths with the
// Gregorian leap rule (every 4th year, centuries only when divisible by 400).
bool gregorian_leap(int year) {
    return year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
}

int days_in_month(int year, int month) {
    static constexpr int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && gregorian_leap(year)) return 29;
    return lengths[month - 1];
}

}  // namespace

CivilParts roll_civil_parts(const GregorianDate& date) {
    if (date.month < 1 || date.month > 12 || date.day < 1 ||
        date.day > days_in_month(date.year, date.month)) {
        throw domain_error("invalid Gregorian date for congruence");
    }
    constexpr GregorianDate reform{1582, 10, 15};
    if (date < reform) {
        throw domain_error("congruence formulas are defined from 1582-10-15 on");
    }
    CivilParts parts;
    parts.k = date.day;
    int rolled_year = date.year;
    if (date.month <= 2) {
        parts.m = date.month + 12;
        rolled_year -= 1;
    } else {
        parts.m = date.month;
    }
    parts.c = rolled_year / 100;
    parts.y = rolled_year % 100;
    return parts;
}

int zeller_weekday(const CivilParts& p) {
    long long w = p.k + (13 * (p.m + 1)) / 5 + p.y + p.y / 4 + p.c / 4 - 2LL * p.c;
    return int(floor_mod(w, 7));
}

int pasaran_congruence(const CivilParts& p) {
    long long w = p.k + (3 * (p.m + 1)) / 5 + p.y / 4 + 4LL * p.c - 4LL * (p.c / 4);
    return int(floor_mod(w, 5));
}

WetonCongruence weton_congruence(const CivilParts& p) {
    WetonCongruence result;
    result.offset = p.k + (153 * (p.m + 1)) / 5 + 15LL * p.y + p.y / 4 +
                    19LL * p.c + p.c / 4;
    result.weekday = int(floor_mod(result.offset, 7));
    result.pasaran = int(floor_mod(result.offset, 5));
    return result;
}

int zeller_weekday(const GregorianDate& date) {
    return zeller_weekday(roll_civil_parts(date));
}

int pasaran_congruence(const GregorianDate& date) {
    return pasaran_congruence(roll_civil_parts(date));
}

WetonCongruence weton_congruence(const GregorianDate& date) {
    return weton_congruence(roll_civil_parts(date));
}

}  // namespace javacal

// Day-number arithmetic and the perpetual cycles driven directly by it:
// Gregorian conversion, weekday, pasaran, weton, wuku, paringkelan.
//
// Everything here is a pure function of the day number.  The month/year
// structure of the Javanese calendar (which needs court schedule data) lives
// in engine.hpp; this header has no dependency on it, so the cycle functions
// keep working beyond the end of the decided kurup chronology.

#pragma once

#include "javacal/types.hpp"

namespace javacal {

// Day 0 of the Javanese era: 1 Sura Alip 1555 AJ.
inline constexpr GregorianDate epoch_gregorian{1633, 7, 8};

// First valid Gregorian date (the 1582 calendar reform) and its day number.
inline constexpr GregorianDate gregorian_min{1582, 10, 15};
inline constexpr DayNumber day_number_min = -18529;

// Default pawukon anchor, calibrated so that the week containing
// 1 December 2020 (Sunday 29 Nov – Saturday 5 Dec) is wuku Wuye.  This also
// makes the three wuku-bound noble days land on their stated weton (Sêtu
// Kliwon in Kuningan, Selasa Kliwon in Dukut, Jemuwah Kliwon in Watugunung).
inline constexpr int default_wuku_anchor = 194;

// Pawukon weeks run Ngahad (Sunday) through Sêtu (Saturday); with the default
// anchor, day 0 falls in wuku Kulawu.
inline constexpr int wuku_cycle_days = 210;

// True for valid Gregorian calendar dates on or after 15 October 1582.
bool is_valid_gregorian(const GregorianDate& date);

// Conversion between Gregorian dates and day numbers.  Both directions throw
// domain_error for dates (or day numbers) before 15 October 1582 and for
// malformed dates.
DayNumber day_number_from_gregorian(const GregorianDate& date);
GregorianDate gregorian_from_day_number(DayNumber dn);

// "1936-03-24" <-> GregorianDate.  parse throws domain_error on malformed
// input but does not range-check; pair it with is_valid_gregorian or the
// conversion functions.
std::string to_iso(const GregorianDate& date);
GregorianDate gregorian_from_iso(std::string_view text);

// 7-day cycle, Saturday=0 .. Friday=6 (day 0 is Jemuwah, index 6).
int weekday_index(DayNumber dn);

// 5-day cycle, Pon=0 .. Pahing=4 (day 0 is Lêgi, index 3).
int pasaran_index(DayNumber dn);

// The combined 35-day cycle.
Weton weton_of(DayNumber dn);

// Wuku index 0..29 (Sinta=0 .. Watugunung=29) under the given anchor.
// The wuku is constant across each Sunday-aligned week.
int wuku_index(DayNumber dn, int anchor = default_wuku_anchor);

// 6-day paringkelan index 0..5 (Tungle=0 .. Mawulu=5) under a user-supplied
// anchor; there is no default.
int paringkelan_index(DayNumber dn, int anchor);

}  // namespace javacal

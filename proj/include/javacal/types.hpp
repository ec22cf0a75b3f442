// Core domain types shared by every module of the library.
//
// Day numbers count whole days from the Javanese epoch, 8 July 1633 (Gregorian),
// which is day 0 = 1 Sura, taun Alip, 1555 AJ.  All cycle arithmetic in the
// library reduces a day number modulo some small cycle length, so the only
// requirement on the representation is that it holds a signed day count with
// room to spare; 64 bits is plenty.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace javacal {

// Whole days since 8 July 1633 (Gregorian).  Negative values are valid for
// cycle queries (weekday/pasaran are defined back to 15 October 1582), but the
// Javanese month/year structure only exists for day numbers >= 0.
using DayNumber = std::int64_t;

// A proleptic-free Gregorian calendar date.  The library refuses dates before
// the reform (15 October 1582); the Julian calendar is out of scope.
struct GregorianDate {
    int year  = 0;
    int month = 0;  // 1..12
    int day   = 0;  // 1..31

    friend auto operator<=>(const GregorianDate&, const GregorianDate&) = default;
};

// The two royal court chronologies supported by the schedule data.
enum class Court { surakarta, yogyakarta };

// A weton is the pairing of the 7-day week with the 5-day pasaran market week.
// Index conventions follow the congruence formulas:
//   dinapitu: 0=Sêtu(Sat) 1=Ngahad(Sun) 2=Sênèn(Mon) 3=Selasa(Tue)
//             4=Rêbo(Wed) 5=Kêmis(Thu) 6=Jemuwah(Fri)
//   pasaran:  0=Pon 1=Wage 2=Kliwon 3=Lêgi 4=Pahing
struct Weton {
    int dinapitu = 0;  // 0..6, Saturday-based
    int pasaran  = 0;  // 0..4, Pon-based

    friend bool operator==(const Weton&, const Weton&) = default;
};

// Anchors for the perpetual cycles that are not fixed by the court chronology.
//
// The wuku anchor defaults to the calibrated value below (the week containing
// 1 December 2020 is wuku Wuye); it can be overridden or explicitly unset.
// When unset, wuku and every wuku-conditioned computation is omitted.
//
// The paringkelan anchor has no reliable published fix, so it defaults to
// unset and the 6-day cycle is only reported when the user supplies one.
struct CycleAnchors {
    std::optional<int> wuku_anchor;         // 0..209 when set
    std::optional<int> paringkelan_anchor;  // 0..5 when set

    friend bool operator==(const CycleAnchors&, const CycleAnchors&) = default;
};

// Raised for arguments outside a function's documented domain: malformed or
// pre-reform Gregorian dates, nonexistent Javanese dates, out-of-range indexes.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a schedule data file cannot be parsed or fails validation.
class schedule_error : public std::runtime_error {
public:
    explicit schedule_error(const std::string& what) : std::runtime_error(what) {}
};

// Positive remainder, also for negative dividends: floor_mod(-1, 7) == 6.
constexpr std::int64_t floor_mod(std::int64_t value, std::int64_t modulus) {
    std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

const char* to_string(Court court);
std::optional<Court> court_from_string(std::string_view name);

}  // namespace javacal

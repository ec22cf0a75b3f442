// Closed-form weekday/pasaran/weton congruences over the Gregorian calendar.
//
// These formulas compute the cycles directly from a (day, month, century,
// year-of-century) split with January and February rolled into months 13/14
// of the preceding year — no day count, no tables.  They are deliberately
// kept independent of the day-number engine in chrono.hpp so the two paths
// can be checked against each other; the library's tests do exactly that over
// every day from 1633 to 2100.
//
// A note on the combined formula: a published variant of it carries a trailing
// "+5" constant and omits the 15·Y term.  Omitting 15·Y while adding 5 yields
// the correct result precisely when 15·Y ≡ 5 (mod 35) — e.g. Y = 33, which
// makes single-date spot checks misleading.  The form shipped here keeps 15·Y
// and has no additive constant; it reduces term-by-term to the separate
// weekday congruence (mod 7: 153 = 13 + 140, 15 ≡ 1, 19 ≡ −2) and pasaran
// congruence (mod 5: ⌊153(m+1)/5⌋ = ⌊3(m+1)/5⌋ + 30(m+1), 15 ≡ 0, 19 ≡ 4,
// and +⌊C/4⌋ ≡ −4⌊C/4⌋).

#pragma once

#include "javacal/types.hpp"

namespace javacal {

// A Gregorian date with January/February counted as months 13/14 of the
// previous year, split into century and year-of-century:
//   15 Jan 1900 -> {k=15, m=13, c=18, y=99}.
struct CivilParts {
    int k = 0;  // day of month, 1..31
    int m = 0;  // rolled month, 3..14
    int c = 0;  // century, N / 100 where N is the rolled year
    int y = 0;  // year of century, N % 100
};

// Result of the combined congruence: the 35-day offset and its two residues.
struct WetonCongruence {
    long long offset = 0;  // w; only its residues mod 7 and mod 5 matter
    int weekday = 0;       // w mod 7, Saturday=0
    int pasaran = 0;       // w mod 5, Pon=0
};

// Performs the January/February roll.  Throws domain_error for dates before
// 15 October 1582 or malformed dates.
CivilParts roll_civil_parts(const GregorianDate& date);

// Weekday congruence (Zeller), Saturday=0 .. Friday=6:
//   W ≡ k + ⌊13(m+1)/5⌋ + y + ⌊y/4⌋ + ⌊c/4⌋ − 2c  (mod 7)
int zeller_weekday(const CivilParts& parts);

// Pasaran congruence, Pon=0 .. Pahing=4:
//   P ≡ k + ⌊3(m+1)/5⌋ + ⌊y/4⌋ + 4c − 4⌊c/4⌋  (mod 5)
int pasaran_congruence(const CivilParts& parts);

// Combined congruence:
//   w = k + ⌊153(m+1)/5⌋ + 15y + ⌊y/4⌋ + 19c + ⌊c/4⌋
// with weekday = w mod 7 and pasaran = w mod 5.
WetonCongruence weton_congruence(const CivilParts& parts);

// Convenience overloads that roll the date first.
int zeller_weekday(const GregorianDate& date);
int pasaran_congruence(const GregorianDate& date);
WetonCongruence weton_congruence(const GregorianDate& date);

}  // namespace javacal

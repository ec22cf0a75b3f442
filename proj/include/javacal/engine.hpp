// The full Javanese calendar: day number <-> (dina, wulan, taun) under a
// court schedule, assembled day records, noble-day evaluation, and weton
// recurrence.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "javacal/chrono.hpp"
#include "javacal/schedule.hpp"
#include "javacal/types.hpp"

namespace javacal {

// A date in the Javanese lunar calendar under one court's chronology.
struct JavaneseDate {
    int dina     = 0;  // day of wulan, 1..30
    int wulan_no = 0;  // 1..12
    int taun_aj  = 0;  // Anno Javanico year
    int kurup_ordinal = 0;
    std::string kurup_name;
    Court court = Court::surakarta;

    friend bool operator==(const JavaneseDate&, const JavaneseDate&) = default;
};

// Name accessors for a JavaneseDate (all derived from the indexes).
std::string_view wulan_name(const JavaneseDate& jd);
std::string_view taun_name(const JavaneseDate& jd);
std::string_view windu_name(const JavaneseDate& jd);
std::string_view lambang_name(const JavaneseDate& jd);

// Day number -> Javanese date.  Throws domain_error for dn < 0 ("before the
// epoch") or beyond the schedule's coverage ("kurup not yet decided").
JavaneseDate javanese_from_day_number(DayNumber dn, const CourtSchedule& schedule);

// (taun, wulan, dina) -> day number.  Throws domain_error for a taun outside
// coverage, a wulan outside 1..12, or a dina exceeding the wulan's length
// (the message names the wulan's actual length).
DayNumber day_number_from_javanese(int taun_aj, int wulan_no, int dina,
                                   const CourtSchedule& schedule);

// Everything the library can say about one day.  Optional fields are absent
// — never defaulted — when their cycle is unanchored or the day is outside
// schedule coverage; warnings say why.
struct FullDayRecord {
    GregorianDate gregorian;
    DayNumber day_number = 0;
    Weton weton;
    std::optional<int> wuku;         // index 0..29
    std::optional<int> paringkelan;  // index 0..5
    std::optional<JavaneseDate> javanese;
    std::vector<std::string> dina_mulya;  // names of matching noble-day rules
    std::vector<std::string> warnings;

    bool partial() const { return !javanese.has_value(); }
};

// Assembles the record for a Gregorian date (>= the epoch; earlier dates
// throw domain_error).  Days beyond schedule coverage yield a partial record
// with a warning rather than an error.  Anchors default to the schedule's.
FullDayRecord full_record(const GregorianDate& date, const CourtSchedule& schedule);
FullDayRecord full_record(const GregorianDate& date, const CourtSchedule& schedule,
                          const CycleAnchors& anchors);

// Evaluates noble-day rules against an assembled record.  Rules whose
// conditions cannot be checked (wuku rules without a wuku, taun/wulan/dina
// rules on a partial record) are skipped; *skipped_any is set when that
// happens so callers can attach a warning.
std::vector<std::string> dina_mulya_of(const FullDayRecord& record,
                                       std::span<const DinaMulyaRule> rules,
                                       bool* skipped_any = nullptr);

// The first `count` day numbers after `from` (strictly) with the target
// weton.  The first match is at most 35 days out; later ones stride by 35.
std::vector<DayNumber> next_weton(DayNumber from, Weton target, int count);

// All days of one taun matching a weton / a noble-day rule.
std::vector<DayNumber> occurrences_in_taun(Weton target, int taun_aj,
                                           const CourtSchedule& schedule);
std::vector<DayNumber> occurrences_in_taun(const DinaMulyaRule& rule, int taun_aj,
                                           const CourtSchedule& schedule,
                                           const CycleAnchors& anchors);

}  // namespace javacal

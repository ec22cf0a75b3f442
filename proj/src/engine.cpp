#include "javacal/engine.hpp"

#include <algorithm>

#include "javacal/names.hpp"

namespace javacal {

std::string_view wulan_name(const JavaneseDate& jd) {
    return names::wulan[std::size_t(jd.wulan_no - 1)];
}

std::string_view taun_name(const JavaneseDate& jd) {
    return names::taun[std::size_t(taun_name_index(jd.taun_aj))];
}

std::string_view windu_name(const JavaneseDate& jd) {
    return names::windu[std::size_t(windu_index(jd.taun_aj))];
}

std::string_view lambang_name(const JavaneseDate& jd) {
    return names::lambang[std::size_t(lambang_index(jd.taun_aj))];
}

JavaneseDate javanese_from_day_number(DayNumber dn, const CourtSchedule& schedule) {
    const auto& month = schedule.month_at(dn);  // throws outside coverage
    const KurupRecord& kurup = schedule.kurup_of_taun(month.taun_aj);
    JavaneseDate jd;
    jd.dina = int(dn - month.start) + 1;
    jd.wulan_no = month.wulan_no;
    jd.taun_aj = month.taun_aj;
    jd.kurup_ordinal = kurup.ordinal;
    jd.kurup_name = kurup.name;
    jd.court = schedule.court();
    return jd;
}

DayNumber day_number_from_javanese(int taun_aj, int wulan_no, int dina,
                                   const CourtSchedule& schedule) {
    DayNumber start = schedule.wulan_start(taun_aj, wulan_no);  // validates taun/wulan
    int length = schedule.wulan_length(taun_aj, wulan_no);
    if (dina < 1 || dina > length) {
        throw domain_error(std::string(names::wulan[std::size_t(wulan_no - 1)]) + " " +
                           std::to_string(taun_aj) + " has " + std::to_string(length) +
                           " days");
    }
    return start + dina - 1;
}

std::vector<std::string> dina_mulya_of(const FullDayRecord& record,
                                       std::span<const DinaMulyaRule> rules,
                                       bool* skipped_any) {
    if (skipped_any) *skipped_any = false;
    std::vector<std::string> matches;
    for (const auto& rule : rules) {
        if ((rule.needs_wuku() && !record.wuku) ||
            (rule.needs_javanese() && !record.javanese)) {
            if (skipped_any) *skipped_any = true;
            continue;
        }
        if (rule.weton && !(record.weton == *rule.weton)) continue;
        if (rule.wuku && *record.wuku != *rule.wuku) continue;
        if (rule.dina && record.javanese->dina != *rule.dina) continue;
        if (rule.wulan_no && record.javanese->wulan_no != *rule.wulan_no) continue;
        if (rule.taun_name_idx &&
            taun_name_index(record.javanese->taun_aj) != *rule.taun_name_idx) {
            continue;
        }
        matches.push_back(rule.name);
    }
    return matches;
}

FullDayRecord full_record(const GregorianDate& date, const CourtSchedule& schedule) {
    return full_record(date, schedule, schedule.anchors());
}

FullDayRecord full_record(const GregorianDate& date, const CourtSchedule& schedule,
                          const CycleAnchors& anchors) {
    FullDayRecord record;
    record.day_number = day_number_from_gregorian(date);
    if (record.day_number < 0) {
        throw domain_error("date " + to_iso(date) +
                           " precedes the Javanese epoch (1633-07-08)");
    }
    record.gregorian = date;
    record.weton = weton_of(record.day_number);
    if (anchors.wuku_anchor) {
        record.wuku = wuku_index(record.day_number, *anchors.wuku_anchor);
    } else {
        record.warnings.push_back(
            "wuku anchor not configured; wuku and wuku-bound noble days omitted");
    }
    if (anchors.paringkelan_anchor) {
        record.paringkelan =
            paringkelan_index(record.day_number, *anchors.paringkelan_anchor);
    }
    if (schedule.covers_day(record.day_number)) {
        record.javanese = javanese_from_day_number(record.day_number, schedule);
    } else {
        record.warnings.push_back(
            "date is beyond the decided kurup chronology (after " +
            to_iso(gregorian_from_day_number(schedule.coverage_end_day())) +
            "); wulan, taun and kurup are undecided");
    }

    bool skipped = false;
    record.dina_mulya = dina_mulya_of(record, schedule.mulya_rules(), &skipped);
    if (skipped) {
        record.warnings.push_back(
            "some noble-day rules could not be evaluated for this day");
    }
    return record;
}

std::vector<DayNumber> next_weton(DayNumber from, Weton target, int count) {
    if (count < 0) throw domain_error("occurrence count must be >= 0");
    std::vector<DayNumber> result;
    result.reserve(std::size_t(count));
    if (count == 0) return result;
    // The 35-day combined cycle guarantees a match within (from, from + 35].
    DayNumber first = from + 1;
    while (!(weton_of(first) == target)) ++first;
    for (int i = 0; i < count; ++i) result.push_back(first + 35LL * i);
    return result;
}

std::vector<DayNumber> occurrences_in_taun(Weton target, int taun_aj,
                                           const CourtSchedule& schedule) {
    DayNumber start = schedule.taun_start(taun_aj);
    DayNumber end = start + schedule.taun_length(taun_aj);  // exclusive
    std::vector<DayNumber> result;
    DayNumber dn = start;
    while (dn < end && !(weton_of(dn) == target)) ++dn;
    for (; dn < end; dn += 35) result.push_back(dn);
    return result;
}

std::vector<DayNumber> occurrences_in_taun(const DinaMulyaRule& rule, int taun_aj,
                                           const CourtSchedule& schedule,
                                           const CycleAnchors& anchors) {
    if (rule.needs_wuku() && !anchors.wuku_anchor) {
        throw domain_error("noble-day rule '" + rule.name +
                           "' needs a wuku, but no wuku anchor is configured");
    }
    DayNumber start = schedule.taun_start(taun_aj);
    DayNumber end = start + schedule.taun_length(taun_aj);
    std::vector<DayNumber> result;
    for (DayNumber dn = start; dn < end; ++dn) {
        if (rule.weton && !(weton_of(dn) == *rule.weton)) continue;
        if (rule.wuku && wuku_index(dn, *anchors.wuku_anchor) != *rule.wuku) continue;
        if (rule.dina || rule.wulan_no || rule.taun_name_idx) {
            JavaneseDate jd = javanese_from_day_number(dn, schedule);
            if (rule.dina && jd.dina != *rule.dina) continue;
            if (rule.wulan_no && jd.wulan_no != *rule.wulan_no) continue;
            if (rule.taun_name_idx && taun_name_index(jd.taun_aj) != *rule.taun_name_idx) {
                continue;
            }
        }
        result.push_back(dn);
    }
    return result;
}

}  // namespace javacal

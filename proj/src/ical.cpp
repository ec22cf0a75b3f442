#include "javacal/ical.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "javacal/names.hpp"

namespace javacal {

namespace {

constexpr std::string_view crlf = "\r\n";

// The Jemuwah Kliwon eve carries a traditional association worth surfacing
// on exported events.
constexpr Weton jemuwah_kliwon{6, 2};
constexpr std::string_view jemuwah_kliwon_note =
    "Jemuwah Kliwon is traditionally regarded as an especially auspicious day "
    "for spiritual observance.";

std::string compact_date(const GregorianDate& date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d%02d%02d", date.year, date.month, date.day);
    return buf;
}

// RFC 5545 TEXT escaping: backslash, semicolon, comma, newline.
std::string escape_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case '\\': out += "\\\\"; break;
            case ';': out += "\\;"; break;
            case ',': out += "\\,"; break;
            case '\n': out += "\\n"; break;
            default: out += ch;
        }
    }
    return out;
}

struct RangeDays {
    DayNumber from;
    DayNumber until;  // inclusive
};

RangeDays checked_range(const GregorianDate& from, const GregorianDate& until) {
    DayNumber from_dn = day_number_from_gregorian(from);
    DayNumber until_dn = day_number_from_gregorian(until);
    if (from_dn < 0) {
        throw domain_error("range starts before the Javanese epoch (1633-07-08)");
    }
    if (until_dn < from_dn) {
        throw domain_error("range end " + to_iso(until) + " precedes start " +
                           to_iso(from));
    }
    return {from_dn, until_dn};
}

void open_calendar(std::ostringstream& out) {
    out << "BEGIN:VCALENDAR" << crlf
        << "VERSION:2.0" << crlf
        << "PRODID:-//javacal//javanese calendar//EN" << crlf
        << "CALSCALE:GREGORIAN" << crlf;
}

void close_calendar(std::ostringstream& out) { out << "END:VCALENDAR" << crlf; }

void emit_event(std::ostringstream& out, const std::string& uid, DayNumber day,
                const GregorianDate& stamp_date, const std::string& summary,
                const std::string& description, const std::string& rrule) {
    out << "BEGIN:VEVENT" << crlf;
    out << "UID:" << uid << crlf;
    out << "DTSTAMP:" << compact_date(stamp_date) << "T000000Z" << crlf;
    out << "DTSTART;VALUE=DATE:" << compact_date(gregorian_from_day_number(day)) << crlf;
    if (!rrule.empty()) out << "RRULE:" << rrule << crlf;
    out << "SUMMARY:" << escape_text(summary) << crlf;
    if (!description.empty()) out << "DESCRIPTION:" << escape_text(description) << crlf;
    out << "END:VEVENT" << crlf;
}

std::string weton_description(Weton weton) {
    return weton == jemuwah_kliwon ? std::string(jemuwah_kliwon_note) : std::string();
}

// One seed event recurring every 35 days until the range end.
void emit_recurring(std::ostringstream& out, std::string uid_prefix, DayNumber seed,
                    const RangeDays& range, const GregorianDate& from,
                    const std::string& summary, const std::string& description) {
    if (seed > range.until) return;  // empty calendar: range shorter than one cycle
    std::string rrule = "FREQ=DAILY;INTERVAL=35;UNTIL=" +
                        compact_date(gregorian_from_day_number(range.until));
    emit_event(out, uid_prefix + "-" + std::to_string(seed) + "@javacal", seed, from,
               summary, description, rrule);
}

}  // namespace

std::string ical_for_weton(Weton target, const GregorianDate& from,
                           const GregorianDate& until) {
    RangeDays range = checked_range(from, until);
    DayNumber seed = range.from;
    while (seed <= range.until && !(weton_of(seed) == target)) ++seed;

    std::ostringstream out;
    open_calendar(out);
    emit_recurring(out,
                   "weton-" + std::to_string(target.dinapitu) + "-" +
                       std::to_string(target.pasaran),
                   seed, range, from, "Weton " + names::weton_name(target),
                   weton_description(target));
    close_calendar(out);
    return out.str();
}

std::string ical_for_mulya(const DinaMulyaRule& rule, const GregorianDate& from,
                           const GregorianDate& until, const CourtSchedule& schedule,
                           const CycleAnchors& anchors) {
    if (rule.needs_wuku() && !anchors.wuku_anchor) {
        throw domain_error("noble-day rule '" + rule.name +
                           "' needs a wuku, but no wuku anchor is configured");
    }
    RangeDays range = checked_range(from, until);

    std::ostringstream out;
    open_calendar(out);

    std::string uid_prefix = "mulya-" + names::fold_name(rule.name);
    for (char& ch : uid_prefix) {
        if (ch == ' ') ch = '-';
    }
    std::string description =
        rule.weton ? weton_description(*rule.weton) : std::string();

    if (rule.weton && !rule.needs_wuku() && !rule.needs_javanese()) {
        // Weton-only rule: a clean 35-day recurrence.
        DayNumber seed = range.from;
        while (seed <= range.until && !(weton_of(seed) == *rule.weton)) ++seed;
        emit_recurring(out, uid_prefix, seed, range, from, rule.name, description);
        close_calendar(out);
        return out.str();
    }

    // Conditioned rules: enumerate single events.  Rules that read the wulan
    // or taun can only be evaluated inside schedule coverage.
    DayNumber last = range.until;
    if (rule.needs_javanese()) last = std::min(last, schedule.coverage_end_day());
    for (DayNumber dn = range.from; dn <= last; ++dn) {
        if (rule.weton && !(weton_of(dn) == *rule.weton)) continue;
        if (rule.wuku && wuku_index(dn, *anchors.wuku_anchor) != *rule.wuku) continue;
        if (rule.needs_javanese()) {
            JavaneseDate jd = javanese_from_day_number(dn, schedule);
            if (rule.dina && jd.dina != *rule.dina) continue;
            if (rule.wulan_no && jd.wulan_no != *rule.wulan_no) continue;
            if (rule.taun_name_idx && taun_name_index(jd.taun_aj) != *rule.taun_name_idx) {
                continue;
            }
        }
        emit_event(out, uid_prefix + "-" + std::to_string(dn) + "@javacal", dn, from,
                   rule.name, description, std::string());
    }
    close_calendar(out);
    return out.str();
}

}  // namespace javacal

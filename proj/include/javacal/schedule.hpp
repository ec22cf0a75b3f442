// Court chronology data: kurup records, month-length rules, the schedule
// file format, and the compiled per-court month index.
//
// The structural skeleton (which taun are 354 vs 355 days, how taun Dal is
// laid out) is fixed by four rule columns, one per kurup ordinal.  Which taun
// ranges use which rule, where each kurup starts, and any royal one-off month
// overrides are *data*, shipped as a small text file per court (embedded
// copies of both are compiled in).  This keeps decisions that were made by
// decree — and future ones, like the start of the next kurup — out of the
// code.
//
// Schedule file grammar (line oriented, UTF-8, '#' comments):
//
//   format: 1
//   court: surakarta | yogyakarta
//   wuku-anchor: <0..209> | none            (optional)
//   paringkelan-anchor: <0..5> | none       (optional)
//   coverage-end: YYYY-MM-DD                (expected last covered day)
//
//   kurup: <ordinal>                        (starts a kurup block)
//   name: <word>
//   short-name: <word>
//   rule: <1..4>
//   first-taun: <taun name> <AJ year>
//   last-taun: <taun name> <AJ year>
//   start-date: YYYY-MM-DD
//   adjust: <AJ year> <wulan 1..12> <29|30> (repeatable; royal overrides)
//
//   mulya: <display name> | <cond>...       (noble-day rule; conditions are
//     weton=<dinapitu>,<pasaran>  wuku=<name>  dina=<1..30>  wulan=<1..12>
//     taun=<taun name>, space separated, each at most once)
//
// Unknown keys are rejected.  serialize_schedule() writes the canonical form
// (fixed key order, no comments); parse/serialize round-trips are lossless.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "javacal/types.hpp"

namespace javacal {

// Anno Javanico year of day 0; taun and windu names are anchored here.
inline constexpr int epoch_taun_aj = 1555;

// Taun name index 0..7 (Alip..Jimakir): (aj - 1555) mod 8.
int taun_name_index(int taun_aj);

// Windu name index 0..3 (Adi, Kuntara, Sêngara, Sancaya), continuous from
// AJ 1555, and the alternating lambang index 0..1 (Langkir, Kulawu).
int windu_index(int taun_aj);
int lambang_index(int taun_aj);

// Base month length for the given rule column (1..4), taun name index and
// wulan number, before any per-kurup adjustment.  Throws domain_error for
// arguments outside those ranges.
int wulan_length_rule(int rule, int taun_name_idx, int wulan_no);

// Base taun length (354 or 355) for the given rule column.
int taun_length_rule(int rule, int taun_name_idx);

// A royal override of one month's length.
struct WulanAdjustment {
    int taun_aj       = 0;
    int wulan_no      = 0;   // 1..12
    int forced_length = 0;   // 29 or 30

    friend bool operator==(const WulanAdjustment&, const WulanAdjustment&) = default;
};

// One kurup: a contiguous run of taun sharing a rule column.  The final taun
// of a kurup, when it is a Jimakir, gets a 29-day Besar (the "final windu"
// shortening); endings decreed on other taun are expressed as adjustments.
struct KurupRecord {
    int ordinal = 0;
    std::string name;        // e.g. "Kamsiyah"
    std::string short_name;  // e.g. "Amiswon"; kurup 1's "A'ahgi" is opaque
    int rule = 0;            // 1..4
    int first_taun_aj = 0;
    int last_taun_aj  = 0;
    GregorianDate start_date;  // checksum: must equal the compiled start
    std::vector<WulanAdjustment> adjustments;

    friend bool operator==(const KurupRecord&, const KurupRecord&) = default;
};

// A noble-day rule: a day matches when every present condition holds.
struct DinaMulyaRule {
    std::string name;
    std::optional<Weton> weton;
    std::optional<int> wuku;          // index 0..29
    std::optional<int> dina;          // 1..30
    std::optional<int> wulan_no;      // 1..12
    std::optional<int> taun_name_idx; // 0..7

    bool needs_wuku() const { return wuku.has_value(); }
    bool needs_javanese() const {
        return dina.has_value() || wulan_no.has_value() || taun_name_idx.has_value();
    }

    friend bool operator==(const DinaMulyaRule&, const DinaMulyaRule&) = default;
};

// Parsed schedule file content.
struct ScheduleData {
    int format_version = 1;
    Court court = Court::surakarta;
    CycleAnchors anchors;  // from wuku-anchor / paringkelan-anchor keys
    std::optional<GregorianDate> coverage_end;
    std::vector<KurupRecord> kurups;
    std::vector<DinaMulyaRule> mulya_rules;

    friend bool operator==(const ScheduleData&, const ScheduleData&) = default;
};

// Parses schedule text.  Throws schedule_error with a line-numbered message
// on syntax errors, unknown keys, duplicate keys, or malformed values.
ScheduleData parse_schedule(std::string_view text);

// Canonical text form; parse_schedule(serialize_schedule(d)) == d.
std::string serialize_schedule(const ScheduleData& data);

// Full structural validation; returns one message per violation (empty means
// valid).  Checks: kurup ordinals are 1..n in order; taun ranges are
// contiguous and start at AJ 1555; taun names match the 8-year cycle;
// adjustments land inside their kurup; each kurup's compiled start equals its
// start-date; coverage-end matches the final compiled day; every complete
// windu inside a kurup sums to 2,835 days except a kurup-final windu, which
// sums to 2,834; and every '1 Sura Alip' inside one kurup falls on the same
// weton.
std::vector<std::string> validate_schedule(const ScheduleData& data);

// A compiled court chronology: a flat month index from day 0 to the last day
// of the final kurup, ready for O(log n) day lookups.  Immutable after
// construction; safe to share between threads.
class CourtSchedule {
public:
    struct MonthRef {
        int taun_aj  = 0;
        int wulan_no = 0;       // 1..12
        DayNumber start = 0;    // day number of dina 1
    };

    Court court() const { return data_.court; }
    const ScheduleData& data() const { return data_; }
    const CycleAnchors& anchors() const { return data_.anchors; }
    const std::vector<DinaMulyaRule>& mulya_rules() const { return data_.mulya_rules; }

    int first_taun_aj() const { return data_.kurups.front().first_taun_aj; }
    int last_taun_aj() const { return data_.kurups.back().last_taun_aj; }
    bool covers_taun(int taun_aj) const;

    // Last day number of the final kurup (inclusive).
    DayNumber coverage_end_day() const { return end_day_; }
    bool covers_day(DayNumber dn) const { return dn >= 0 && dn <= end_day_; }

    // Throws domain_error outside coverage.
    DayNumber taun_start(int taun_aj) const;
    int taun_length(int taun_aj) const;
    DayNumber wulan_start(int taun_aj, int wulan_no) const;
    int wulan_length(int taun_aj, int wulan_no) const;
    const KurupRecord& kurup_of_taun(int taun_aj) const;
    const MonthRef& month_at(DayNumber dn) const;

    const std::vector<MonthRef>& months() const { return months_; }

private:
    friend CourtSchedule compile_schedule(ScheduleData data);

    ScheduleData data_;
    std::vector<MonthRef> months_;        // all covered months, in order
    std::vector<DayNumber> taun_starts_;  // indexed by taun_aj - first_taun_aj
    DayNumber end_day_ = -1;              // inclusive
};

// Validates (throwing schedule_error listing every violation) and compiles.
CourtSchedule compile_schedule(ScheduleData data);

// The embedded canonical schedule text for a court, and shortcuts for
// loading it or an external override file.
const std::string& embedded_schedule_text(Court court);
CourtSchedule load_schedule(Court court);
CourtSchedule load_schedule_file(const std::string& path);  // schedule_error on I/O failure

}  // namespace javacal

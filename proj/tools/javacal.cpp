// javacal — Javanese calendar conversions on the command line.
//
// Subcommands: convert, reverse, next, ical, range.  Exit codes:
//   0  success
//   1  usage or domain error (bad date, unknown name, nonexistent tuple)
//   2  partial record: the day's weton cycles exist but the wulan/taun/kurup
//      are beyond the decided chronology
//   3  schedule data file error

#include <charconv>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "javacal/engine.hpp"
#include "javacal/ical.hpp"
#include "javacal/names.hpp"
#include "javacal/record_io.hpp"
#include "javacal/schedule.hpp"

namespace {

using namespace javacal;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_partial = 2;
constexpr int exit_data = 3;

struct GlobalOptions {
    std::string court;               // "" = unset
    std::string schedule_path;       // "" = embedded
    std::string wuku_anchor;         // "", integer, or "none"
    std::string paringkelan_anchor;  // "", integer, or "none"
};

CourtSchedule resolve_schedule(const GlobalOptions& options) {
    std::optional<Court> requested;
    if (!options.court.empty()) {
        requested = court_from_string(options.court);
        if (!requested) {
            throw domain_error("unknown court '" + options.court +
                               "' (expected surakarta or yogyakarta)");
        }
    }
    if (!options.schedule_path.empty()) {
        CourtSchedule schedule = load_schedule_file(options.schedule_path);
        if (requested && schedule.court() != *requested) {
            throw domain_error(std::string("schedule file declares court ") +
                               to_string(schedule.court()) + " but --court says " +
                               to_string(*requested));
        }
        return schedule;
    }
    return load_schedule(requested.value_or(Court::surakarta));
}

std::optional<int> parse_anchor_option(const std::string& text, int max,
                                       const std::string& what,
                                       std::optional<int> fallback) {
    if (text.empty()) return fallback;
    if (names::fold_name(text) == "none") return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0 ||
        value > max) {
        throw domain_error(what + " must be an integer 0.." + std::to_string(max) +
                           " or 'none', got '" + text + "'");
    }
    return value;
}

CycleAnchors resolve_anchors(const GlobalOptions& options,
                             const CourtSchedule& schedule) {
    CycleAnchors anchors = schedule.anchors();
    anchors.wuku_anchor = parse_anchor_option(options.wuku_anchor, 209, "wuku anchor",
                                              anchors.wuku_anchor);
    anchors.paringkelan_anchor = parse_anchor_option(
        options.paringkelan_anchor, 5, "paringkelan anchor", anchors.paringkelan_anchor);
    return anchors;
}

Weton parse_weton_or_fail(const std::string& text) {
    auto weton = names::parse_weton(text);
    if (!weton) {
        throw domain_error("unrecognized weton '" + text +
                           "'; expected one of: " + names::list_weton_names());
    }
    return *weton;
}

int parse_wulan_or_fail(const std::string& text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size()) {
        if (value < 1 || value > 12) throw domain_error("wulan number must be 1..12");
        return value;
    }
    if (auto idx = names::parse_wulan(text)) return *idx + 1;
    throw domain_error("unknown wulan '" + text + "'");
}

enum class Format { text, json, csv };

void add_format_flags(CLI::App* cmd, Format& format, Format default_format) {
    format = default_format;
    auto* json = cmd->add_flag_callback(
        "--json", [&format] { format = Format::json; }, "emit JSON");
    auto* csv = cmd->add_flag_callback(
        "--csv", [&format] { format = Format::csv; }, "emit CSV");
    auto* text = cmd->add_flag_callback(
        "--text", [&format] { format = Format::text; }, "emit human-readable text");
    json->excludes(csv)->excludes(text);
    csv->excludes(text);
}

int run_convert(const std::string& date_text, Format format,
                const GlobalOptions& options) {
    CourtSchedule schedule = resolve_schedule(options);
    CycleAnchors anchors = resolve_anchors(options, schedule);
    GregorianDate date = gregorian_from_iso(date_text);
    FullDayRecord record = full_record(date, schedule, anchors);
    switch (format) {
        case Format::json: std::cout << record_to_json(record).dump(2) << "\n"; break;
        case Format::csv:
            std::cout << csv_header() << "\n" << record_to_csv(record) << "\n";
            break;
        case Format::text: std::cout << record_to_text(record); break;
    }
    return record.partial() ? exit_partial : exit_ok;
}

int run_reverse(int taun_aj, const std::string& wulan_text, int dina,
                const GlobalOptions& options) {
    CourtSchedule schedule = resolve_schedule(options);
    int wulan_no = parse_wulan_or_fail(wulan_text);
    DayNumber dn = day_number_from_javanese(taun_aj, wulan_no, dina, schedule);
    std::cout << to_iso(gregorian_from_day_number(dn)) << "\n";
    return exit_ok;
}

int run_next(const std::string& weton_text, const std::string& from_text, int count,
             const GlobalOptions&) {
    Weton target = parse_weton_or_fail(weton_text);
    DayNumber from = day_number_from_gregorian(gregorian_from_iso(from_text));
    for (DayNumber dn : next_weton(from, target, count)) {
        std::cout << to_iso(gregorian_from_day_number(dn)) << "\n";
    }
    return exit_ok;
}

int run_ical(const std::string& weton_text, const std::string& mulya_text,
             const std::string& from_text, const std::string& until_text,
             const GlobalOptions& options) {
    GregorianDate from = gregorian_from_iso(from_text);
    GregorianDate until = gregorian_from_iso(until_text);
    if (!weton_text.empty()) {
        std::cout << ical_for_weton(parse_weton_or_fail(weton_text), from, until);
        return exit_ok;
    }
    CourtSchedule schedule = resolve_schedule(options);
    CycleAnchors anchors = resolve_anchors(options, schedule);
    std::string wanted = names::fold_name(mulya_text);
    for (const auto& rule : schedule.mulya_rules()) {
        if (names::fold_name(rule.name) == wanted) {
            std::cout << ical_for_mulya(rule, from, until, schedule, anchors);
            return exit_ok;
        }
    }
    std::string known;
    for (const auto& rule : schedule.mulya_rules()) {
        if (!known.empty()) known += ", ";
        known += rule.name;
    }
    throw domain_error("unknown noble day '" + mulya_text + "'; schedule defines: " +
                       known);
}

int run_range(const std::string& from_text, const std::string& to_text, Format format,
              const GlobalOptions& options) {
    CourtSchedule schedule = resolve_schedule(options);
    CycleAnchors anchors = resolve_anchors(options, schedule);
    DayNumber from = day_number_from_gregorian(gregorian_from_iso(from_text));
    DayNumber to = day_number_from_gregorian(gregorian_from_iso(to_text));
    if (to < from) throw domain_error("range end precedes range start");

    if (format == Format::csv) std::cout << csv_header() << "\n";
    bool any_partial = false;
    for (DayNumber dn = from; dn <= to; ++dn) {
        FullDayRecord record =
            full_record(gregorian_from_day_number(dn), schedule, anchors);
        any_partial = any_partial || record.partial();
        if (format == Format::csv) {
            std::cout << record_to_csv(record) << "\n";
        } else {
            std::cout << record_to_json(record).dump() << "\n";
        }
    }
    return any_partial ? exit_partial : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Javanese calendar converter (weton, wuku, wulan/taun/windu/kurup)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "javacal 1.0.0");

    GlobalOptions options;
    app.add_option("--court", options.court,
                   "court chronology: surakarta (default) or yogyakarta")
        ->envname("JAVACAL_COURT");
    app.add_option("--schedule", options.schedule_path,
                   "path to a schedule data file (overrides the embedded one)")
        ->envname("JAVACAL_SCHEDULE");
    app.add_option("--wuku-anchor", options.wuku_anchor,
                   "pawukon anchor 0..209, or 'none' to disable wuku output")
        ->envname("JAVACAL_WUKU_ANCHOR");
    app.add_option("--paringkelan-anchor", options.paringkelan_anchor,
                   "paringkelan anchor 0..5, or 'none' (default: none)");

    // convert
    auto* convert = app.add_subcommand("convert", "Gregorian date -> full day record");
    std::string convert_date;
    Format convert_format = Format::text;
    convert->add_option("date", convert_date, "Gregorian date, YYYY-MM-DD")->required();
    add_format_flags(convert, convert_format, Format::text);

    // reverse
    auto* reverse = app.add_subcommand("reverse", "Javanese date -> Gregorian date");
    int reverse_aj = 0, reverse_dina = 0;
    std::string reverse_wulan;
    reverse->add_option("--aj", reverse_aj, "taun, Anno Javanico")->required();
    reverse->add_option("--wulan", reverse_wulan, "wulan number 1..12 or name")
        ->required();
    reverse->add_option("--dina", reverse_dina, "day of wulan, 1..30")->required();

    // next
    auto* next = app.add_subcommand("next", "upcoming occurrences of a weton");
    std::string next_weton_text, next_from;
    int next_count = 1;
    next->add_option("--weton", next_weton_text, "weton, e.g. 'Selasa Wage'")
        ->required();
    next->add_option("--from", next_from, "start date (exclusive), YYYY-MM-DD")
        ->required();
    next->add_option("--count", next_count, "number of occurrences (default 1)");

    // ical
    auto* ical = app.add_subcommand("ical", "iCalendar export of a weton or noble day");
    std::string ical_weton_text, ical_mulya_text, ical_from, ical_until;
    auto* ical_weton_opt =
        ical->add_option("--weton", ical_weton_text, "weton, e.g. 'Jemuwah Kliwon'");
    auto* ical_mulya_opt =
        ical->add_option("--mulya", ical_mulya_text, "noble day, e.g. 'Kuningan'");
    ical_weton_opt->excludes(ical_mulya_opt);
    ical->add_option("--from", ical_from, "range start, YYYY-MM-DD")->required();
    ical->add_option("--until", ical_until, "range end (inclusive), YYYY-MM-DD")
        ->required();

    // range
    auto* range = app.add_subcommand("range", "stream records for a span of days");
    std::string range_from, range_to;
    Format range_format = Format::csv;
    range->add_option("--from", range_from, "range start, YYYY-MM-DD")->required();
    range->add_option("--to", range_to, "range end (inclusive), YYYY-MM-DD")->required();
    add_format_flags(range, range_format, Format::csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return exit_usage;
    }

    try {
        if (convert->parsed()) return run_convert(convert_date, convert_format, options);
        if (reverse->parsed()) {
            return run_reverse(reverse_aj, reverse_wulan, reverse_dina, options);
        }
        if (next->parsed()) {
            return run_next(next_weton_text, next_from, next_count, options);
        }
        if (ical->parsed()) {
            if (ical_weton_text.empty() && ical_mulya_text.empty()) {
                std::cerr << "ical: one of --weton or --mulya is required\n";
                return exit_usage;
            }
            return run_ical(ical_weton_text, ical_mulya_text, ical_from, ical_until,
                            options);
        }
        if (range->parsed()) {
            return run_range(range_from, range_to, range_format, options);
        }
    } catch (const schedule_error& e) {
        std::cerr << "javacal: " << e.what() << "\n";
        return exit_data;
    } catch (const domain_error& e) {
        std::cerr << "javacal: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

#include "javacal/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "javacal/chrono.hpp"
#include "javacal/names.hpp"

namespace javacal {

// ---------------------------------------------------------------------------
// Structural cycles anchored at AJ 1555.

int taun_name_index(int taun_aj) {
    return int(floor_mod(taun_aj - epoch_taun_aj, 8));
}

int windu_index(int taun_aj) {
    // Continuous windu count from 1555; the shortened kurup endings do not
    // restart the name cycle.
    std::int64_t windu = (taun_aj - epoch_taun_aj) / 8;
    return int(floor_mod(windu, 4));
}

int lambang_index(int taun_aj) {
    return windu_index(taun_aj) % 2;
}

// ---------------------------------------------------------------------------
// Month-length rule columns.
//
// Months of every taun except Dal alternate 30/29 through Dulkangidah, with
// Besar taking the taun's leap day.  Taun Dal has its own fixed row per rule
// column; note that under rules 3 and 4 Dal is a 354-day taun even though
// rule 3 keeps its 30-day Besar.

namespace {

constexpr int dal_row[4][12] = {
    {30, 29, 30, 29, 30, 29, 30, 29, 30, 29, 30, 30},  // rule 1 (355)
    {30, 30, 29, 29, 30, 29, 30, 29, 30, 29, 30, 30},  // rule 2 (355)
    {30, 30, 29, 29, 29, 29, 30, 29, 30, 29, 30, 30},  // rule 3 (354)
    {30, 29, 30, 29, 30, 29, 30, 29, 30, 29, 30, 29},  // rule 4 (354)
};

constexpr int taun_alip    = 0;
constexpr int taun_ehe     = 1;
constexpr int taun_je      = 3;
constexpr int taun_dal     = 4;
constexpr int taun_jimakir = 7;

// Leap status (355 days) for taun other than Dal.
constexpr bool leap_taun(int rule, int taun_name_idx) {
    if (taun_name_idx == taun_ehe || taun_name_idx == taun_jimakir) return true;
    if (taun_name_idx == taun_je) return rule >= 3;
    return false;
}

void check_rule_args(int rule, int taun_name_idx, int wulan_no) {
    if (rule < 1 || rule > 4) {
        throw domain_error("rule column must be 1..4, got " + std::to_string(rule));
    }
    if (taun_name_idx < 0 || taun_name_idx > 7) {
        throw domain_error("taun name index must be 0..7, got " +
                           std::to_string(taun_name_idx));
    }
    if (wulan_no < 1 || wulan_no > 12) {
        throw domain_error("wulan number must be 1..12, got " + std::to_string(wulan_no));
    }
}

// Month length after the structural rules of one kurup record: rule column,
// then the final-windu Jimakir shortening, then royal adjustments last.
int effective_wulan_length(const KurupRecord& kurup, int taun_aj, int wulan_no) {
    int len = wulan_length_rule(kurup.rule, taun_name_index(taun_aj), wulan_no);
    if (wulan_no == 12 && taun_aj == kurup.last_taun_aj &&
        taun_name_index(taun_aj) == taun_jimakir) {
        len = 29;
    }
    for (const auto& adj : kurup.adjustments) {
        if (adj.taun_aj == taun_aj && adj.wulan_no == wulan_no) len = adj.forced_length;
    }
    return len;
}

int effective_taun_length(const KurupRecord& kurup, int taun_aj) {
    int total = 0;
    for (int wulan_no = 1; wulan_no <= 12; ++wulan_no) {
        total += effective_wulan_length(kurup, taun_aj, wulan_no);
    }
    return total;
}

}  // namespace

int wulan_length_rule(int rule, int taun_name_idx, int wulan_no) {
    check_rule_args(rule, taun_name_idx, wulan_no);
    if (taun_name_idx == taun_dal) return dal_row[rule - 1][wulan_no - 1];
    if (wulan_no <= 11) return (wulan_no % 2 == 1) ? 30 : 29;
    return leap_taun(rule, taun_name_idx) ? 30 : 29;
}

int taun_length_rule(int rule, int taun_name_idx) {
    check_rule_args(rule, taun_name_idx, 1);
    if (taun_name_idx == taun_dal) return rule <= 2 ? 355 : 354;
    return leap_taun(rule, taun_name_idx) ? 355 : 354;
}

// ---------------------------------------------------------------------------
// Schedule file parsing.

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                             text.back() == '\r')) {
        text.remove_suffix(1);
    }
    return text;
}

std::vector<std::string_view> split_fields(std::string_view text) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t start = text.find_first_not_of(" \t", pos);
        if (start == std::string_view::npos) break;
        std::size_t end = text.find_first_of(" \t", start);
        if (end == std::string_view::npos) end = text.size();
        fields.push_back(text.substr(start, end - start));
        pos = end;
    }
    return fields;
}

[[noreturn]] void fail_line(int line_no, const std::string& message) {
    throw schedule_error("schedule line " + std::to_string(line_no) + ": " + message);
}

int parse_int_or_fail(std::string_view text, int line_no, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        fail_line(line_no, "expected an integer for " + what + ", got '" +
                               std::string(text) + "'");
    }
    return value;
}

GregorianDate parse_date_or_fail(std::string_view text, int line_no) {
    try {
        return gregorian_from_iso(text);
    } catch (const domain_error& e) {
        fail_line(line_no, e.what());
    }
}

// "<taun name> <AJ year>", with the name checked against the 8-year cycle.
int parse_taun_ref(std::string_view value, int line_no) {
    auto fields = split_fields(value);
    if (fields.size() != 2) {
        fail_line(line_no, "expected '<taun name> <AJ year>', got '" +
                               std::string(value) + "'");
    }
    auto name_idx = names::parse_taun_name(fields[0]);
    if (!name_idx) {
        fail_line(line_no, "unknown taun name '" + std::string(fields[0]) + "'");
    }
    int aj = parse_int_or_fail(fields[1], line_no, "AJ year");
    if (taun_name_index(aj) != *name_idx) {
        fail_line(line_no, "taun name '" + std::string(fields[0]) +
                               "' does not match AJ " + std::to_string(aj) +
                               " (that year is " +
                               std::string(names::taun[size_t(taun_name_index(aj))]) + ")");
    }
    return aj;
}

DinaMulyaRule parse_mulya(std::string_view value, int line_no) {
    std::size_t bar = value.find('|');
    if (bar == std::string_view::npos) {
        fail_line(line_no, "expected 'mulya: <name> | <conditions>'");
    }
    DinaMulyaRule rule;
    rule.name = std::string(trim(value.substr(0, bar)));
    if (rule.name.empty()) fail_line(line_no, "noble-day rule needs a name");

    auto conds = split_fields(value.substr(bar + 1));
    if (conds.empty()) {
        fail_line(line_no, "noble-day rule needs at least one condition");
    }
    for (auto cond : conds) {
        std::size_t eq = cond.find('=');
        if (eq == std::string_view::npos) {
            fail_line(line_no, "expected key=value condition, got '" +
                                   std::string(cond) + "'");
        }
        std::string_view key = cond.substr(0, eq);
        std::string_view val = cond.substr(eq + 1);
        if (key == "weton") {
            if (rule.weton) fail_line(line_no, "duplicate weton condition");
            rule.weton = names::parse_weton(val);
            if (!rule.weton) {
                fail_line(line_no, "unrecognized weton '" + std::string(val) + "'");
            }
        } else if (key == "wuku") {
            if (rule.wuku) fail_line(line_no, "duplicate wuku condition");
            rule.wuku = names::parse_wuku(val);
            if (!rule.wuku) {
                fail_line(line_no, "unknown wuku name '" + std::string(val) + "'");
            }
        } else if (key == "dina") {
            if (rule.dina) fail_line(line_no, "duplicate dina condition");
            int dina = parse_int_or_fail(val, line_no, "dina");
            if (dina < 1 || dina > 30) fail_line(line_no, "dina must be 1..30");
            rule.dina = dina;
        } else if (key == "wulan") {
            if (rule.wulan_no) fail_line(line_no, "duplicate wulan condition");
            if (auto idx = names::parse_wulan(val)) {
                rule.wulan_no = *idx + 1;
            } else {
                int no = parse_int_or_fail(val, line_no, "wulan");
                if (no < 1 || no > 12) fail_line(line_no, "wulan must be 1..12");
                rule.wulan_no = no;
            }
        } else if (key == "taun") {
            if (rule.taun_name_idx) fail_line(line_no, "duplicate taun condition");
            rule.taun_name_idx = names::parse_taun_name(val);
            if (!rule.taun_name_idx) {
                fail_line(line_no, "unknown taun name '" + std::string(val) + "'");
            }
        } else {
            fail_line(line_no, "unknown condition key '" + std::string(key) + "'");
        }
    }
    return rule;
}

std::optional<int> parse_anchor(std::string_view value, int line_no, int max,
                                const std::string& what) {
    if (value == "none") return std::nullopt;
    int anchor = parse_int_or_fail(value, line_no, what);
    if (anchor < 0 || anchor > max) {
        fail_line(line_no, what + " must be 0.." + std::to_string(max) + " or 'none'");
    }
    return anchor;
}

}  // namespace

ScheduleData parse_schedule(std::string_view text) {
    ScheduleData data;
    data.format_version = 0;  // until seen
    bool court_seen = false;
    bool wuku_seen = false, paringkelan_seen = false, coverage_seen = false;
    KurupRecord* current = nullptr;
    std::vector<std::string> seen_in_block;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            if (pos > text.size()) break;
            continue;
        }

        std::size_t colon = line.find(':');
        if (colon == std::string_view::npos) {
            fail_line(line_no, "expected 'key: value'");
        }
        std::string key{trim(line.substr(0, colon))};
        std::string_view value = trim(line.substr(colon + 1));
        if (value.empty()) fail_line(line_no, "missing value for key '" + key + "'");

        bool header_key = key == "format" || key == "court" || key == "wuku-anchor" ||
                          key == "paringkelan-anchor" || key == "coverage-end";
        if (header_key && (current != nullptr || !data.kurups.empty())) {
            fail_line(line_no, "header key '" + key + "' must precede kurup blocks");
        }

        if (key == "format") {
            if (data.format_version != 0) fail_line(line_no, "duplicate format key");
            data.format_version = parse_int_or_fail(value, line_no, "format version");
            if (data.format_version != 1) {
                fail_line(line_no, "unsupported format version " +
                                       std::to_string(data.format_version));
            }
        } else if (key == "court") {
            if (court_seen) fail_line(line_no, "duplicate court key");
            auto court = court_from_string(value);
            if (!court) fail_line(line_no, "unknown court '" + std::string(value) + "'");
            data.court = *court;
            court_seen = true;
        } else if (key == "wuku-anchor") {
            if (wuku_seen) fail_line(line_no, "duplicate wuku-anchor key");
            data.anchors.wuku_anchor = parse_anchor(value, line_no, 209, "wuku-anchor");
            wuku_seen = true;
        } else if (key == "paringkelan-anchor") {
            if (paringkelan_seen) fail_line(line_no, "duplicate paringkelan-anchor key");
            data.anchors.paringkelan_anchor =
                parse_anchor(value, line_no, 5, "paringkelan-anchor");
            paringkelan_seen = true;
        } else if (key == "coverage-end") {
            if (coverage_seen) fail_line(line_no, "duplicate coverage-end key");
            data.coverage_end = parse_date_or_fail(value, line_no);
            coverage_seen = true;
        } else if (key == "kurup") {
            current = &data.kurups.emplace_back();
            current->ordinal = parse_int_or_fail(value, line_no, "kurup ordinal");
            seen_in_block.clear();
        } else if (key == "mulya") {
            current = nullptr;  // mulya lines close any open kurup block
            data.mulya_rules.push_back(parse_mulya(value, line_no));
        } else if (key == "name" || key == "short-name" || key == "rule" ||
                   key == "first-taun" || key == "last-taun" || key == "start-date" ||
                   key == "adjust") {
            if (current == nullptr) {
                fail_line(line_no, "key '" + key + "' outside a kurup block");
            }
            if (key != "adjust") {
                if (std::find(seen_in_block.begin(), seen_in_block.end(), key) !=
                    seen_in_block.end()) {
                    fail_line(line_no, "duplicate key '" + key + "' in kurup block");
                }
                seen_in_block.push_back(key);
            }
            if (key == "name") {
                current->name = std::string(value);
            } else if (key == "short-name") {
                current->short_name = std::string(value);
            } else if (key == "rule") {
                current->rule = parse_int_or_fail(value, line_no, "rule column");
                if (current->rule < 1 || current->rule > 4) {
                    fail_line(line_no, "rule column must be 1..4");
                }
            } else if (key == "first-taun") {
                current->first_taun_aj = parse_taun_ref(value, line_no);
            } else if (key == "last-taun") {
                current->last_taun_aj = parse_taun_ref(value, line_no);
            } else if (key == "start-date") {
                current->start_date = parse_date_or_fail(value, line_no);
            } else {  // adjust
                auto fields = split_fields(value);
                if (fields.size() != 3) {
                    fail_line(line_no, "expected 'adjust: <AJ year> <wulan> <29|30>'");
                }
                WulanAdjustment adj;
                adj.taun_aj = parse_int_or_fail(fields[0], line_no, "AJ year");
                adj.wulan_no = parse_int_or_fail(fields[1], line_no, "wulan number");
                adj.forced_length = parse_int_or_fail(fields[2], line_no, "month length");
                if (adj.wulan_no < 1 || adj.wulan_no > 12) {
                    fail_line(line_no, "wulan number must be 1..12");
                }
                if (adj.forced_length != 29 && adj.forced_length != 30) {
                    fail_line(line_no, "forced month length must be 29 or 30");
                }
                current->adjustments.push_back(adj);
            }
        } else {
            fail_line(line_no, "unknown key '" + key + "'");
        }

        if (pos > text.size()) break;
    }

    // An absent wuku-anchor key means "use the calibrated default"; an
    // explicit "none" disables the cycle.  The serializer always writes the
    // key, so canonical files stay unambiguous.
    if (!wuku_seen) data.anchors.wuku_anchor = default_wuku_anchor;

    if (data.format_version == 0) throw schedule_error("schedule: missing format key");
    if (!court_seen) throw schedule_error("schedule: missing court key");
    if (data.kurups.empty()) throw schedule_error("schedule: no kurup blocks");
    for (const auto& kurup : data.kurups) {
        std::string where = "kurup " + std::to_string(kurup.ordinal);
        if (kurup.name.empty()) throw schedule_error("schedule: " + where + " missing name");
        if (kurup.short_name.empty()) {
            throw schedule_error("schedule: " + where + " missing short-name");
        }
        if (kurup.rule == 0) throw schedule_error("schedule: " + where + " missing rule");
        if (kurup.first_taun_aj == 0) {
            throw schedule_error("schedule: " + where + " missing first-taun");
        }
        if (kurup.last_taun_aj == 0) {
            throw schedule_error("schedule: " + where + " missing last-taun");
        }
        if (kurup.start_date == GregorianDate{}) {
            throw schedule_error("schedule: " + where + " missing start-date");
        }
    }
    return data;
}

// ---------------------------------------------------------------------------
// Canonical serialization.

namespace {

std::string taun_ref(int taun_aj) {
    std::string out{names::taun[size_t(taun_name_index(taun_aj))]};
    out += ' ';
    out += std::to_string(taun_aj);
    return out;
}

std::string weton_token(Weton weton) {
    std::string out{names::dinapitu[size_t(weton.dinapitu)]};
    out += ',';
    out += names::pasaran_ngoko[size_t(weton.pasaran)];
    return out;
}

}  // namespace

std::string serialize_schedule(const ScheduleData& data) {
    std::ostringstream out;
    out << "format: " << data.format_version << '\n';
    out << "court: " << to_string(data.court) << '\n';
    out << "wuku-anchor: ";
    if (data.anchors.wuku_anchor) {
        out << *data.anchors.wuku_anchor << '\n';
    } else {
        out << "none\n";
    }
    if (data.anchors.paringkelan_anchor) {
        out << "paringkelan-anchor: " << *data.anchors.paringkelan_anchor << '\n';
    }
    if (data.coverage_end) {
        out << "coverage-end: " << to_iso(*data.coverage_end) << '\n';
    }
    for (const auto& kurup : data.kurups) {
        out << '\n';
        out << "kurup: " << kurup.ordinal << '\n';
        out << "name: " << kurup.name << '\n';
        out << "short-name: " << kurup.short_name << '\n';
        out << "rule: " << kurup.rule << '\n';
        out << "first-taun: " << taun_ref(kurup.first_taun_aj) << '\n';
        out << "last-taun: " << taun_ref(kurup.last_taun_aj) << '\n';
        out << "start-date: " << to_iso(kurup.start_date) << '\n';
        for (const auto& adj : kurup.adjustments) {
            out << "adjust: " << adj.taun_aj << ' ' << adj.wulan_no << ' '
                << adj.forced_length << '\n';
        }
    }
    if (!data.mulya_rules.empty()) out << '\n';
    for (const auto& rule : data.mulya_rules) {
        out << "mulya: " << rule.name << " |";
        if (rule.weton) out << " weton=" << weton_token(*rule.weton);
        if (rule.wuku) out << " wuku=" << names::wuku[size_t(*rule.wuku)];
        if (rule.dina) out << " dina=" << *rule.dina;
        if (rule.wulan_no) out << " wulan=" << *rule.wulan_no;
        if (rule.taun_name_idx) {
            out << " taun=" << names::taun[size_t(*rule.taun_name_idx)];
        }
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Validation.

std::vector<std::string> validate_schedule(const ScheduleData& data) {
    std::vector<std::string> findings;
    auto flag = [&findings](std::string message) {
        findings.push_back(std::move(message));
    };

    if (data.kurups.empty()) {
        flag("no kurup records");
        return findings;
    }

    // Structure: ordinals 1..n, ranges contiguous from AJ 1555, rules valid.
    bool structure_ok = true;
    for (std::size_t i = 0; i < data.kurups.size(); ++i) {
        const auto& kurup = data.kurups[i];
        std::string where = "kurup " + std::to_string(kurup.ordinal) + ": ";
        if (kurup.ordinal != int(i) + 1) {
            flag(where + "ordinal out of order (expected " + std::to_string(i + 1) + ")");
            structure_ok = false;
        }
        if (kurup.rule < 1 || kurup.rule > 4) {
            flag(where + "rule column out of range");
            structure_ok = false;
        }
        if (kurup.first_taun_aj > kurup.last_taun_aj) {
            flag(where + "first taun after last taun");
            structure_ok = false;
        }
        if (i == 0 && kurup.first_taun_aj != epoch_taun_aj) {
            flag(where + "chronology must start at AJ " + std::to_string(epoch_taun_aj));
            structure_ok = false;
        }
        if (i > 0 && kurup.first_taun_aj != data.kurups[i - 1].last_taun_aj + 1) {
            flag(where + "taun range not contiguous with kurup " +
                 std::to_string(data.kurups[i - 1].ordinal));
            structure_ok = false;
        }
        for (const auto& adj : kurup.adjustments) {
            if (adj.taun_aj < kurup.first_taun_aj || adj.taun_aj > kurup.last_taun_aj) {
                flag(where + "adjustment for AJ " + std::to_string(adj.taun_aj) +
                     " outside the kurup's taun range");
            }
        }
    }
    std::map<std::string, int> rule_names;
    for (const auto& rule : data.mulya_rules) {
        if (++rule_names[names::fold_name(rule.name)] == 2) {
            flag("duplicate noble-day rule name '" + rule.name + "'");
        }
    }
    if (!structure_ok) return findings;

    // Arithmetic: walk the chronology once, checking each kurup's start-date
    // checksum, the windu sums, and the '1 Sura Alip' weton invariant.
    DayNumber cursor = 0;
    for (const auto& kurup : data.kurups) {
        std::string where = "kurup " + std::to_string(kurup.ordinal) + ": ";
        DayNumber expected_start = 0;
        try {
            expected_start = day_number_from_gregorian(kurup.start_date);
        } catch (const domain_error& e) {
            flag(where + e.what());
            return findings;
        }
        if (cursor != expected_start) {
            flag(where + "start-date checksum mismatch: chronology reaches day " +
                 std::to_string(cursor) + " but " + to_iso(kurup.start_date) +
                 " is day " + std::to_string(expected_start));
        }

        std::optional<int> alip_weton;
        int windu_days = 0;
        for (int taun = kurup.first_taun_aj; taun <= kurup.last_taun_aj; ++taun) {
            if (taun_name_index(taun) == 0) {
                windu_days = 0;
                int weton_residue = int(floor_mod(cursor, 35));
                if (alip_weton && *alip_weton != weton_residue) {
                    flag(where + "1 Sura Alip " + std::to_string(taun) +
                         " breaks the kurup's weton invariant");
                }
                alip_weton = weton_residue;
            }
            int taun_days = effective_taun_length(kurup, taun);
            windu_days += taun_days;
            cursor += taun_days;
            // A windu counts as complete when its closing Jimakir and its
            // opening Alip both lie inside this kurup.
            bool complete = taun_name_index(taun) == 7 && taun - 7 >= kurup.first_taun_aj;
            if (complete) {
                int expected = (taun == kurup.last_taun_aj) ? 2834 : 2835;
                if (windu_days != expected) {
                    flag(where + "windu ending AJ " + std::to_string(taun) + " spans " +
                         std::to_string(windu_days) + " days, expected " +
                         std::to_string(expected));
                }
            }
        }
    }

    if (data.coverage_end) {
        try {
            DayNumber expected_end = day_number_from_gregorian(*data.coverage_end);
            if (cursor - 1 != expected_end) {
                flag("coverage-end checksum mismatch: chronology ends at day " +
                     std::to_string(cursor - 1) + " but " + to_iso(*data.coverage_end) +
                     " is day " + std::to_string(expected_end));
            }
        } catch (const domain_error& e) {
            flag(std::string("coverage-end: ") + e.what());
        }
    }

    return findings;
}

// ---------------------------------------------------------------------------
// Compilation and queries.

CourtSchedule compile_schedule(ScheduleData data) {
    auto findings = validate_schedule(data);
    if (!findings.empty()) {
        std::string message = "invalid schedule:";
        for (const auto& finding : findings) message += "\n  - " + finding;
        throw schedule_error(message);
    }

    CourtSchedule schedule;
    schedule.data_ = std::move(data);
    DayNumber cursor = 0;
    for (const auto& kurup : schedule.data_.kurups) {
        for (int taun = kurup.first_taun_aj; taun <= kurup.last_taun_aj; ++taun) {
            schedule.taun_starts_.push_back(cursor);
            for (int wulan_no = 1; wulan_no <= 12; ++wulan_no) {
                schedule.months_.push_back({taun, wulan_no, cursor});
                cursor += effective_wulan_length(kurup, taun, wulan_no);
            }
        }
    }
    schedule.taun_starts_.push_back(cursor);  // sentinel: one past the last day
    schedule.end_day_ = cursor - 1;
    return schedule;
}

bool CourtSchedule::covers_taun(int taun_aj) const {
    return taun_aj >= first_taun_aj() && taun_aj <= last_taun_aj();
}

DayNumber CourtSchedule::taun_start(int taun_aj) const {
    if (!covers_taun(taun_aj)) {
        throw domain_error("taun AJ " + std::to_string(taun_aj) +
                           " is outside schedule coverage (" +
                           std::to_string(first_taun_aj()) + ".." +
                           std::to_string(last_taun_aj()) + ")");
    }
    return taun_starts_[std::size_t(taun_aj - first_taun_aj())];
}

int CourtSchedule::taun_length(int taun_aj) const {
    DayNumber start = taun_start(taun_aj);
    return int(taun_starts_[std::size_t(taun_aj - first_taun_aj()) + 1] - start);
}

DayNumber CourtSchedule::wulan_start(int taun_aj, int wulan_no) const {
    if (wulan_no < 1 || wulan_no > 12) {
        throw domain_error("wulan number must be 1..12, got " + std::to_string(wulan_no));
    }
    taun_start(taun_aj);  // coverage check
    return months_[std::size_t(taun_aj - first_taun_aj()) * 12 +
                   std::size_t(wulan_no - 1)]
        .start;
}

int CourtSchedule::wulan_length(int taun_aj, int wulan_no) const {
    DayNumber start = wulan_start(taun_aj, wulan_no);
    std::size_t index = std::size_t(taun_aj - first_taun_aj()) * 12 +
                        std::size_t(wulan_no - 1);
    DayNumber next = index + 1 < months_.size() ? months_[index + 1].start : end_day_ + 1;
    return int(next - start);
}

const KurupRecord& CourtSchedule::kurup_of_taun(int taun_aj) const {
    for (const auto& kurup : data_.kurups) {
        if (taun_aj >= kurup.first_taun_aj && taun_aj <= kurup.last_taun_aj) return kurup;
    }
    throw domain_error("taun AJ " + std::to_string(taun_aj) +
                       " is outside schedule coverage");
}

const CourtSchedule::MonthRef& CourtSchedule::month_at(DayNumber dn) const {
    if (dn < 0) {
        throw domain_error("day number " + std::to_string(dn) +
                           " precedes the epoch (8 July 1633)");
    }
    if (dn > end_day_) {
        throw domain_error("day number " + std::to_string(dn) +
                           " is beyond the decided kurup chronology (last covered day " +
                           std::to_string(end_day_) + ")");
    }
    auto it = std::upper_bound(
        months_.begin(), months_.end(), dn,
        [](DayNumber value, const MonthRef& month) { return value < month.start; });
    return *std::prev(it);
}

// ---------------------------------------------------------------------------
// Embedded schedules.

namespace detail {
// Defined in the generated schedule_data.cpp.
extern const char* const embedded_surakarta_schedule;
extern const char* const embedded_yogyakarta_schedule;
}  // namespace detail

const std::string& embedded_schedule_text(Court court) {
    static const std::string surakarta{detail::embedded_surakarta_schedule};
    static const std::string yogyakarta{detail::embedded_yogyakarta_schedule};
    return court == Court::surakarta ? surakarta : yogyakarta;
}

CourtSchedule load_schedule(Court court) {
    CourtSchedule schedule = compile_schedule(parse_schedule(embedded_schedule_text(court)));
    if (schedule.court() != court) {
        throw schedule_error("embedded schedule declares the wrong court");
    }
    return schedule;
}

CourtSchedule load_schedule_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw schedule_error("cannot open schedule file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw schedule_error("error reading schedule file '" + path + "'");
    return compile_schedule(parse_schedule(buffer.str()));
}

}  // namespace javacal

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <numeric>
#include <string>

#include "javacal/chrono.hpp"
#include "javacal/names.hpp"
#include "javacal/schedule.hpp"

using namespace javacal;

namespace {

bool any_contains(const std::vector<std::string>& messages, std::string_view needle) {
    for (const auto& m : messages) {
        if (m.find(needle) != std::string::npos) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("taun, windu and lambang name cycles are anchored at AJ 1555") {
    CHECK(taun_name_index(1555) == 0);  // Alip
    CHECK(taun_name_index(1563) == 0);
    CHECK(taun_name_index(1562) == 7);  // Jimakir
    CHECK(taun_name_index(1682) == 7);
    CHECK(taun_name_index(1749) == 2);  // Jimawal
    CHECK(taun_name_index(1954) == 7);
    CHECK(taun_name_index(1955) == 0);
    CHECK(names::taun[taun_name_index(1867)] == "Alip");

    CHECK(names::windu[windu_index(1555)] == "Adi");
    CHECK(names::windu[windu_index(1563)] == "Kuntara");
    CHECK(names::windu[windu_index(1571)] == "Sêngara");
    CHECK(names::windu[windu_index(1579)] == "Sancaya");
    CHECK(names::windu[windu_index(1587)] == "Adi");
    CHECK(names::windu[windu_index(1954)] == "Kuntara");

    CHECK(names::lambang[lambang_index(1555)] == "Langkir");
    CHECK(names::lambang[lambang_index(1563)] == "Kulawu");
    CHECK(names::lambang[lambang_index(1571)] == "Langkir");
    CHECK(names::lambang[lambang_index(1954)] == "Kulawu");
}

TEST_CASE("month length rules: ordinary taun alternate 30/29") {
    for (int rule = 1; rule <= 4; ++rule) {
        // Alip (index 0) is an ordinary 354-day taun under every rule.
        for (int wulan = 1; wulan <= 11; ++wulan) {
            CHECK(wulan_length_rule(rule, 0, wulan) == (wulan % 2 == 1 ? 30 : 29));
        }
        CHECK(wulan_length_rule(rule, 0, 12) == 29);
        // Ehé and Jimakir (355 days) get a 30-day Besar.
        CHECK(wulan_length_rule(rule, 1, 12) == 30);
        CHECK(wulan_length_rule(rule, 7, 12) == 30);
    }
    // Jé flips between the rule pairs; Dal flips the other way.
    CHECK(wulan_length_rule(1, 3, 12) == 29);
    CHECK(wulan_length_rule(2, 3, 12) == 29);
    CHECK(wulan_length_rule(3, 3, 12) == 30);
    CHECK(wulan_length_rule(4, 3, 12) == 30);
}

TEST_CASE("month length rules: taun Dal has its own row per rule") {
    // Dal is taun index 4.  Each rule column fixes all twelve lengths.
    const int dal_expected[4][12] = {
        {30, 29, 30, 29, 30, 29, 30, 29, 30, 29, 30, 30},  // rule 1: 355
        {30, 30, 29, 29, 30, 29, 30, 29, 30, 29, 30, 30},  // rule 2: 355
        {30, 30, 29, 29, 29, 29, 30, 29, 30, 29, 30, 30},  // rule 3: 354
        {30, 29, 30, 29, 30, 29, 30, 29, 30, 29, 30, 29},  // rule 4: 354
    };
    for (int rule = 1; rule <= 4; ++rule) {
        int total = 0;
        for (int wulan = 1; wulan <= 12; ++wulan) {
            CAPTURE(rule);
            CAPTURE(wulan);
            int len = wulan_length_rule(rule, 4, wulan);
            CHECK(len == dal_expected[rule - 1][wulan - 1]);
            total += len;
        }
        CHECK(total == taun_length_rule(rule, 4));
    }
    // The rule-3 Dal row is the striking one: a 30-day Besar inside a
    // 354-day taun, paid for by four consecutive 29-day months.
    CHECK(wulan_length_rule(3, 4, 12) == 30);
    CHECK(taun_length_rule(3, 4) == 354);
}

TEST_CASE("taun lengths per rule column") {
    const int expected[8][4] = {
        {354, 354, 354, 354},  // Alip
        {355, 355, 355, 355},  // Ehé
        {354, 354, 354, 354},  // Jimawal
        {354, 354, 355, 355},  // Jé
        {355, 355, 354, 354},  // Dal
        {354, 354, 354, 354},  // Bé
        {354, 354, 354, 354},  // Wawu
        {355, 355, 355, 355},  // Jimakir
    };
    for (int idx = 0; idx < 8; ++idx) {
        for (int rule = 1; rule <= 4; ++rule) {
            CAPTURE(idx);
            CAPTURE(rule);
            CHECK(taun_length_rule(rule, idx) == expected[idx][rule - 1]);
            // Month lengths must sum to the taun length.
            int sum = 0;
            for (int wulan = 1; wulan <= 12; ++wulan) {
                sum += wulan_length_rule(rule, idx, wulan);
            }
            CHECK(sum == taun_length_rule(rule, idx));
        }
    }
    CHECK_THROWS_AS((void)taun_length_rule(0, 0), domain_error);
    CHECK_THROWS_AS((void)taun_length_rule(5, 0), domain_error);
    CHECK_THROWS_AS((void)wulan_length_rule(1, 8, 1), domain_error);
    CHECK_THROWS_AS((void)wulan_length_rule(1, 0, 13), domain_error);
}

TEST_CASE("embedded schedules parse, validate, and compile") {
    for (Court court : {Court::surakarta, Court::yogyakarta}) {
        CAPTURE(to_string(court));
        ScheduleData data = parse_schedule(embedded_schedule_text(court));
        CHECK(data.court == court);
        CHECK(validate_schedule(data).empty());
        CourtSchedule schedule = load_schedule(court);
        CHECK(schedule.court() == court);
        CHECK(schedule.first_taun_aj() == 1555);
        CHECK(schedule.last_taun_aj() == 1986);
        CHECK(schedule.coverage_end_day() == 153085);
        CHECK(schedule.anchors().wuku_anchor == default_wuku_anchor);
        CHECK_FALSE(schedule.anchors().paringkelan_anchor.has_value());
        CHECK(schedule.mulya_rules().size() == 7);
    }
}

TEST_CASE("Surakarta kurup boundaries and the Ehé 1748 shortening") {
    CourtSchedule sur = load_schedule(Court::surakarta);
    CHECK(sur.taun_start(1555) == 0);
    CHECK(sur.taun_start(1675) == 42524);
    CHECK(sur.taun_start(1749) == 68747);
    CHECK(sur.taun_start(1867) == 110562);

    // The decreed shortening: Ehé 1748 loses a day in Besar.
    CHECK(sur.wulan_length(1748, 12) == 29);
    CHECK(sur.taun_length(1748) == 354);
    // An ordinary Ehé for contrast.
    CHECK(sur.wulan_length(1740, 12) == 30);
    CHECK(sur.taun_length(1740) == 355);

    CHECK(sur.kurup_of_taun(1555).name == "Jamingiyah");
    CHECK(sur.kurup_of_taun(1674).ordinal == 1);
    CHECK(sur.kurup_of_taun(1675).name == "Kamsiyah");
    CHECK(sur.kurup_of_taun(1748).short_name == "Amiswon");
    CHECK(sur.kurup_of_taun(1749).short_name == "Aboge");
    CHECK(sur.kurup_of_taun(1866).rule == 3);
    CHECK(sur.kurup_of_taun(1867).short_name == "Asapon");
    CHECK(sur.kurup_of_taun(1986).rule == 4);
}

TEST_CASE("Yogyakarta keeps the long kurup and realigns in 1866") {
    CourtSchedule yog = load_schedule(Court::yogyakarta);
    CHECK(yog.taun_start(1675) == 42524);
    CHECK(yog.taun_start(1795) == 85048);
    CHECK(yog.taun_start(1867) == 110562);
    CHECK(yog.wulan_length(1748, 12) == 30);  // no shortening here
    CHECK(yog.taun_length(1748) == 355);
    CHECK(yog.kurup_of_taun(1794).last_taun_aj == 1794);
    // Both courts place 1 Sura Alip 1867 on the same day: they are
    // reconciled from there on.
    CourtSchedule sur = load_schedule(Court::surakarta);
    CHECK(yog.taun_start(1867) == sur.taun_start(1867));
}

TEST_CASE("a kurup-final Jimakir gets the 29-day Besar") {
    CourtSchedule sur = load_schedule(Court::surakarta);
    CHECK(sur.wulan_length(1674, 12) == 29);
    CHECK(sur.taun_length(1674) == 354);
    CHECK(sur.wulan_length(1866, 12) == 29);
    CHECK(sur.taun_length(1866) == 354);
    CHECK(sur.wulan_length(1986, 12) == 29);
    CHECK(sur.taun_length(1986) == 354);
    // A mid-kurup Jimakir keeps its 355 days.
    CHECK(sur.taun_length(1754) == 355);
    CHECK(sur.wulan_length(1754, 12) == 30);

    CourtSchedule yog = load_schedule(Court::yogyakarta);
    CHECK(yog.taun_length(1794) == 354);
    CHECK(yog.wulan_length(1794, 12) == 29);
    CHECK(yog.taun_length(1866) == 354);
}

TEST_CASE("kurup spans measured three ways") {
    CourtSchedule sur = load_schedule(Court::surakarta);
    auto span_by_sum = [](const CourtSchedule& s, int first, int last) {
        long long sum = 0;
        for (int taun = first; taun <= last; ++taun) sum += s.taun_length(taun);
        return sum;
    };
    CHECK(span_by_sum(sur, 1555, 1674) == 42524);
    CHECK(span_by_sum(sur, 1675, 1748) == 26223);
    CHECK(span_by_sum(sur, 1749, 1866) == 41815);
    CHECK(span_by_sum(sur, 1867, 1986) == 42524);
    CHECK(sur.coverage_end_day() == 42524 + 26223 + 41815 + 42524 - 1);

    CourtSchedule yog = load_schedule(Court::yogyakarta);
    CHECK(span_by_sum(yog, 1675, 1794) == 42524);
    CHECK(span_by_sum(yog, 1795, 1866) == 25514);

    // Against Gregorian day arithmetic on the recorded start dates.
    CHECK(day_number_from_gregorian({1749, 12, 11}) -
              day_number_from_gregorian({1633, 7, 8}) ==
          42524);
    CHECK(day_number_from_gregorian({1821, 9, 28}) -
              day_number_from_gregorian({1749, 12, 11}) ==
          26223);
    CHECK(day_number_from_gregorian({1936, 3, 24}) -
              day_number_from_gregorian({1821, 9, 28}) ==
          41815);
    CHECK(day_number_from_gregorian({1866, 5, 16}) -
              day_number_from_gregorian({1749, 12, 11}) ==
          42524);
    CHECK(day_number_from_gregorian({1936, 3, 24}) -
              day_number_from_gregorian({1866, 5, 16}) ==
          25514);
}

TEST_CASE("every 1 Sura Alip inside a kurup falls on the same weton") {
    for (Court court : {Court::surakarta, Court::yogyakarta}) {
        CourtSchedule schedule = load_schedule(court);
        for (const auto& kurup : schedule.data().kurups) {
            std::optional<DayNumber> residue;
            for (int taun = kurup.first_taun_aj; taun <= kurup.last_taun_aj; ++taun) {
                if (taun_name_index(taun) != 0) continue;
                DayNumber start = schedule.taun_start(taun);
                if (!residue) residue = floor_mod(start, 35);
                CAPTURE(to_string(court));
                CAPTURE(kurup.ordinal);
                CAPTURE(taun);
                CHECK(floor_mod(start, 35) == *residue);
            }
        }
    }
    // And the kurup short names decode to that weton: Surakarta kurup 3 is
    // "Aboge" = Alip + Rêbo Wage.
    CourtSchedule sur = load_schedule(Court::surakarta);
    DayNumber alip_1755 = sur.taun_start(1755);
    CHECK(alip_1755 == 70873);
    CHECK(weekday_index(alip_1755) == 4);  // Rêbo
    CHECK(pasaran_index(alip_1755) == 1);  // Wage
    CourtSchedule yog = load_schedule(Court::yogyakarta);
    CHECK(yog.taun_start(1755) == 70874);  // one day later under the long kurup
}

TEST_CASE("month lookup by day number") {
    CourtSchedule sur = load_schedule(Court::surakarta);
    const auto& first = sur.month_at(0);
    CHECK(first.taun_aj == 1555);
    CHECK(first.wulan_no == 1);
    CHECK(first.start == 0);

    const auto& mid = sur.month_at(45016);
    CHECK(mid.taun_aj == 1682);
    CHECK(mid.wulan_no == 1);
    CHECK(mid.start == 45004);

    const auto& last = sur.month_at(153085);
    CHECK(last.taun_aj == 1986);
    CHECK(last.wulan_no == 12);

    CHECK_THROWS_AS((void)sur.month_at(-1), domain_error);
    CHECK_THROWS_AS((void)sur.month_at(153086), domain_error);
    CHECK(sur.covers_day(0));
    CHECK(sur.covers_day(153085));
    CHECK_FALSE(sur.covers_day(-1));
    CHECK_FALSE(sur.covers_day(153086));
    CHECK(sur.covers_taun(1555));
    CHECK(sur.covers_taun(1986));
    CHECK_FALSE(sur.covers_taun(1554));
    CHECK_FALSE(sur.covers_taun(1987));
    CHECK_THROWS_AS((void)sur.taun_start(1987), domain_error);
    CHECK_THROWS_AS((void)sur.wulan_length(1555, 13), domain_error);
    CHECK_THROWS_AS((void)sur.wulan_length(1555, 0), domain_error);
}

TEST_CASE("months concatenate without gaps or overlaps") {
    for (Court court : {Court::surakarta, Court::yogyakarta}) {
        CourtSchedule schedule = load_schedule(court);
        const auto& months = schedule.months();
        REQUIRE(!months.empty());
        CHECK(months.front().start == 0);
        for (std::size_t i = 1; i < months.size(); ++i) {
            const auto& prev = months[i - 1];
            REQUIRE(months[i].start ==
                    prev.start + schedule.wulan_length(prev.taun_aj, prev.wulan_no));
        }
        const auto& final_month = months.back();
        CHECK(final_month.start +
                  schedule.wulan_length(final_month.taun_aj, final_month.wulan_no) -
                  1 ==
              schedule.coverage_end_day());
        // 432 taun of 12 wulan each.
        CHECK(months.size() == std::size_t(432 * 12));
    }
}

TEST_CASE("schedule text round-trips through the canonical serializer") {
    for (Court court : {Court::surakarta, Court::yogyakarta}) {
        const std::string& text = embedded_schedule_text(court);
        ScheduleData data = parse_schedule(text);
        std::string canonical = serialize_schedule(data);
        CHECK(canonical == text);  // the shipped files are canonical
        CHECK(parse_schedule(canonical) == data);
    }
}

TEST_CASE("non-canonical but well-formed text parses to the same data") {
    std::string text = embedded_schedule_text(Court::surakarta);
    std::string shuffled = "# a comment\n\n" + text + "\n# trailing comment\n";
    CHECK(parse_schedule(shuffled) == parse_schedule(text));
}

TEST_CASE("anchors distinguish absent, none, and a value") {
    ScheduleData data = parse_schedule(embedded_schedule_text(Court::surakarta));
    CHECK(data.anchors.wuku_anchor == 194);

    // Explicit "none" disables the wuku anchor, and survives a round trip.
    std::string text = serialize_schedule(data);
    auto pos = text.find("wuku-anchor: 194");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, std::string("wuku-anchor: 194").size(), "wuku-anchor: none");
    ScheduleData no_anchor = parse_schedule(text);
    CHECK_FALSE(no_anchor.anchors.wuku_anchor.has_value());
    CHECK(serialize_schedule(no_anchor).find("wuku-anchor: none") != std::string::npos);
    CHECK(parse_schedule(serialize_schedule(no_anchor)) == no_anchor);

    // A wholly absent wuku-anchor key means "use the built-in default";
    // it is distinct from "none".  (The compiled default is applied by the
    // parser so that data files stay explicit once serialized.)
    std::string without;
    for (std::size_t i = 0; i < text.size();) {
        auto eol = text.find('\n', i);
        std::string line = text.substr(i, eol - i);
        if (line.find("wuku-anchor") == std::string::npos) {
            without += line;
            without += '\n';
        }
        i = eol + 1;
    }
    ScheduleData defaulted = parse_schedule(without);
    CHECK(defaulted.anchors.wuku_anchor == default_wuku_anchor);

    // Paringkelan anchor parses when present.
    std::string with_paringkelan = without;
    auto court_pos = with_paringkelan.find("court: surakarta\n");
    REQUIRE(court_pos != std::string::npos);
    with_paringkelan.insert(court_pos + std::string("court: surakarta\n").size(),
                            "paringkelan-anchor: 2\n");
    ScheduleData pk = parse_schedule(with_paringkelan);
    CHECK(pk.anchors.paringkelan_anchor == 2);
    CHECK(parse_schedule(serialize_schedule(pk)) == pk);
}

TEST_CASE("parse errors carry line numbers and reasons") {
    auto expect_error = [](std::string_view text, std::string_view needle) {
        CAPTURE(text);
        CAPTURE(needle);
        try {
            (void)parse_schedule(text);
            FAIL_CHECK("expected schedule_error");
        } catch (const schedule_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    expect_error("format: 2\ncourt: surakarta\n", "format");
    expect_error("format: 1\ncourt: mataram\n", "court");
    expect_error("format: 1\ncourt: surakarta\nbogus: 1\n", "bogus");
    expect_error("format: 1\ncourt: surakarta\ncourt: surakarta\n", "duplicate");
    expect_error("format: 1\n", "court");  // missing required key

    std::string base = "format: 1\ncourt: surakarta\ncoverage-end: 2052-08-25\n\n";
    expect_error(base + "name: Jamingiyah\n", "kurup");  // block key before kurup:
    expect_error(base + "kurup: 1\nname: X\nshort-name: Y\nrule: 5\n", "rule");
    expect_error(base +
                     "kurup: 1\nname: X\nshort-name: Y\nrule: 1\n"
                     "first-taun: Alip 1556\n",
                 "Alip");  // 1556 is not an Alip year
    // Header keys may not reappear once a kurup block has opened.
    expect_error(base +
                     "kurup: 1\nname: X\nshort-name: Y\nrule: 1\n"
                     "first-taun: Alip 1555\nlast-taun: Jimakir 1674\n"
                     "start-date: 1633-07-08\ncourt: surakarta\n",
                 "precede");
    expect_error(base +
                     "kurup: 1\nname: X\nshort-name: Y\nrule: 1\n"
                     "first-taun: Alip 1555\nlast-taun: Jimakir 1674\n"
                     "start-date: 1633-07-08\nadjust: 1600 1 28\n",
                 "29 or 30");
    expect_error(base +
                     "kurup: 1\nname: X\nshort-name: Y\nrule: 1\n"
                     "first-taun: Alip 1555\nlast-taun: Jimakir 1674\n"
                     "start-date: 1633-7-08\n",
                 "date");
    expect_error(base +
                     "kurup: 1\nname: X\nshort-name: Y\nrule: 1\n"
                     "first-taun: Alip 1555\nlast-taun: Jimakir 1674\n"
                     "start-date: 1633-07-08\nmulya: Foo |\n",
                 "condition");
    expect_error(base +
                     "kurup: 1\nname: X\nshort-name: Y\nrule: 1\n"
                     "first-taun: Alip 1555\nlast-taun: Jimakir 1674\n"
                     "start-date: 1633-07-08\nmulya: Foo | moon=full\n",
                 "moon");
}

TEST_CASE("validation findings pinpoint arithmetic violations") {
    ScheduleData good = parse_schedule(embedded_schedule_text(Court::surakarta));
    REQUIRE(validate_schedule(good).empty());

    SUBCASE("a wrong start date breaks the checksum") {
        ScheduleData bad = good;
        bad.kurups[2].start_date = {1821, 9, 29};
        CHECK(any_contains(validate_schedule(bad), "start"));
    }
    SUBCASE("an adjustment outside its kurup's range is flagged") {
        ScheduleData bad = good;
        bad.kurups[0].adjustments.push_back({1700, 1, 29});
        CHECK(any_contains(validate_schedule(bad), "adjustment"));
    }
    SUBCASE("a gap in the taun ranges is structural") {
        ScheduleData bad = good;
        bad.kurups[1].first_taun_aj = 1676;
        CHECK_FALSE(validate_schedule(bad).empty());
    }
    SUBCASE("the chronology must open at AJ 1555") {
        ScheduleData bad = good;
        bad.kurups[0].first_taun_aj = 1547;
        CHECK_FALSE(validate_schedule(bad).empty());
    }
    SUBCASE("a stray adjustment upsets the windu sums") {
        ScheduleData bad = good;
        bad.kurups[3].adjustments.push_back({1900, 1, 29});
        auto findings = validate_schedule(bad);
        CHECK(any_contains(findings, "windu"));
        CHECK(any_contains(findings, "coverage"));
    }
    SUBCASE("shifting an Alip start breaks the weton invariant") {
        ScheduleData bad = good;
        bad.kurups[3].adjustments.push_back({1867, 1, 29});
        auto findings = validate_schedule(bad);
        CHECK(any_contains(findings, "Sura"));
    }
    SUBCASE("coverage-end must match the compiled final day") {
        ScheduleData bad = good;
        bad.coverage_end = GregorianDate{2052, 8, 24};
        CHECK(any_contains(validate_schedule(bad), "coverage"));
    }
    SUBCASE("duplicate noble-day names are rejected") {
        ScheduleData bad = good;
        bad.mulya_rules.push_back(bad.mulya_rules.front());
        CHECK_FALSE(validate_schedule(bad).empty());
    }
    SUBCASE("compile_schedule throws with the findings joined") {
        ScheduleData bad = good;
        bad.kurups[2].start_date = {1821, 9, 29};
        CHECK_THROWS_AS((void)compile_schedule(bad), schedule_error);
    }
}

TEST_CASE("loading a schedule from an external file") {
    std::string path = "/tmp/javacal_test_schedule.txt";
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << embedded_schedule_text(Court::yogyakarta);
    }
    CourtSchedule from_file = load_schedule_file(path);
    CHECK(from_file.court() == Court::yogyakarta);
    CHECK(from_file.taun_start(1795) == 85048);
    std::remove(path.c_str());

    CHECK_THROWS_AS((void)load_schedule_file("/tmp/javacal_no_such_file.txt"),
                    schedule_error);
}

TEST_CASE("court names parse and print") {
    CHECK(to_string(Court::surakarta) == std::string("surakarta"));
    CHECK(to_string(Court::yogyakarta) == std::string("yogyakarta"));
    CHECK(court_from_string("surakarta") == Court::surakarta);
    CHECK(court_from_string("Solo") == Court::surakarta);
    CHECK(court_from_string("YOGYAKARTA") == Court::yogyakarta);
    CHECK(court_from_string("jogjakarta") == Court::yogyakarta);
    CHECK(court_from_string("yogya") == Court::yogyakarta);
    CHECK_FALSE(court_from_string("mataram").has_value());
}

#include "javacal/record_io.hpp"

#include <sstream>

#include "javacal/names.hpp"

namespace javacal {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& parts, std::string_view separator) {
    std::string out;
    for (const auto& part : parts) {
        if (!out.empty()) out += separator;
        out += part;
    }
    return out;
}

// Quotes a CSV field only when needed (comma, quote, or newline inside).
std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

ordered_json record_to_json(const FullDayRecord& record) {
    ordered_json out;
    out["schema_version"] = output_schema_version;
    out["gregorian"] = to_iso(record.gregorian);
    out["day_number"] = record.day_number;
    out["weekday"] = {
        {"index", record.weton.dinapitu},
        {"name", names::dinapitu[std::size_t(record.weton.dinapitu)]},
        {"padinan", names::padinan[std::size_t(record.weton.dinapitu)]},
    };
    out["pasaran"] = {
        {"index", record.weton.pasaran},
        {"ngoko", names::pasaran_ngoko[std::size_t(record.weton.pasaran)]},
        {"krama", names::pasaran_krama[std::size_t(record.weton.pasaran)]},
    };
    out["weton_name"] = names::weton_name(record.weton);
    if (record.wuku) {
        out["wuku"] = {{"index", *record.wuku},
                       {"name", names::wuku[std::size_t(*record.wuku)]}};
    } else {
        out["wuku"] = nullptr;
    }
    if (record.paringkelan) {
        out["paringkelan"] = {{"index", *record.paringkelan},
                              {"name", names::paringkelan[std::size_t(*record.paringkelan)]}};
    } else {
        out["paringkelan"] = nullptr;
    }
    if (record.javanese) {
        const auto& jd = *record.javanese;
        out["javanese"] = {
            {"dina", jd.dina},
            {"wulan_no", jd.wulan_no},
            {"wulan_name", wulan_name(jd)},
            {"taun_aj", jd.taun_aj},
            {"taun_name", taun_name(jd)},
            {"windu", windu_name(jd)},
            {"lambang", lambang_name(jd)},
            {"kurup_no", jd.kurup_ordinal},
            {"kurup_name", jd.kurup_name},
            {"court", to_string(jd.court)},
        };
    } else {
        out["javanese"] = nullptr;
    }
    out["dina_mulya"] = record.dina_mulya;
    out["warnings"] = record.warnings;
    return out;
}

std::string csv_header() {
    return "gregorian,day_number,weekday_index,weekday_name,padinan,"
           "pasaran_index,pasaran_ngoko,pasaran_krama,weton_name,"
           "wuku_index,wuku_name,paringkelan_index,paringkelan_name,"
           "dina,wulan_no,wulan_name,taun_aj,taun_name,windu,lambang,"
           "kurup_no,kurup_name,court,dina_mulya,warnings";
}

std::string record_to_csv(const FullDayRecord& record) {
    std::vector<std::string> cells;
    cells.reserve(25);
    cells.push_back(to_iso(record.gregorian));
    cells.push_back(std::to_string(record.day_number));
    cells.push_back(std::to_string(record.weton.dinapitu));
    cells.emplace_back(names::dinapitu[std::size_t(record.weton.dinapitu)]);
    cells.emplace_back(names::padinan[std::size_t(record.weton.dinapitu)]);
    cells.push_back(std::to_string(record.weton.pasaran));
    cells.emplace_back(names::pasaran_ngoko[std::size_t(record.weton.pasaran)]);
    cells.emplace_back(names::pasaran_krama[std::size_t(record.weton.pasaran)]);
    cells.push_back(names::weton_name(record.weton));
    if (record.wuku) {
        cells.push_back(std::to_string(*record.wuku));
        cells.emplace_back(names::wuku[std::size_t(*record.wuku)]);
    } else {
        cells.emplace_back();
        cells.emplace_back();
    }
    if (record.paringkelan) {
        cells.push_back(std::to_string(*record.paringkelan));
        cells.emplace_back(names::paringkelan[std::size_t(*record.paringkelan)]);
    } else {
        cells.emplace_back();
        cells.emplace_back();
    }
    if (record.javanese) {
        const auto& jd = *record.javanese;
        cells.push_back(std::to_string(jd.dina));
        cells.push_back(std::to_string(jd.wulan_no));
        cells.emplace_back(wulan_name(jd));
        cells.push_back(std::to_string(jd.taun_aj));
        cells.emplace_back(taun_name(jd));
        cells.emplace_back(windu_name(jd));
        cells.emplace_back(lambang_name(jd));
        cells.push_back(std::to_string(jd.kurup_ordinal));
        cells.push_back(jd.kurup_name);
        cells.emplace_back(to_string(jd.court));
    } else {
        for (int i = 0; i < 10; ++i) cells.emplace_back();
    }
    cells.push_back(join(record.dina_mulya, "; "));
    cells.push_back(join(record.warnings, "; "));

    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += csv_field(cells[i]);
    }
    return out;
}

std::string record_to_text(const FullDayRecord& record) {
    std::ostringstream out;
    out << "gregorian:   " << to_iso(record.gregorian) << " ("
        << names::weekday_english[std::size_t(record.weton.dinapitu)] << ")\n";
    out << "day number:  " << record.day_number << "\n";
    out << "weton:       " << names::weton_name(record.weton) << " ("
        << names::padinan[std::size_t(record.weton.dinapitu)] << " "
        << names::pasaran_krama[std::size_t(record.weton.pasaran)] << ")\n";
    if (record.wuku) {
        out << "wuku:        " << names::wuku[std::size_t(*record.wuku)] << "\n";
    }
    if (record.paringkelan) {
        out << "paringkelan: " << names::paringkelan[std::size_t(*record.paringkelan)]
            << "\n";
    }
    if (record.javanese) {
        const auto& jd = *record.javanese;
        out << "javanese:    " << jd.dina << " " << wulan_name(jd) << " " << taun_name(jd)
            << " " << jd.taun_aj << " AJ\n";
        out << "windu:       " << windu_name(jd) << " (lambang " << lambang_name(jd)
            << ")\n";
        out << "kurup:       " << jd.kurup_ordinal << " (" << jd.kurup_name << "), court "
            << to_string(jd.court) << "\n";
    } else {
        out << "javanese:    (undecided: beyond the known kurup chronology)\n";
    }
    out << "dina mulya:  "
        << (record.dina_mulya.empty() ? "none" : join(record.dina_mulya, ", ")) << "\n";
    for (const auto& warning : record.warnings) {
        out << "warning:     " << warning << "\n";
    }
    return out.str();
}

}  // namespace javacal

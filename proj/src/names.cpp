#include "javacal/names.hpp"

#include <algorithm>
#include <cctype>

namespace javacal::names {

namespace {

// Appends one folded byte sequence: ASCII is lower-cased, the two-byte UTF-8
// encodings of ê/é/è (and capitals) collapse to 'e'.
void fold_into(std::string& out, std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char b = static_cast<unsigned char>(text[i]);
        if (b == 0xC3 && i + 1 < text.size()) {
            unsigned char next = static_cast<unsigned char>(text[i + 1]);
            // U+00E8..U+00EA (è é ê) and U+00C8..U+00CA (È É Ê)
            if ((next >= 0xA8 && next <= 0xAA) || (next >= 0x88 && next <= 0x8A)) {
                out.push_back('e');
                ++i;
                continue;
            }
        }
        out.push_back(static_cast<char>(std::tolower(b)));
    }
}

template <std::size_t N>
std::optional<int> find_folded(const std::array<std::string_view, N>& table,
                               const std::string& folded) {
    for (std::size_t i = 0; i < N; ++i) {
        if (fold_name(table[i]) == folded) return static_cast<int>(i);
    }
    return std::nullopt;
}

}  // namespace

std::string fold_name(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    fold_into(out, text);
    return out;
}

std::string weton_name(Weton weton) {
    std::string out{dinapitu[static_cast<std::size_t>(weton.dinapitu)]};
    out += ' ';
    out += pasaran_ngoko[static_cast<std::size_t>(weton.pasaran)];
    return out;
}

std::optional<int> parse_dinapitu(std::string_view name) {
    std::string folded = fold_name(name);
    // Variant spellings and the Indonesian weekday names.
    if (folded == "slasa") folded = "selasa";
    if (folded == "jumungah" || folded == "jumat" || folded == "jumahat") folded = "jemuwah";
    if (folded == "ahad" || folded == "minggu") folded = "ngahad";
    if (folded == "senin") folded = "senen";
    if (folded == "rabu") folded = "rebo";
    if (folded == "kamis") folded = "kemis";
    if (folded == "sabtu") folded = "setu";
    if (auto idx = find_folded(dinapitu, folded)) return idx;
    return find_folded(padinan, folded);
}

std::optional<int> parse_pasaran(std::string_view name) {
    std::string folded = fold_name(name);
    if (folded == "paing") folded = "pahing";
    if (auto idx = find_folded(pasaran_ngoko, folded)) return idx;
    return find_folded(pasaran_krama, folded);
}

std::optional<int> parse_wuku(std::string_view name) {
    return find_folded(wuku, fold_name(name));
}

std::optional<int> parse_wulan(std::string_view name) {
    std::string folded = fold_name(name);
    if (folded == "sela") folded = "dulkangidah";
    return find_folded(wulan, folded);
}

std::optional<int> parse_taun_name(std::string_view name) {
    std::string folded = fold_name(name);
    if (auto idx = find_folded(taun, folded)) return idx;
    return find_folded(taun_krama, folded);
}

std::optional<Weton> parse_weton(std::string_view text) {
    // Split on the first run of separators; both halves must parse.
    constexpr std::string_view separators = " ,-\t";
    std::size_t cut = text.find_first_of(separators);
    if (cut == std::string_view::npos) return std::nullopt;
    std::size_t rest = text.find_first_not_of(separators, cut);
    if (rest == std::string_view::npos) return std::nullopt;
    auto day = parse_dinapitu(text.substr(0, cut));
    auto market = parse_pasaran(text.substr(rest));
    if (!day || !market) return std::nullopt;
    return Weton{*day, *market};
}

std::string list_weton_names() {
    std::string out;
    for (std::size_t d = 0; d < dinapitu.size(); ++d) {
        for (std::size_t p = 0; p < pasaran_ngoko.size(); ++p) {
            if (!out.empty()) out += ", ";
            out += dinapitu[d];
            out += ' ';
            out += pasaran_ngoko[p];
        }
    }
    return out;
}

}  // namespace javacal::names

namespace javacal {

const char* to_string(Court court) {
    return court == Court::surakarta ? "surakarta" : "yogyakarta";
}

std::optional<Court> court_from_string(std::string_view name) {
    std::string folded = names::fold_name(name);
    if (folded == "surakarta" || folded == "solo") return Court::surakarta;
    if (folded == "yogyakarta" || folded == "jogjakarta" || folded == "yogya") {
        return Court::yogyakarta;
    }
    return std::nullopt;
}

}  // namespace javacal

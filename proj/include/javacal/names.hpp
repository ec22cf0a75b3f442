// Name tables for every cycle, plus tolerant parsing of user-supplied names.
//
// Spellings follow the forms used in Javanese almanacs; parsing is
// case-insensitive, ignores the ê/é/è diacritics, and accepts the common
// variant spellings (Paing/Pahing, Slasa/Selasa, Jumungah/Jemuwah,
// Ahad/Ngahad), the Krama register, the padinan day names, and the Indonesian
// weekday names.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "javacal/types.hpp"

namespace javacal::names {

// 7-day week, Saturday-based to match the weekday congruence.
inline constexpr std::array<std::string_view, 7> dinapitu = {
    "Sêtu", "Ngahad", "Sênèn", "Selasa", "Rêbo", "Kêmis", "Jemuwah"};
inline constexpr std::array<std::string_view, 7> padinan = {
    "Tumpak", "Dite", "Soma", "Anggara", "Buda", "Respati", "Sukra"};
inline constexpr std::array<std::string_view, 7> weekday_english = {
    "Saturday", "Sunday", "Monday", "Tuesday", "Wednesday", "Thursday", "Friday"};

// 5-day market week, Pon-based to match the pasaran congruence.
inline constexpr std::array<std::string_view, 5> pasaran_ngoko = {
    "Pon", "Wage", "Kliwon", "Lêgi", "Pahing"};
inline constexpr std::array<std::string_view, 5> pasaran_krama = {
    "Petak", "Cemeng", "Asih", "Manis", "Pahit"};

// 30 wuku of the 210-day pawukon cycle, in cycle order.
inline constexpr std::array<std::string_view, 30> wuku = {
    "Sinta",      "Landep",       "Wukir",       "Kurantil",    "Tolu",
    "Gumbreg",    "Warigalit",    "Warigagung",  "Julungwangi", "Sungsang",
    "Galungan",   "Kuningan",     "Langkir",     "Mandasiya",   "Julungpujut",
    "Pahang",     "Kuruwelut",    "Marakeh",     "Tambir",      "Medangkungan",
    "Maktal",     "Wuye",         "Manahil",     "Prangbakat",  "Bala",
    "Wugu",       "Wayang",       "Kulawu",      "Dukut",       "Watugunung"};

// 12 wulan (lunar months) of a taun.
inline constexpr std::array<std::string_view, 12> wulan = {
    "Sura",        "Sapar",       "Mulud",      "Bakdamulud",
    "Jumadilawal", "Jumadilakir", "Rejeb",      "Ruwah",
    "Pasa",        "Sawal",       "Dulkangidah", "Besar"};

// 8 taun of a windu, in windu order; index = (taun_aj - 1555) mod 8.
inline constexpr std::array<std::string_view, 8> taun = {
    "Alip", "Ehé", "Jimawal", "Jé", "Dal", "Bé", "Wawu", "Jimakir"};
inline constexpr std::array<std::string_view, 8> taun_krama = {
    "Purwana", "Karyana", "Anama", "Lalana", "Ngawanga", "Pawaka", "Wasana", "Swasana"};

// 4-windu name cycle and the alternating 2-windu lambang cycle.
inline constexpr std::array<std::string_view, 4> windu = {
    "Adi", "Kuntara", "Sêngara", "Sancaya"};
inline constexpr std::array<std::string_view, 2> lambang = {
    "Langkir", "Kulawu"};

// 6-day paringkelan cycle (reported only when an anchor is configured).
inline constexpr std::array<std::string_view, 6> paringkelan = {
    "Tungle", "Aryang", "Wurukung", "Paningron", "Uwas", "Mawulu"};

// 8-day padewan and 9-day padangon cycles.  Name data only: no anchored
// computation for these cycles is provided.
inline constexpr std::array<std::string_view, 8> padewan = {
    "Sri", "Indra", "Guru", "Yama", "Rudra", "Brama", "Kala", "Uma"};
inline constexpr std::array<std::string_view, 9> padangon = {
    "Dangu", "Jagur", "Gigis", "Kerangan", "Nohan", "Wogan", "Tulus", "Wurung", "Dadi"};

// "Jemuwah Lêgi" style display name for a weton.
std::string weton_name(Weton weton);

// Lower-cases ASCII and folds the UTF-8 diacritics used by the name tables
// (ê é è and their capitals) to plain "e".  Other bytes pass through.
std::string fold_name(std::string_view text);

// Parsers return the cycle index, or nullopt for unrecognized names.
std::optional<int> parse_dinapitu(std::string_view name);
std::optional<int> parse_pasaran(std::string_view name);
std::optional<int> parse_wuku(std::string_view name);
std::optional<int> parse_wulan(std::string_view name);      // accepts alias "Sela" for Dulkangidah
std::optional<int> parse_taun_name(std::string_view name);

// Parses "Selasa Kliwon" / "selasa,kliwon" / "Anggara Asih" etc.: a dinapitu
// (or padinan/Indonesian) name and a pasaran (Ngoko or Krama) name separated
// by spaces, commas, or hyphens, in that order.
std::optional<Weton> parse_weton(std::string_view text);

// One line listing every accepted weton combination, for error messages.
std::string list_weton_names();

}  // namespace javacal::names

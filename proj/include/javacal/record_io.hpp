// Serialization of FullDayRecord to the three CLI output formats.
//
// The JSON layout is versioned (schema_version, currently "1") and stable:
// every field is always present, with explicit null for unavailable optional
// parts, so consumers never need existence checks.  CSV flattens the same
// fields into fixed columns (empty cell = null); text is the human format.

#pragma once

#include <string>

#include <json.hpp>

#include "javacal/engine.hpp"

namespace javacal {

inline constexpr std::string_view output_schema_version = "1";

// Keys keep declaration order (ordered_json) so output is stable and diffable.
nlohmann::ordered_json record_to_json(const FullDayRecord& record);
std::string record_to_text(const FullDayRecord& record);

// Header line and one data row, both without trailing newline.
std::string csv_header();
std::string record_to_csv(const FullDayRecord& record);

}  // namespace javacal

#pragma once

// Internal helpers shared by the JSON-facing translation units. Keeps the
// vendored nlohmann header out of the public include surface.

#include <json.hpp>
#include <string>

#include "feqs/parse_error.hpp"

namespace feqs::detail {

using Json = nlohmann::ordered_json;

/// Parses with nlohmann and rethrows syntax errors as ParseError with the
/// byte offset converted to line/column.
Json parse_json(const std::string& text);

/// Line/column of a byte offset in text (1-based).
std::pair<int, int> offset_to_line_col(const std::string& text, size_t offset);

}  // namespace feqs::detail

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qx::csv {

// Splits one record. Fields may be double-quoted, with "" as an escaped quote.
// Throws std::invalid_argument on an unterminated quote.
std::vector<std::string> split_record(std::string_view line);

// Quotes a field when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

std::string join_record(const std::vector<std::string>& fields);

}  // namespace qx::csv

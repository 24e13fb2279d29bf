#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fincomp::csv {

/// Splits one line into fields. Double-quoted fields may contain commas and
/// doubled quotes.
std::vector<std::string> parse_line(std::string_view line);

/// Reads a whole file as rows of fields. Lines starting with '#' are
/// comments and skipped; a leading UTF-8 BOM and trailing CR are stripped.
std::vector<std::vector<std::string>> read_file(const std::filesystem::path& path);

/// Locale-independent double parse of a whole trimmed field. Empty fields
/// yield nullopt (the missing marker); anything else that does not fully
/// parse is an error reported with the given 1-based row/column.
std::optional<double> parse_cell(std::string_view field, std::size_t row, std::size_t col);

} // namespace fincomp::csv

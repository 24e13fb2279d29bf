#include "fincomp/csv.hpp"

#include <cctype>
#include <charconv>
#include <fstream>

#include "fincomp/errors.hpp"

namespace fincomp::csv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

std::vector<std::string> parse_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::vector<std::vector<std::string>> read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::io_error, "cannot open file: " + path.string());
    }
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
            line.erase(0, 3);
        }
        first = false;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') continue;
        rows.push_back(parse_line(line));
    }
    return rows;
}

std::optional<double> parse_cell(std::string_view field, std::size_t row, std::size_t col) {
    std::string_view s = trim(field);
    if (s.empty()) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1); // from_chars rejects a leading plus
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw Error(errc::parse_error, "row " + std::to_string(row) + ", column " +
                                           std::to_string(col) + ": not a number: '" +
                                           std::string(field) + "'");
    }
    return value;
}

} // namespace fincomp::csv

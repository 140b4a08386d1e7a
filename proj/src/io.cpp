#include "tipforge/io.hpp"

#include <cerrno>
#include <cstdlib>
#include <vector>

#include <json.hpp>

namespace tipforge {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_blank(s[b])) ++b;
    while (e > b && is_blank(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

/// Splits on '\n' and ';', dropping rows that are empty after trimming.
/// Each row keeps its 1-based source line for error messages.
std::vector<std::pair<int, std::string>> split_rows(std::string_view text) {
    std::vector<std::pair<int, std::string>> rows;
    int line = 1;
    std::string current;
    auto flush = [&] {
        std::string t = trim(current);
        if (!t.empty()) rows.emplace_back(line, std::move(t));
        current.clear();
    };
    for (char c : text) {
        if (c == '\n' || c == ';') {
            flush();
            if (c == '\n') ++line;
        } else {
            current += c;
        }
    }
    flush();
    return rows;
}

Matrix parse_csv(std::string_view text) {
    const auto rows = split_rows(normalize_minus(text));
    if (rows.empty()) throw ParseError("matrix text is empty");
    std::vector<std::vector<double>> values;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string& row = rows[r].second;
        std::vector<double> parsed;
        std::size_t start = 0;
        int column = 1;
        while (true) {
            const std::size_t comma = row.find(',', start);
            const std::string field = trim(std::string_view(row).substr(start, comma - start));
            if (field.empty()) throw ParseError("empty field", static_cast<int>(r + 1), column);
            char* end = nullptr;
            errno = 0;
            const double v = std::strtod(field.c_str(), &end);
            if (end != field.c_str() + field.size() || errno == ERANGE)
                throw ParseError("'" + field + "' is not a number", static_cast<int>(r + 1), column);
            parsed.push_back(v);
            if (comma == std::string::npos) break;
            start = comma + 1;
            ++column;
        }
        values.push_back(std::move(parsed));
    }
    const std::size_t n = values.size();
    for (std::size_t r = 0; r < n; ++r)
        if (values[r].size() != n)
            throw DimensionMismatch("row " + std::to_string(r + 1) + " has " + std::to_string(values[r].size()) +
                                    " entries, expected " + std::to_string(n));
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = values[r][c];
    require_square_finite(m);
    return m;
}

Matrix parse_json(std::string_view raw) {
    const std::string text = normalize_minus(raw);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Convert the byte offset into a line/column pair.
        int line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed JSON", line, column);
    }
    if (!doc.is_object() || !doc.contains("entries"))
        throw ParseError("matrix JSON must be an object with an \"entries\" array");
    const auto& entries = doc["entries"];
    if (!entries.is_array() || entries.empty()) throw ParseError("\"entries\" must be a nonempty array");
    const std::size_t n = entries.size();
    if (doc.contains("n")) {
        if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
        if (doc["n"].get<long long>() != static_cast<long long>(n))
            throw DimensionMismatch("\"n\" is " + doc["n"].dump() + " but entries has " + std::to_string(n) +
                                    " rows");
    }
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto& row = entries[r];
        if (!row.is_array()) throw ParseError("row is not an array", static_cast<int>(r + 1), 1);
        if (row.size() != n)
            throw DimensionMismatch("row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                                    " entries, expected " + std::to_string(n));
        for (std::size_t c = 0; c < n; ++c) {
            if (!row[c].is_number())
                throw ParseError("entry is not a number", static_cast<int>(r + 1), static_cast<int>(c + 1));
            m(r, c) = row[c].get<double>();
        }
    }
    require_square_finite(m);
    return m;
}

}  // namespace

std::string normalize_minus(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        if (text.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
            out += '-';
            i += kUnicodeMinus.size();
        } else {
            out += text[i++];
        }
    }
    return out;
}

MatrixFormat detect_matrix_format(std::string_view text) {
    for (char c : text) {
        if (is_blank(c) || c == '\n') continue;
        return c == '{' ? MatrixFormat::Json : MatrixFormat::Csv;
    }
    return MatrixFormat::Csv;
}

Matrix parse_matrix(std::string_view text, MatrixFormat format) {
    return format == MatrixFormat::Json ? parse_json(text) : parse_csv(text);
}

SignPattern parse_pattern(std::string_view raw) {
    const auto rows = split_rows(normalize_minus(raw));
    if (rows.empty()) throw ParseError("sign pattern is empty");
    const int n = static_cast<int>(rows.size());
    std::vector<int> signs;
    signs.reserve(n * n);
    for (int r = 0; r < n; ++r) {
        int width = 0;
        const std::string& row = rows[r].second;
        for (std::size_t i = 0; i < row.size(); ++i) {
            const char c = row[i];
            if (is_blank(c)) continue;
            ++width;
            if (c == '-')
                signs.push_back(-1);
            else if (c == '+')
                signs.push_back(1);
            else if (c == '0')
                signs.push_back(0);
            else
                throw ParseError(std::string("unexpected character '") + c + "' in sign pattern", r + 1, width);
        }
        if (width != n)
            throw ParseError("row has " + std::to_string(width) + " signs, expected " + std::to_string(n), r + 1,
                             width);
    }
    return {n, std::move(signs)};
}

}  // namespace tipforge

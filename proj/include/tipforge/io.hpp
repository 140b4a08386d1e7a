#pragma once

#include <string>
#include <string_view>

#include "cycles.hpp"
#include "linalg.hpp"

namespace tipforge {

enum class MatrixFormat { Json, Csv };

/// JSON `{"n": k, "entries": [[...], ...]}` or CSV with k rows of k numbers
/// (rows split by newline or ';'). Unicode minus signs are accepted.
Matrix parse_matrix(std::string_view text, MatrixFormat format);

/// Json when the first non-blank character is '{', Csv otherwise.
MatrixFormat detect_matrix_format(std::string_view text);

/// Rows of '+', '-', '0' separated by ';' or newlines; blanks are ignored and
/// the Unicode minus sign counts as '-'.
SignPattern parse_pattern(std::string_view text);

/// Replaces every U+2212 MINUS SIGN with an ASCII hyphen.
std::string normalize_minus(std::string_view text);

}  // namespace tipforge

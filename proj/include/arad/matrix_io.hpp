#pragma once

#include <string>
#include <string_view>

#include "arad/matrix.hpp"

namespace arad {

/// {"rows": r, "cols": c, "re": [[...]], "im": [[...]]}
/// Numbers are written as shortest round-trip decimals, so reading back gives
/// the same doubles. Throws ParseError on malformed or non-finite input.
ComplexMatrix parse_matrix_json(std::string_view text);
std::string matrix_to_json(const ComplexMatrix& m);

ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

/// Whole file as a string. Throws ParseError if it cannot be opened.
std::string read_text_file(const std::string& path);
/// Throws ParseError if it cannot be written.
void write_text_file(const std::string& path, std::string_view text);

}  // namespace arad

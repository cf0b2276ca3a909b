#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "opmeans/matrix.hpp"

namespace opmeans {

/// Matrix file format: {"n": n, "entries": [[re, im], ...]} with n*n pairs in
/// row-major order.
std::string matrix_to_json(const ComplexMatrix& m);

/// Throws Error(Parse) naming `source` and the offending field on malformed
/// input, wrong entry counts, or non-finite numbers.
ComplexMatrix matrix_from_json(std::string_view text, std::string_view source = "<input>");

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

/// Whole-file helpers shared with the report writers. Throw Error(Io).
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace opmeans

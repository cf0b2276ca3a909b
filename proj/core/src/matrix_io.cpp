#include "opmeans/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "opmeans/error.hpp"

namespace opmeans {

using nlohmann::json;
using nlohmann::ordered_json;

std::string matrix_to_json(const ComplexMatrix& m) {
  ordered_json entries = ordered_json::array();
  for (const Complex& z : m.entries()) entries.push_back(ordered_json::array({z.real(), z.imag()}));
  ordered_json doc;
  doc["n"] = m.dim();
  doc["entries"] = std::move(entries);
  return doc.dump() + "\n";
}

namespace {

[[noreturn]] void parse_fail(std::string_view source, std::string_view field,
                             const std::string& why) {
  throw Error(ErrorCode::Parse,
              std::string(source) + ": field '" + std::string(field) + "': " + why);
}

double finite_number(const json& v, std::string_view source, const std::string& field) {
  if (!v.is_number()) parse_fail(source, field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) parse_fail(source, field, "non-finite value");
  return x;
}

}  // namespace

ComplexMatrix matrix_from_json(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(source, "<document>", e.what());
  }
  if (!doc.is_object()) parse_fail(source, "<document>", "expected a JSON object");
  if (!doc.contains("n")) parse_fail(source, "n", "missing");
  const json& jn = doc["n"];
  if (!jn.is_number_integer() || jn.get<long long>() < 1)
    parse_fail(source, "n", "expected a positive integer");
  const auto n = static_cast<std::size_t>(jn.get<long long>());

  if (!doc.contains("entries")) parse_fail(source, "entries", "missing");
  const json& je = doc["entries"];
  if (!je.is_array()) parse_fail(source, "entries", "expected an array");
  if (je.size() != n * n) {
    parse_fail(source, "entries",
               "expected " + std::to_string(n * n) + " [re, im] pairs, got " +
                   std::to_string(je.size()));
  }
  std::vector<Complex> values;
  values.reserve(n * n);
  for (std::size_t k = 0; k < je.size(); ++k) {
    const std::string field = "entries[" + std::to_string(k) + "]";
    const json& pair = je[k];
    if (!pair.is_array() || pair.size() != 2) parse_fail(source, field, "expected [re, im]");
    values.emplace_back(finite_number(pair[0], source, field + "[0]"),
                        finite_number(pair[1], source, field + "[1]"));
  }
  return ComplexMatrix(n, std::move(values));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  return matrix_from_json(read_text_file(path), path.string());
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  write_text_file(path, matrix_to_json(m));
}

}  // namespace opmeans

#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cobz/errors.hpp"
#include "cobz/matrix.hpp"
#include "cobz/numbers.hpp"

namespace cobz {

// Parses "p" or "p/q" exactly: integer numerator, positive integer
// denominator, no decimals, no rounding.
inline Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num))
    throw Error("rational '" + std::string(text) + "': numerator is not an integer");
  if (slash == std::string_view::npos) return Rational(Int(std::string(num)));
  const std::string_view den = text.substr(slash + 1);
  if (den.empty() || den.front() == '-' || !is_integer_literal(den))
    throw Error("rational '" + std::string(text) + "': denominator is not a positive integer");
  const Int d{std::string(den)};
  if (d == 0) throw Error("rational '" + std::string(text) + "': denominator is zero");
  return Rational(Int(std::string(num))) / Rational(d);
}

/**
 * Reads the matrix input document:
 *
 *   { "dim": 2, "entries": [["1", "0"], ["0", "3/2"]] }
 *
 * entries is a dim x dim array of exact rationals written as "p/q" or "n"
 * strings. Anything inexact (floats, strings like "1.5") is rejected.
 * JSON syntax errors are reported with line and column.
 */
inline MatrixMorphism parse_matrix_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Recover line/column from the byte offset for a readable message.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SyntaxError(e.byte, {"valid JSON"},
                      "matrix file: line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": " + e.what());
  }

  if (!doc.is_object()) throw Error("matrix file: top level must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "dim" && key != "entries")
      throw Error("matrix file: unknown field '" + key + "' (expected 'dim' and 'entries')");
  if (!doc.contains("dim") || !doc.contains("entries"))
    throw Error("matrix file: fields 'dim' and 'entries' are required");

  const nlohmann::json& dim_field = doc["dim"];
  if (!dim_field.is_number_unsigned())
    throw Error("matrix file: 'dim' must be a natural number");
  const std::size_t dim = dim_field.get<std::size_t>();

  const nlohmann::json& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != dim)
    throw Error("matrix file: 'entries' must be an array of " + std::to_string(dim) + " rows");
  MatrixMorphism m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const nlohmann::json& row = entries[i];
    if (!row.is_array() || row.size() != dim)
      throw Error("matrix file: entries[" + std::to_string(i) + "] must be an array of " +
                  std::to_string(dim) + " strings");
    for (std::size_t j = 0; j < dim; ++j) {
      const nlohmann::json& cell = row[j];
      if (!cell.is_string())
        throw Error("matrix file: entries[" + std::to_string(i) + "][" + std::to_string(j) +
                    "] must be a rational written as a string (\"p/q\" or \"n\")");
      try {
        m.at(i, j) = parse_rational(cell.get<std::string>());
      } catch (const Error& e) {
        throw Error("matrix file: entries[" + std::to_string(i) + "][" + std::to_string(j) +
                    "]: " + e.what());
      }
    }
  }
  return m;
}

inline MatrixMorphism load_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("matrix file: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_document(buffer.str());
}

}  // namespace cobz

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "permderiv/common.hpp"

namespace permderiv {

/// Malformed matrix or report input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix text format: a JSON list of rows, each row a list of entries. An entry
// is [re, im] or a bare real number. Output always uses [re, im].

Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);

Matrix parse_matrix(const std::string& text);
Matrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

nlohmann::json complex_to_json(Complex z);

}  // namespace permderiv

#include "permderiv/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace permderiv {

namespace {

double finite_number(const nlohmann::json& v, std::size_t r, std::size_t c) {
  if (!v.is_number()) {
    std::ostringstream os;
    os << "entry (" << r + 1 << "," << c + 1 << "): expected a number, got " << v.dump();
    throw ParseError(os.str());
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    std::ostringstream os;
    os << "entry (" << r + 1 << "," << c + 1 << "): non-finite value";
    throw ParseError(os.str());
  }
  return d;
}

}  // namespace

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("matrix: expected a list of rows");
  const std::size_t rows = j.size();
  if (rows == 0) return Matrix(0, 0);
  if (!j[0].is_array()) throw ParseError("matrix: row 1 is not a list");
  const std::size_t cols = j[0].size();
  Matrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array()) throw ParseError("matrix: row " + std::to_string(r + 1) + " is not a list");
    if (row.size() != cols)
      throw ParseError("matrix: non-rectangular rows (row " + std::to_string(r + 1) + " has " +
                       std::to_string(row.size()) + " entries, row 1 has " + std::to_string(cols) + ")");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = row[c];
      Complex z;
      if (e.is_array()) {
        if (e.size() != 2) {
          std::ostringstream os;
          os << "entry (" << r + 1 << "," << c + 1 << "): complex entries are [re, im] pairs";
          throw ParseError(os.str());
        }
        z = {finite_number(e[0], r, c), finite_number(e[1], r, c)};
      } else {
        z = {finite_number(e, r, c), 0.0};
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = z;
    }
  }
  return out;
}

nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json matrix_to_json(const Matrix& m) {
  auto out = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix parse_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
  return matrix_from_json(j);
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write matrix file " + path.string());
  out << matrix_to_json(m).dump() << '\n';
}

}  // namespace permderiv

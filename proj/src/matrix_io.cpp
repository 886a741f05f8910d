#include "arad/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arad/error.hpp"

namespace arad {

using nlohmann::json;

namespace {

std::string number(double x) { return json(x).dump(); }

void write_part(std::ostringstream& os, const ComplexMatrix& m, bool imag) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",\n    [" : "\n    [");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << number(imag ? m(i, j).imag() : m(i, j).real());
    }
    os << ']';
  }
  os << (m.rows() ? "\n  ]" : "]");
}

}  // namespace

ComplexMatrix parse_matrix_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const json& re = j.at("re");
    const json& im = j.at("im");
    if (!re.is_array() || !im.is_array() || re.size() != rows || im.size() != rows)
      throw Error(ErrorCode::ParseError, "re/im must be arrays of 'rows' rows");
    std::vector<cplx> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!re[i].is_array() || !im[i].is_array() || re[i].size() != cols || im[i].size() != cols)
        throw Error(ErrorCode::ParseError, "row " + std::to_string(i) + " has the wrong length");
      for (std::size_t k = 0; k < cols; ++k) {
        if (!re[i][k].is_number() || !im[i][k].is_number())
          throw Error(ErrorCode::ParseError, "entries must be numbers");
        entries.emplace_back(re[i][k].get<double>(), im[i][k].get<double>());
      }
    }
    return ComplexMatrix(rows, cols, std::move(entries));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string matrix_to_json(const ComplexMatrix& m) {
  std::ostringstream os;
  os << "{\n  \"rows\": " << m.rows() << ",\n  \"cols\": " << m.cols() << ",\n  \"re\": ";
  write_part(os, m, false);
  os << ",\n  \"im\": ";
  write_part(os, m, true);
  os << "\n}\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
}

ComplexMatrix read_matrix_file(const std::string& path) {
  return parse_matrix_json(read_text_file(path));
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  write_text_file(path, matrix_to_json(m));
}

}  // namespace arad

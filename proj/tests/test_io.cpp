#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <random>

#include "arad/error.hpp"
#include "arad/matrix_io.hpp"
#include "oracle.hpp"

using namespace arad;

namespace {

ErrorCode parse_code(std::string_view text) {
  try {
    parse_matrix_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse failure for " << text);
  return ErrorCode::PostconditionFailed;
}

}  // namespace

TEST_CASE("matrix JSON round-trip is exact") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> exp10(-300.0, 300.0);
  for (std::size_t rows = 0; rows <= 4; ++rows)
    for (std::size_t cols = 0; cols <= 3; ++cols) {
      ComplexMatrix m = oracle::from_eigen(oracle::random_matrix(
          static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols), rng));
      for (cplx& v : m.data()) v *= std::pow(10.0, exp10(rng) / 10.0);
      const std::string text = matrix_to_json(m);
      const ComplexMatrix back = parse_matrix_json(text);
      CHECK(back.rows() == rows);
      CHECK(back.cols() == cols);
      CHECK(back == m);
      CHECK(matrix_to_json(back) == text);
    }

  const ComplexMatrix edge{{cplx(0.1, -0.0), cplx(1e-320, 5e-324)},
                           {cplx(std::numeric_limits<double>::max(), 1.0 / 3.0), cplx(-2, 0)}};
  CHECK(parse_matrix_json(matrix_to_json(edge)) == edge);
}

TEST_CASE("matrix files round-trip byte for byte") {
  const auto path = std::filesystem::temp_directory_path() / "arad_io_roundtrip.json";
  std::mt19937_64 rng(62);
  const ComplexMatrix m = oracle::from_eigen(oracle::random_matrix(3, 3, rng));
  write_matrix_file(path.string(), m);
  const std::string first = read_text_file(path.string());
  const ComplexMatrix back = read_matrix_file(path.string());
  CHECK(back == m);
  write_matrix_file(path.string(), back);
  CHECK(read_text_file(path.string()) == first);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(read_matrix_file("/nonexistent/dir/m.json"), Error);
  CHECK_THROWS_AS(write_matrix_file("/nonexistent/dir/m.json", m), Error);
}

TEST_CASE("matrix JSON parse errors") {
  CHECK(parse_code("") == ErrorCode::ParseError);
  CHECK(parse_code("[1, 2]") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"rows": 1, "cols": 1, "re": [[1]]})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"rows": 2, "cols": 1, "re": [[1]], "im": [[0]]})") ==
        ErrorCode::ParseError);
  CHECK(parse_code(R"({"rows": 1, "cols": 2, "re": [[1]], "im": [[0]]})") ==
        ErrorCode::ParseError);
  CHECK(parse_code(R"({"rows": 1, "cols": 1, "re": [["x"]], "im": [[0]]})") ==
        ErrorCode::ParseError);
  CHECK(parse_code(R"({"rows": 1, "cols": 1, "re": [[1e999]], "im": [[0]]})") ==
        ErrorCode::ParseError);
  CHECK(parse_code(R"({"rows": -1, "cols": 1, "re": [], "im": []})") == ErrorCode::ParseError);

  const ComplexMatrix ok =
      parse_matrix_json(R"({"rows": 1, "cols": 2, "re": [[1, 2]], "im": [[0, -1]]})");
  CHECK(ok(0, 1) == cplx(2, -1));
}

#include <doctest.h>

#include "pcmeff/errors.hpp"
#include "pcmeff/matrix_io.hpp"

using namespace pcmeff;

TEST_CASE("numbers and fractions") {
  CHECK(parse_number("2.5") == 2.5);
  CHECK(parse_number("1/7") == 1.0 / 7.0);
  CHECK(parse_number(" 9 ") == 9.0);
  CHECK_THROWS_AS(parse_number("1/0"), ParseError);
  CHECK_THROWS_AS(parse_number("abc"), ParseError);
  CHECK_THROWS_AS(parse_number("1/2/3"), ParseError);
}

TEST_CASE("csv matrix") {
  const auto m = parse_matrix("1,1,4,9\n1,1,7,5\n1/4,1/7,1,4\n1/9,1/5,1/4,1\n", MatrixFormat::Csv);
  CHECK(m.size() == 4);
  CHECK(m(0, 2) == 4.0);
  CHECK(m(2, 0) == 0.25);
  CHECK(m(2, 1) * m(1, 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(parse_matrix("1,1,1\n\n1,1,1\n1,1,1\n", MatrixFormat::Csv).size() == 3);
  CHECK_THROWS_AS(parse_matrix("1,2;3\n", MatrixFormat::Csv), ParseError);
  CHECK_THROWS_AS(parse_matrix("1,2\n1/2,1\n", MatrixFormat::Csv), ValidationError);
  CHECK_THROWS_AS(parse_matrix("1,2,3\n1/2,1,1\n", MatrixFormat::Csv), ValidationError);
}

TEST_CASE("json matrix round trip") {
  const auto m = parse_matrix(R"({"n": 3, "entries": [[1, "2", "1/3"], ["1/2", 1, 1], [3, 1, 1]]})", MatrixFormat::Json);
  CHECK(m(0, 2) == 1.0 / 3.0);
  CHECK(matrix_from_json(matrix_to_json(m)).entries() == m.entries());
  CHECK_THROWS_AS(parse_matrix(R"({"n": 4, "entries": [[1,1,1],[1,1,1],[1,1,1]]})", MatrixFormat::Json),
                  ValidationError);
  CHECK_THROWS_AS(parse_matrix("{not json", MatrixFormat::Json), ParseError);
}

TEST_CASE("weights files") {
  CHECK(parse_weights("0.5, 0.25, 0.25\n", MatrixFormat::Csv).size() == 3);
  CHECK(parse_weights(R"({"weights": [1, 2, "1/2"]})", MatrixFormat::Json)[2] == 0.5);
  CHECK(parse_weights("[1, 2, 3]", MatrixFormat::Json)[1] == 2.0);
  CHECK_THROWS_AS(parse_weights("1, 0, 2", MatrixFormat::Csv), ValidationError);
  CHECK(format_from_path("a/b.json") == MatrixFormat::Json);
  CHECK(format_from_path("a/b.csv") == MatrixFormat::Csv);
}

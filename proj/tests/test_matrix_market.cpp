// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <sstream>

#include "morbench/error.hpp"
#include "morbench/matrix_market.hpp"
#include "test_support.hpp"

using namespace morbench;
using namespace morbench::testing;

namespace
{

Matrix parse(const std::string &text)
{
  std::istringstream in(text);
  return read_matrix_market(in, "mem");
}

ErrorCode code_of(const std::string &text, std::string *message = nullptr)
{
  try
  {
    parse(text);
  }
  catch (const Error &e)
  {
    if (message)
      *message = e.what();
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("coordinate files", "[mm]")
{
  const Matrix m = parse("%%MatrixMarket matrix coordinate real general\n% comment\n2 2 2\n1 1 5.0\n2 2 7.0\n");
  Matrix expected(2, 2);
  expected << 5, 0, 0, 7;
  CHECK(m == expected);

  const Matrix dup = parse("%%MatrixMarket matrix coordinate real general\n1 1 2\n1 1 1.5\n1 1 2.5\n");
  CHECK(dup(0, 0) == 4.0);
}

TEST_CASE("array files are column major", "[mm]")
{
  const Matrix m = parse("%%MatrixMarket matrix array real general\n2 1\n1\n2\n");
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 1);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(1, 0) == 2.0);

  const Matrix w = parse("%%MatrixMarket matrix array integer general\n2 2\n1\n2\n3\n4\n");
  CHECK(w(0, 1) == 3.0);
  CHECK(w(1, 0) == 2.0);
}

TEST_CASE("symmetric files are mirrored", "[mm]")
{
  const Matrix m = parse("%%MatrixMarket matrix coordinate real symmetric\n2 2 3\n1 1 1\n2 1 3.0\n2 2 1\n");
  Matrix expected(2, 2);
  expected << 1, 3, 3, 1;
  CHECK(m == expected);

  const Matrix a = parse("%%MatrixMarket matrix array real symmetric\n2 2\n1\n3\n1\n");
  CHECK(a == expected);
}

TEST_CASE("unsupported and malformed files", "[mm]")
{
  CHECK(code_of("%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 1 0\n") ==
        ErrorCode::UnsupportedFormat);
  CHECK(code_of("%%MatrixMarket matrix coordinate pattern general\n1 1 1\n1 1\n") ==
        ErrorCode::UnsupportedFormat);
  std::string msg;
  CHECK(code_of("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1.0\n", &msg) ==
        ErrorCode::ParseError);
  CHECK(msg.find("mem:3") != std::string::npos);
  CHECK(code_of("not a header\n") == ErrorCode::ParseError);
  CHECK(code_of("%%MatrixMarket matrix array real general\n2 2\n1\n2\n") == ErrorCode::ParseError);
  CHECK(code_of("%%MatrixMarket matrix array real general\n1 1\nabc\n") == ErrorCode::ParseError);
}

TEST_CASE("write then read is bit exact", "[mm][property]")
{
  Rng rng(31);
  for (int trial = 0; trial < 50; trial++)
  {
    Matrix m = random_matrix(rng, random_index(rng, 1, 9), random_index(rng, 1, 9));
    m(0, 0) = 1.0 / 3.0;
    std::ostringstream out;
    write_matrix_market(out, m);
    CHECK(parse(out.str()) == m);
  }
}

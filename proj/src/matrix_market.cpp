// SPDX-License-Identifier: Apache-2.0

#include "morbench/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "morbench/error.hpp"

namespace morbench
{

namespace
{

std::string lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] void parse_error(const std::string &source, long line, const std::string &what)
{
  throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ": " + what);
}

double parse_number(const std::string &token, const std::string &source, long line)
{
  try
  {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size())
    {
      parse_error(source, line, "malformed number '" + token + "'");
    }
    return v;
  }
  catch (const std::logic_error &)
  {
    parse_error(source, line, "malformed number '" + token + "'");
  }
}

Index parse_index(const std::string &token, const std::string &source, long line)
{
  try
  {
    std::size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used != token.size() || v < 0)
    {
      parse_error(source, line, "malformed integer '" + token + "'");
    }
    return static_cast<Index>(v);
  }
  catch (const std::logic_error &)
  {
    parse_error(source, line, "malformed integer '" + token + "'");
  }
}

std::vector<std::string> split(const std::string &line)
{
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok)
  {
    out.push_back(tok);
  }
  return out;
}

}  // namespace

Matrix read_matrix_market(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw Error(ErrorCode::Io, "cannot open matrix file " + path.string());
  }
  return read_matrix_market(in, path.string());
}

Matrix read_matrix_market(std::istream &in, const std::string &source)
{
  std::string line;
  long lineno = 0;
  if (!std::getline(in, line))
  {
    parse_error(source, 1, "empty file");
  }
  lineno++;
  const auto header = split(line);
  if (header.size() != 5 || header[0] != "%%MatrixMarket" || lower(header[1]) != "matrix")
  {
    parse_error(source, lineno, "missing '%%MatrixMarket matrix' banner");
  }
  const std::string layout = lower(header[2]);
  const std::string field = lower(header[3]);
  const std::string symmetry = lower(header[4]);
  if (field == "complex" || field == "pattern")
  {
    throw Error(ErrorCode::UnsupportedFormat,
                source + ":" + std::to_string(lineno) + ": field '" + field + "' not supported");
  }
  if (field != "real" && field != "integer" && field != "double")
  {
    parse_error(source, lineno, "unknown field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric")
  {
    throw Error(ErrorCode::UnsupportedFormat, source + ":" + std::to_string(lineno) +
                                                  ": symmetry '" + symmetry +
                                                  "' not supported");
  }
  if (layout != "array" && layout != "coordinate")
  {
    parse_error(source, lineno, "unknown layout '" + layout + "'");
  }
  const bool symmetric = symmetry == "symmetric";

  // Skip comments and blank lines; return tokens of the next data line.
  auto next_tokens = [&](std::vector<std::string> &tokens) {
    while (std::getline(in, line))
    {
      lineno++;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '%')
      {
        continue;
      }
      tokens = split(line);
      return true;
    }
    return false;
  };

  std::vector<std::string> tokens;
  if (!next_tokens(tokens))
  {
    parse_error(source, lineno + 1, "missing size line");
  }
  if (layout == "array")
  {
    if (tokens.size() != 2)
    {
      parse_error(source, lineno, "array size line needs 2 integers");
    }
    const Index rows = parse_index(tokens[0], source, lineno);
    const Index cols = parse_index(tokens[1], source, lineno);
    if (symmetric && rows != cols)
    {
      parse_error(source, lineno, "symmetric matrix must be square");
    }
    Matrix m = Matrix::Zero(rows, cols);
    // Column-major; symmetric arrays list only the lower triangle.
    for (Index j = 0; j < cols; j++)
    {
      for (Index i = symmetric ? j : 0; i < rows; i++)
      {
        if (!next_tokens(tokens))
        {
          parse_error(source, lineno + 1, "unexpected end of file in array data");
        }
        if (tokens.size() != 1)
        {
          parse_error(source, lineno, "expected one value per line");
        }
        m(i, j) = parse_number(tokens[0], source, lineno);
        if (symmetric)
        {
          m(j, i) = m(i, j);
        }
      }
    }
    if (next_tokens(tokens))
    {
      parse_error(source, lineno, "trailing data after array entries");
    }
    return m;
  }

  if (tokens.size() != 3)
  {
    parse_error(source, lineno, "coordinate size line needs 3 integers");
  }
  const Index rows = parse_index(tokens[0], source, lineno);
  const Index cols = parse_index(tokens[1], source, lineno);
  const Index nnz = parse_index(tokens[2], source, lineno);
  if (symmetric && rows != cols)
  {
    parse_error(source, lineno, "symmetric matrix must be square");
  }
  Matrix m = Matrix::Zero(rows, cols);
  for (Index k = 0; k < nnz; k++)
  {
    if (!next_tokens(tokens))
    {
      parse_error(source, lineno + 1, "unexpected end of file, expected " +
                                          std::to_string(nnz) + " entries");
    }
    if (tokens.size() != 3)
    {
      parse_error(source, lineno, "coordinate entry needs row, column and value");
    }
    const Index i = parse_index(tokens[0], source, lineno);
    const Index j = parse_index(tokens[1], source, lineno);
    if (i < 1 || i > rows || j < 1 || j > cols)
    {
      parse_error(source, lineno, "entry index out of range");
    }
    const double v = parse_number(tokens[2], source, lineno);
    m(i - 1, j - 1) += v;
    if (symmetric && i != j)
    {
      m(j - 1, i - 1) += v;
    }
  }
  if (next_tokens(tokens))
  {
    parse_error(source, lineno, "more entries than declared");
  }
  return m;
}

void write_matrix_market(std::ostream &out, const Matrix &m)
{
  out << "%%MatrixMarket matrix array real general\n";
  out << m.rows() << " " << m.cols() << "\n";
  char buf[32];
  for (Index j = 0; j < m.cols(); j++)
  {
    for (Index i = 0; i < m.rows(); i++)
    {
      std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
      out << buf << "\n";
    }
  }
}

void write_matrix_market(const std::filesystem::path &path, const Matrix &m)
{
  std::ofstream out(path);
  if (!out)
  {
    throw Error(ErrorCode::Io, "cannot write matrix file " + path.string());
  }
  write_matrix_market(out, m);
  if (!out)
  {
    throw Error(ErrorCode::Io, "write failed for " + path.string());
  }
}

}  // namespace morbench

// SPDX-License-Identifier: Apache-2.0

#ifndef MORBENCH_MATRIX_MARKET_HPP
#define MORBENCH_MATRIX_MARKET_HPP

#include <filesystem>
#include <iosfwd>

#include "morbench/linalg.hpp"

namespace morbench
{

// Reads a Matrix Market file (array or coordinate; real or integer; general or
// symmetric) into a dense matrix. Errors carry the offending line number.
Matrix read_matrix_market(const std::filesystem::path &path);
Matrix read_matrix_market(std::istream &in, const std::string &source = "<stream>");

// Writes the dense array form with 17 significant digits.
void write_matrix_market(const std::filesystem::path &path, const Matrix &m);
void write_matrix_market(std::ostream &out, const Matrix &m);

}  // namespace morbench

#endif  // MORBENCH_MATRIX_MARKET_HPP

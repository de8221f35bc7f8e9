#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quivir/rational.hpp"

namespace quivir {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(RationalMatrix m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Reduced row echelon form; pivot_columns receives the pivot of each nonzero row.
RationalMatrix row_reduce(RationalMatrix m, std::vector<std::size_t>& pivot_columns);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel(const RationalMatrix& m);

}  // namespace quivir

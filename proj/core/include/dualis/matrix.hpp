#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dualis/rational.hpp"

namespace dualis {

// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix transpose() const;
  RatMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;
  std::vector<std::vector<Rational>> to_rows() const;
  bool is_zero() const;

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;
  RatMatrix scaled(const Rational& c) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct Rref {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

Rref rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Fraction-free Bareiss elimination; the matrix must be square.
Rational determinant(const RatMatrix& m);

// Basis of the right kernel, one free variable set to 1 per vector.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

RatMatrix inverse(const RatMatrix& m);

struct RankDetKernel {
  std::size_t rank = 0;
  std::optional<Rational> det;  // present for square matrices
  std::vector<std::vector<Rational>> kernel;
};

RankDetKernel mat_rank_det_kernel(const RatMatrix& m);

// Parses rows separated by ';' and entries by ','.
RatMatrix parse_matrix(const std::string& text);

}  // namespace dualis

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rmac/integer.hpp"

namespace rmac {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;
  IntMatrix transpose() const;
  IntMatrix power(unsigned k) const;
  Integer trace() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);
  IntMatrix column(std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += q * row[src]
  void add_row_multiple(std::size_t target, std::size_t src, const Integer& q);
  // col[target] += q * col[src]
  void add_col_multiple(std::size_t target, std::size_t src, const Integer& q);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

struct SparseEntry {
  std::size_t row;
  Integer value;
};

// Column-compressed matrix; used for boundary operators.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix from_dense(const IntMatrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const;

  // Adds value into (row, col); entries are kept sorted by row.
  void add(std::size_t row, std::size_t col, const Integer& value);
  const std::vector<SparseEntry>& column(std::size_t c) const { return columns_[c]; }

  IntMatrix to_dense() const;
  bool is_zero() const { return nonzeros() == 0; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<SparseEntry>> columns_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
IntMatrix operator*(const IntMatrix& a, const SparseMatrix& b);

}  // namespace rmac

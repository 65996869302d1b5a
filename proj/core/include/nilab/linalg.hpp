#pragma once

// Dense matrices of field codes with Gaussian elimination. Row-major.

#include <cstdint>
#include <vector>

#include "nilab/ff.hpp"

namespace nilab {

class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr f, size_t rows, size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Mat identity(FieldPtr f, size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  uint32_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;
  Mat scaled(uint32_t s) const;
  Mat transposed() const;

  // Reduces in place to reduced row echelon form; returns pivot columns.
  std::vector<size_t> rref();
  size_t rank() const;
  // Basis of the right null space (each vector has cols() entries).
  std::vector<std::vector<uint32_t>> kernel_basis() const;
  // Inverse for square invertible matrices; throws std::domain_error otherwise.
  Mat inverse() const;

  const std::vector<uint32_t>& data() const { return a_; }

 private:
  FieldPtr field_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<uint32_t> a_;
};

// rank of a list of row vectors over f
size_t row_rank(const FieldPtr& f, const std::vector<std::vector<uint32_t>>& rows, size_t ncols);

// kernel of constraint rows (list of row vectors), canonical basis in RREF order
std::vector<std::vector<uint32_t>> kernel_of_rows(const FieldPtr& f,
                                                  const std::vector<std::vector<uint32_t>>& rows,
                                                  size_t ncols);

}  // namespace nilab

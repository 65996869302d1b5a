#include "nilab/linalg.hpp"

#include <stdexcept>

namespace nilab {

Mat Mat::identity(FieldPtr f, size_t n) {
  Mat m(std::move(f), n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat::mul: shape mismatch");
  const ExtField& F = *field_;
  Mat out(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      uint32_t v = at(i, k);
      if (!v) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        uint32_t w = o.at(k, j);
        if (w) out.at(i, j) = F.add(out.at(i, j), F.mul(v, w));
      }
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  const ExtField& F = *field_;
  Mat out(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = F.add(a_[i], o.a_[i]);
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  const ExtField& F = *field_;
  Mat out(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = F.sub(a_[i], o.a_[i]);
  return out;
}

bool Mat::is_zero() const {
  for (uint32_t v : a_)
    if (v) return false;
  return true;
}

Mat Mat::scaled(uint32_t s) const {
  const ExtField& F = *field_;
  Mat out(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = F.mul(a_[i], s);
  return out;
}

Mat Mat::transposed() const {
  Mat out(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

std::vector<size_t> Mat::rref() {
  const ExtField& F = *field_;
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t piv = r;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    for (size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(piv, j));
    uint32_t iv = F.inv(at(r, c));
    for (size_t j = 0; j < cols_; ++j) at(r, j) = F.mul(at(r, j), iv);
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      uint32_t f = at(i, c);
      if (!f) continue;
      for (size_t j = 0; j < cols_; ++j) at(i, j) = F.sub(at(i, j), F.mul(f, at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t Mat::rank() const {
  Mat copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<uint32_t>> Mat::kernel_basis() const {
  Mat copy = *this;
  auto pivots = copy.rref();
  const ExtField& F = *field_;
  std::vector<bool> is_piv(cols_, false);
  for (size_t c : pivots) is_piv[c] = true;
  std::vector<std::vector<uint32_t>> basis;
  for (size_t fc = 0; fc < cols_; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<uint32_t> v(cols_, 0);
    v[fc] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(copy.at(i, fc));
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw std::domain_error("Mat::inverse: not square");
  Mat aug(field_, rows_, 2 * cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto pivots = aug.rref();
  if (pivots.size() != rows_ || pivots[rows_ - 1] >= cols_)
    throw std::domain_error("Mat::inverse: singular matrix");
  Mat out(field_, rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
  return out;
}

size_t row_rank(const FieldPtr& f, const std::vector<std::vector<uint32_t>>& rows, size_t ncols) {
  if (rows.empty()) return 0;
  Mat m(f, rows.size(), ncols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < ncols; ++j) m.at(i, j) = rows[i][j];
  return m.rank();
}

std::vector<std::vector<uint32_t>> kernel_of_rows(const FieldPtr& f,
                                                  const std::vector<std::vector<uint32_t>>& rows,
                                                  size_t ncols) {
  if (rows.empty()) {
    std::vector<std::vector<uint32_t>> full;
    for (size_t i = 0; i < ncols; ++i) {
      std::vector<uint32_t> v(ncols, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    return full;
  }
  Mat m(f, rows.size(), ncols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < ncols; ++j) m.at(i, j) = rows[i][j];
  return m.kernel_basis();
}

}  // namespace nilab

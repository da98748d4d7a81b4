#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "epi/errors.hpp"

namespace epi {

using cplx = std::complex<double>;

/// Dense row-major 2-D complex sample grid. Both dimensions must be even and
/// at least 2: half-FOV ghost geometry and center-row selection rely on it.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(std::size_t n_rows, std::size_t n_cols)
      : n_rows_(n_rows), n_cols_(n_cols), data_(n_rows * n_cols) {
    check_dims(n_rows, n_cols);
  }

  ComplexMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<cplx> data)
      : n_rows_(n_rows), n_cols_(n_cols), data_(std::move(data)) {
    check_dims(n_rows, n_cols);
    if (data_.size() != n_rows * n_cols)
      throw ConfigError("ComplexMatrix: data size does not match dimensions");
  }

  std::size_t rows() const noexcept { return n_rows_; }
  std::size_t cols() const noexcept { return n_cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  cplx& at(std::size_t r, std::size_t c) { return data_[r * n_cols_ + c]; }
  const cplx& at(std::size_t r, std::size_t c) const { return data_[r * n_cols_ + c]; }

  std::span<cplx> row(std::size_t r) { return {data_.data() + r * n_cols_, n_cols_}; }
  std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * n_cols_, n_cols_}; }

  std::vector<cplx>& data() noexcept { return data_; }
  const std::vector<cplx>& data() const noexcept { return data_; }

  bool all_finite() const noexcept {
    for (const cplx& v : data_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.n_rows_ == b.n_rows_ && a.n_cols_ == b.n_cols_ && a.data_ == b.data_;
  }

 private:
  static void check_dims(std::size_t n_rows, std::size_t n_cols) {
    if (n_rows < 2 || n_cols < 2)
      throw ConfigError("ComplexMatrix: dimensions must be at least 2x2");
    if (n_rows % 2 != 0 || n_cols % 2 != 0)
      throw ConfigError("ComplexMatrix: dimensions must be even");
  }

  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<cplx> data_;
};

/// Dense row-major real grid (magnitude images, phase maps, profiles).
class RealMatrix {
 public:
  RealMatrix() = default;

  RealMatrix(std::size_t n_rows, std::size_t n_cols)
      : n_rows_(n_rows), n_cols_(n_cols), data_(n_rows * n_cols, 0.0) {
    if (n_rows == 0 || n_cols == 0) throw ConfigError("RealMatrix: dimensions must be nonzero");
  }

  std::size_t rows() const noexcept { return n_rows_; }
  std::size_t cols() const noexcept { return n_cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  double& at(std::size_t r, std::size_t c) { return data_[r * n_cols_ + c]; }
  const double& at(std::size_t r, std::size_t c) const { return data_[r * n_cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * n_cols_, n_cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * n_cols_, n_cols_}; }

  std::vector<double>& data() noexcept { return data_; }
  const std::vector<double>& data() const noexcept { return data_; }

  bool all_finite() const noexcept {
    for (double v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  friend bool operator==(const RealMatrix& a, const RealMatrix& b) {
    return a.n_rows_ == b.n_rows_ && a.n_cols_ == b.n_cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<double> data_;
};

}  // namespace epi

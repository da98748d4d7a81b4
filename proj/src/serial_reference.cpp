#include "epi/serial_reference.hpp"

#include <cmath>
#include <numbers>

namespace epi::serial_reference {

std::vector<cplx> centered_line_transform(std::span<const cplx> line, fourier::Direction dir) {
  const std::size_t n = line.size();
  const double sign = (dir == fourier::Direction::Forward) ? 1.0 : -1.0;
  const double scale =
      (dir == fourier::Direction::Forward) ? 1.0 : 1.0 / static_cast<double>(n);
  const double center = static_cast<double>(n) / 2.0;
  std::vector<cplx> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = sign * 2.0 * std::numbers::pi *
                           (static_cast<double>(k) - center) *
                           (static_cast<double>(m) - center) / static_cast<double>(n);
      acc += line[k] * cplx(std::cos(angle), std::sin(angle));
    }
    out[m] = scale * acc;
  }
  return out;
}

ComplexMatrix centered_transform_rows(const ComplexMatrix& m, fourier::Direction dir) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const std::vector<cplx> line = centered_line_transform(m.row(r), dir);
    std::copy(line.begin(), line.end(), out.row(r).begin());
  }
  return out;
}

ComplexMatrix centered_transform_cols(const ComplexMatrix& m, fourier::Direction dir) {
  ComplexMatrix out(m.rows(), m.cols());
  std::vector<cplx> column(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) column[r] = m.at(r, c);
    const std::vector<cplx> line = centered_line_transform(column, dir);
    for (std::size_t r = 0; r < m.rows(); ++r) out.at(r, c) = line[r];
  }
  return out;
}

std::vector<cplx> upsample_line(std::span<const cplx> v, std::size_t factor) {
  const std::size_t n = v.size();
  std::vector<cplx> out(n * factor);
  for (std::size_t p = 0; p < out.size(); ++p) {
    const std::size_t q = p / factor;
    const std::size_t r = p % factor;
    if (r == 0) {
      out[p] = v[q];
    } else {
      const double alpha = static_cast<double>(r) / static_cast<double>(factor);
      const cplx next = (q + 1 < n) ? v[q + 1] : v[n - 1];
      out[p] = (1.0 - alpha) * v[q] + alpha * next;
    }
  }
  return out;
}

std::vector<cplx> resample_line_mean(std::span<const cplx> v, std::size_t factor) {
  const std::size_t n = v.size() / factor;
  const auto lo = static_cast<std::ptrdiff_t>(factor / 2);
  const auto hi = static_cast<std::ptrdiff_t>((factor + 1) / 2);
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto anchor = static_cast<std::ptrdiff_t>(i * factor);
    cplx acc(0.0, 0.0);
    for (std::ptrdiff_t j = -lo; j < hi; ++j) {
      std::ptrdiff_t idx = anchor + j;
      if (idx < 0) idx = 0;
      if (idx >= static_cast<std::ptrdiff_t>(v.size()))
        idx = static_cast<std::ptrdiff_t>(v.size()) - 1;
      acc += v[static_cast<std::size_t>(idx)];
    }
    out[i] = acc / static_cast<double>(factor);
  }
  return out;
}

RealMatrix reconstruct_magnitude(const ComplexMatrix& kspace) {
  const ComplexMatrix hybrid = centered_transform_rows(kspace, fourier::Direction::Inverse);
  const ComplexMatrix image = centered_transform_cols(hybrid, fourier::Direction::Inverse);
  RealMatrix mag(image.rows(), image.cols());
  for (std::size_t i = 0; i < image.size(); ++i) mag.data()[i] = std::abs(image.data()[i]);
  return mag;
}

}  // namespace epi::serial_reference

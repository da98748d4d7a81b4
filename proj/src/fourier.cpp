#include "epi/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "epi/errors.hpp"

namespace epi::fourier {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// For even n, moving DC between index 0 and index n/2 is the same half
// rotation in both directions.
void rotate_half(cplx* line, std::size_t n) {
  const std::size_t h = n / 2;
  for (std::size_t i = 0; i < h; ++i) std::swap(line[i], line[i + h]);
}

struct Plan {
  std::size_t n = 0;
  bool pow2 = false;
  double scale = 1.0;
  // pow2: e^(s*2*pi*i*j/n) for j in [0, n/2); otherwise all n roots.
  std::vector<cplx> twiddle;
};

Plan make_plan(std::size_t n, Direction dir) {
  Plan p;
  p.n = n;
  p.pow2 = is_pow2(n);
  p.scale = (dir == Direction::Forward) ? 1.0 : 1.0 / static_cast<double>(n);
  const double sign = (dir == Direction::Forward) ? 1.0 : -1.0;
  const std::size_t count = p.pow2 ? n / 2 : n;
  p.twiddle.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double a = sign * kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    p.twiddle[j] = cplx(std::cos(a), std::sin(a));
  }
  return p;
}

// Iterative radix-2, in place; computes sum_j x[j] e^(s*2*pi*i*j*k/n).
void dft_pow2(cplx* x, std::size_t n, const Plan& plan) {
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    const std::size_t half = len / 2;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const cplx w = plan.twiddle[j * stride];
        const cplx u = x[base + j];
        const cplx t = w * x[base + j + half];
        x[base + j] = u + t;
        x[base + j + half] = u - t;
      }
    }
  }
}

// Direct evaluation for even non-power-of-two lengths.
void dft_direct(const cplx* in, cplx* out, std::size_t n, const Plan& plan) {
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) acc += in[j] * plan.twiddle[(j * k) % n];
    out[k] = acc;
  }
}

void transform_line(cplx* line, std::size_t n, const Plan& plan, std::vector<cplx>& scratch) {
  rotate_half(line, n);
  if (plan.pow2) {
    dft_pow2(line, n, plan);
  } else {
    scratch.resize(n);
    dft_direct(line, scratch.data(), n, plan);
    std::copy(scratch.begin(), scratch.end(), line);
  }
  rotate_half(line, n);
  if (plan.scale != 1.0)
    for (std::size_t i = 0; i < n; ++i) line[i] *= plan.scale;
}

}  // namespace

void centered_transform_rows(ComplexMatrix& m, Direction dir) {
  const Plan plan = make_plan(m.cols(), dir);
  const auto n_rows = static_cast<std::ptrdiff_t>(m.rows());
#pragma omp parallel
  {
    std::vector<cplx> scratch;
#pragma omp for schedule(static)
    for (std::ptrdiff_t r = 0; r < n_rows; ++r)
      transform_line(m.row(static_cast<std::size_t>(r)).data(), m.cols(), plan, scratch);
  }
}

void centered_transform_cols(ComplexMatrix& m, Direction dir) {
  const Plan plan = make_plan(m.rows(), dir);
  const auto n_cols = static_cast<std::ptrdiff_t>(m.cols());
  const std::size_t n_rows = m.rows();
#pragma omp parallel
  {
    std::vector<cplx> column(n_rows);
    std::vector<cplx> scratch;
#pragma omp for schedule(static)
    for (std::ptrdiff_t c = 0; c < n_cols; ++c) {
      for (std::size_t r = 0; r < n_rows; ++r) column[r] = m.at(r, static_cast<std::size_t>(c));
      transform_line(column.data(), n_rows, plan, scratch);
      for (std::size_t r = 0; r < n_rows; ++r) m.at(r, static_cast<std::size_t>(c)) = column[r];
    }
  }
}

std::vector<cplx> centered_transform_line(std::span<const cplx> line, Direction dir) {
  const std::size_t n = line.size();
  if (n < 2 || n % 2 != 0) throw ConfigError("centered_transform_line: length must be even, >= 2");
  const Plan plan = make_plan(n, dir);
  std::vector<cplx> out(line.begin(), line.end());
  std::vector<cplx> scratch;
  transform_line(out.data(), n, plan, scratch);
  return out;
}

}  // namespace epi::fourier

#include "epi/peak_align.hpp"

#include <cmath>

#include "epi/errors.hpp"

namespace epi {
namespace {

// Positive remainder of n - delta.
std::size_t wrap_source_index(std::size_t n, std::ptrdiff_t delta, std::size_t len) {
  std::ptrdiff_t src = static_cast<std::ptrdiff_t>(n) - delta;
  const auto span = static_cast<std::ptrdiff_t>(len);
  src %= span;
  if (src < 0) src += span;
  return static_cast<std::size_t>(src);
}

}  // namespace

std::size_t row_peak_index(std::span<const cplx> row) {
  if (row.empty()) throw ConfigError("row_peak_index: empty line");
  std::size_t best = 0;
  double best_mag = std::abs(row[0]);
  for (std::size_t n = 1; n < row.size(); ++n) {
    const double mag = std::abs(row[n]);
    if (mag > best_mag) {
      best_mag = mag;
      best = n;
    }
  }
  if (best_mag == 0.0) throw NumericError("row_peak_index: all-zero line has no peak");
  return best;
}

PeakShiftEstimate estimate_peak_shift(const KSpaceData& k, const CenterRowPair& rows) {
  if (k.domain != Domain::KxKy)
    throw ConfigError("estimate_peak_shift: data must be in the (kx, ky) domain");
  if (!k.reversal_applied)
    throw ConfigError("estimate_peak_shift: readout reversal must be applied first");
  rows.validate(k.matrix.rows());

  PeakShiftEstimate est;
  est.p_even = row_peak_index(k.matrix.row(rows.even_row - 1));
  est.p_odd = row_peak_index(k.matrix.row(rows.odd_row - 1));
  est.delta_p = static_cast<std::ptrdiff_t>(est.p_odd) - static_cast<std::ptrdiff_t>(est.p_even);
  return est;
}

PeakShiftEstimate estimate_peak_shift(const KSpaceData& k) {
  return estimate_peak_shift(k, CenterRowPair::defaults(k.matrix.rows()));
}

KSpaceData apply_peak_alignment(const KSpaceData& k, const PeakShiftEstimate& est) {
  if (k.domain != Domain::KxKy)
    throw ConfigError("apply_peak_alignment: data must be in the (kx, ky) domain");
  if (est.delta_p == 0) return k;

  KSpaceData out = k;
  const std::size_t n_cols = k.matrix.cols();
  std::vector<cplx> shifted(n_cols);
  for (std::size_t r = 0; r < k.matrix.rows(); ++r) {
    if (row_parity(r) != Parity::Even) continue;
    const auto src = k.matrix.row(r);
    for (std::size_t n = 0; n < n_cols; ++n)
      shifted[n] = src[wrap_source_index(n, est.delta_p, n_cols)];
    std::copy(shifted.begin(), shifted.end(), out.matrix.row(r).begin());
  }
  return out;
}

}  // namespace epi

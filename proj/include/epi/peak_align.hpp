#pragma once

#include <cstddef>
#include <span>

#include "epi/kspace.hpp"

namespace epi {

/// Relative displacement of the even-line magnitude peak against the odd-line
/// peak, measured on the center line pair of raw k-space.
struct PeakShiftEstimate {
  std::size_t p_even = 0;       // 0-indexed argmax of the center even line
  std::size_t p_odd = 0;        // 0-indexed argmax of the center odd line
  std::ptrdiff_t delta_p = 0;   // p_odd - p_even
};

/// 0-indexed position of the maximum magnitude; ties break to the lowest
/// index. An all-zero line has no peak and is rejected.
std::size_t row_peak_index(std::span<const cplx> row);

/// Measure the odd/even peak displacement on raw k-space magnitudes
/// (domain KxKy, reversal applied), using the given center line pair.
PeakShiftEstimate estimate_peak_shift(const KSpaceData& k, const CenterRowPair& rows);
PeakShiftEstimate estimate_peak_shift(const KSpaceData& k);

/// Circularly shift every even line along kx so its peak lands where the odd
/// peak sits: output[n] = input[(n - delta_p) mod N]. Odd lines untouched.
/// After correction the center odd/even peaks coincide whenever both are
/// unique.
KSpaceData apply_peak_alignment(const KSpaceData& k, const PeakShiftEstimate& est);

}  // namespace epi

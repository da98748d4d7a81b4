#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "epi/matrix.hpp"

namespace epi {

/// Which conjugate pair of axes the samples currently live on.
enum class Domain { KxKy, XKy, XY };

/// Line parity follows 1-indexed row numbering: row 1 is odd, row 2 even.
/// Odd and even lines are acquired under opposite readout gradient polarity.
enum class Parity { Odd, Even };

/// Parity of a 0-indexed row. Row 0 is line 1, hence odd.
inline constexpr Parity row_parity(std::size_t zero_based_row) noexcept {
  return (zero_based_row % 2 == 0) ? Parity::Odd : Parity::Even;
}

/// Scan parameters carried alongside the samples. All present values must be
/// strictly positive.
struct AcquisitionMeta {
  std::optional<double> field_strength_t;
  std::optional<std::pair<double, double>> fov_mm;
  std::optional<double> slice_thickness_mm;
  std::optional<double> te_ms;
  std::optional<double> tr_ms;
  std::optional<unsigned> averages;
  std::optional<double> b_value_s_per_mm2;

  bool any() const noexcept {
    return field_strength_t || fov_mm || slice_thickness_mm || te_ms || tr_ms || averages ||
           b_value_s_per_mm2;
  }

  void validate() const;

  /// 64x64 low-field defaults: 250 mm FOV, 5 mm slice, TE 86 ms, TR 3000 ms,
  /// single average at 0.5 T.
  static AcquisitionMeta low_field_defaults();
};

/// A complex sample grid tagged with the domain it lives in, the line-parity
/// bookkeeping state, and acquisition metadata. Domain transitions happen only
/// through the transform operations below.
struct KSpaceData {
  ComplexMatrix matrix;
  Domain domain = Domain::KxKy;
  bool reversal_applied = false;
  AcquisitionMeta meta;
};

/// Row subset of one parity: 0-indexed row positions plus the row samples.
struct ParityRows {
  std::vector<std::size_t> indices;
  std::vector<std::vector<cplx>> rows;
};

/// Lossless partition of a KSpaceData into odd and even lines, retaining the
/// frame (dimensions, domain, flags, metadata) needed for reassembly.
struct ParitySplit {
  ParityRows odd;
  ParityRows even;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  Domain domain = Domain::KxKy;
  bool reversal_applied = false;
  AcquisitionMeta meta;
};

/// Reverse the readout direction of every line of the selected parity
/// (sample n -> N-1-n). Rejected if reversal has already been applied.
KSpaceData reverse_alternate_rows(const KSpaceData& k, Parity which);

/// Centered inverse transform along kx: (kx, ky) -> (x, ky). Each row is
/// independently shifted DC-to-edge, inverse-transformed with 1/N scaling,
/// and shifted back, so index N/2 is the center in both domains.
KSpaceData ifft_kx_to_x(const KSpaceData& k);

/// Centered forward transform along x: (x, ky) -> (kx, ky). Exact inverse of
/// ifft_kx_to_x (unit scaling).
KSpaceData fft_x_to_kx(const KSpaceData& k);

/// Centered inverse transform along ky: (x, ky) -> (x, y), column by column
/// with 1/M scaling.
KSpaceData ifft_ky_to_y(const KSpaceData& k);

/// Centered forward transform along y: (x, y) -> (x, ky). Exact inverse of
/// ifft_ky_to_y; used by the forward simulator.
KSpaceData fft_y_to_ky(const KSpaceData& k);

/// Partition into odd/even lines (1-indexed parity: 0-indexed row m is odd
/// iff m is even).
ParitySplit split_parity(const KSpaceData& k);

/// Reassemble rows at their original indices. The index sets must be disjoint
/// and jointly exhaustive.
KSpaceData merge_parity(const ParitySplit& parts);

/// Elementwise modulus.
RealMatrix magnitude(const ComplexMatrix& m);

/// Four-quadrant arctangent pinned to (-pi, pi]: signed zeros never produce
/// -pi, and phase_angle(0+0i) = 0.
double phase_angle(const cplx& v);

/// Elementwise phase_angle.
RealMatrix phase(const ComplexMatrix& m);

/// 1-indexed center line pair: even line M/2 and odd line M/2+1. These sit on
/// either side of the DC row under the centered transform convention.
struct CenterRowPair {
  std::size_t even_row;  // 1-indexed, even parity
  std::size_t odd_row;   // 1-indexed, odd parity

  static CenterRowPair defaults(std::size_t n_rows) { return {n_rows / 2, n_rows / 2 + 1}; }
  void validate(std::size_t n_rows) const;
};

}  // namespace epi

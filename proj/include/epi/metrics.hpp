#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epi/matrix.hpp"

namespace epi {

enum class NoiseCorner { TopLeft, TopRight, BottomLeft, BottomRight };

/// Region geometry for the quality metrics. The ghost region is the signal
/// ROI circularly shifted by half the image height along y (phase encode);
/// both the signal ROI and the noise ROI must fit inside the image, and the
/// signal ROI must not overlap its own ghost copy.
struct ROISpec {
  std::size_t signal_center_row = 0;
  std::size_t signal_center_col = 0;
  std::size_t signal_rows = 16;
  std::size_t signal_cols = 16;
  NoiseCorner noise_corner = NoiseCorner::TopLeft;
  std::size_t noise_rows = 8;
  std::size_t noise_cols = 8;

  /// Centered signal ROI of a quarter of each dimension, corner noise ROI of
  /// an eighth: 16x16 and 8x8 for a 64x64 image.
  static ROISpec centered_defaults(std::size_t image_rows, std::size_t image_cols);

  void validate(std::size_t image_rows, std::size_t image_cols) const;

  friend bool operator==(const ROISpec&, const ROISpec&) = default;
};

/// Mean magnitude over the half-FOV-shifted copy of the signal ROI divided by
/// mean magnitude over the signal ROI. A zero signal mean is undefined.
double ghost_to_signal_ratio(const RealMatrix& img, const ROISpec& roi);

struct SnrResult {
  double value = 0.0;
  /// Set when the noise ROI mean is exactly zero (noise-free synthetic
  /// image); value is then +infinity.
  bool noise_free = false;
};

/// Mean magnitude over the signal ROI divided by mean magnitude over the
/// corner noise ROI.
SnrResult signal_to_noise_ratio(const RealMatrix& img, const ROISpec& roi);

struct QualityReport {
  double gsr = 0.0;
  double snr = 0.0;
  bool snr_noise_free = false;
  ROISpec roi;
  std::optional<double> residual_percent;
};

/// GSR and SNR of one magnitude image under the given ROI geometry.
QualityReport evaluate_image(const RealMatrix& img, const ROISpec& roi);

/// 100 * corrected.gsr / original.gsr. Both reports must use the same ROI
/// geometry; a zero original GSR is undefined.
double residual_artifact_percent(const QualityReport& corrected, const QualityReport& original);

enum class ProfileAxis { Row, Col };

/// Per-row (or per-column) magnitude vectors for export and plotting.
std::vector<std::vector<double>> magnitude_profiles(const ComplexMatrix& m, ProfileAxis axis);

/// Sum of absolute first differences of one profile.
double line_total_variation(std::span<const double> profile);

}  // namespace epi

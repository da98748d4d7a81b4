#include "epi/metrics.hpp"

#include <cmath>
#include <limits>

#include "epi/errors.hpp"

namespace epi {
namespace {

double window_mean(const RealMatrix& img, std::size_t row0, std::size_t col0, std::size_t n_rows,
                   std::size_t n_cols, bool wrap_rows) {
  double acc = 0.0;
  for (std::size_t r = 0; r < n_rows; ++r) {
    const std::size_t rr = wrap_rows ? (row0 + r) % img.rows() : row0 + r;
    for (std::size_t c = 0; c < n_cols; ++c) acc += img.at(rr, col0 + c);
  }
  return acc / static_cast<double>(n_rows * n_cols);
}

struct Window {
  std::size_t row0, col0;
};

Window signal_window(const ROISpec& roi) {
  return {roi.signal_center_row - roi.signal_rows / 2, roi.signal_center_col - roi.signal_cols / 2};
}

Window noise_window(const ROISpec& roi, std::size_t image_rows, std::size_t image_cols) {
  const std::size_t r0 = (roi.noise_corner == NoiseCorner::BottomLeft ||
                          roi.noise_corner == NoiseCorner::BottomRight)
                             ? image_rows - roi.noise_rows
                             : 0;
  const std::size_t c0 = (roi.noise_corner == NoiseCorner::TopRight ||
                          roi.noise_corner == NoiseCorner::BottomRight)
                             ? image_cols - roi.noise_cols
                             : 0;
  return {r0, c0};
}

}  // namespace

ROISpec ROISpec::centered_defaults(std::size_t image_rows, std::size_t image_cols) {
  ROISpec roi;
  roi.signal_center_row = image_rows / 2;
  roi.signal_center_col = image_cols / 2;
  roi.signal_rows = image_rows / 4;
  roi.signal_cols = image_cols / 4;
  roi.noise_rows = image_rows / 8;
  roi.noise_cols = image_cols / 8;
  return roi;
}

void ROISpec::validate(std::size_t image_rows, std::size_t image_cols) const {
  if (signal_rows == 0 || signal_cols == 0 || noise_rows == 0 || noise_cols == 0)
    throw ConfigError("ROISpec: ROI sizes must be nonzero");
  if (signal_center_row < signal_rows / 2 || signal_center_col < signal_cols / 2)
    throw ConfigError("ROISpec: signal ROI extends past the top/left edge");
  const Window s = signal_window(*this);
  if (s.row0 + signal_rows > image_rows || s.col0 + signal_cols > image_cols)
    throw ConfigError("ROISpec: signal ROI extends past the bottom/right edge");
  if (noise_rows > image_rows || noise_cols > image_cols)
    throw ConfigError("ROISpec: noise ROI does not fit in the image");
  // A half-height circular shift leaves the ghost window disjoint from the
  // signal window exactly when the signal window is at most half the image.
  if (signal_rows > image_rows / 2)
    throw ConfigError("ROISpec: signal ROI overlaps its half-FOV ghost copy");
}

double ghost_to_signal_ratio(const RealMatrix& img, const ROISpec& roi) {
  if (img.rows() % 2 != 0)
    throw ConfigError("ghost_to_signal_ratio: image height must be even");
  roi.validate(img.rows(), img.cols());
  const Window s = signal_window(roi);
  const double signal_mean = window_mean(img, s.row0, s.col0, roi.signal_rows, roi.signal_cols,
                                         false);
  const double ghost_mean = window_mean(img, s.row0 + img.rows() / 2, s.col0, roi.signal_rows,
                                        roi.signal_cols, true);
  if (signal_mean == 0.0)
    throw NumericError("ghost_to_signal_ratio: signal ROI mean is zero, ratio undefined");
  return ghost_mean / signal_mean;
}

SnrResult signal_to_noise_ratio(const RealMatrix& img, const ROISpec& roi) {
  roi.validate(img.rows(), img.cols());
  const Window s = signal_window(roi);
  const Window n = noise_window(roi, img.rows(), img.cols());
  const double signal_mean = window_mean(img, s.row0, s.col0, roi.signal_rows, roi.signal_cols,
                                         false);
  const double noise_mean = window_mean(img, n.row0, n.col0, roi.noise_rows, roi.noise_cols,
                                        false);
  if (noise_mean == 0.0) return {std::numeric_limits<double>::infinity(), true};
  return {signal_mean / noise_mean, false};
}

QualityReport evaluate_image(const RealMatrix& img, const ROISpec& roi) {
  QualityReport report;
  report.roi = roi;
  report.gsr = ghost_to_signal_ratio(img, roi);
  const SnrResult snr = signal_to_noise_ratio(img, roi);
  report.snr = snr.value;
  report.snr_noise_free = snr.noise_free;
  return report;
}

double residual_artifact_percent(const QualityReport& corrected, const QualityReport& original) {
  if (!(corrected.roi == original.roi))
    throw ConfigError("residual_artifact_percent: reports use different ROI geometry");
  if (original.gsr == 0.0)
    throw NumericError("residual_artifact_percent: original GSR is zero, percentage undefined");
  return 100.0 * corrected.gsr / original.gsr;
}

std::vector<std::vector<double>> magnitude_profiles(const ComplexMatrix& m, ProfileAxis axis) {
  std::vector<std::vector<double>> profiles;
  if (axis == ProfileAxis::Row) {
    profiles.resize(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      profiles[r].resize(m.cols());
      for (std::size_t c = 0; c < m.cols(); ++c) profiles[r][c] = std::abs(m.at(r, c));
    }
  } else {
    profiles.resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      profiles[c].resize(m.rows());
      for (std::size_t r = 0; r < m.rows(); ++r) profiles[c][r] = std::abs(m.at(r, c));
    }
  }
  return profiles;
}

double line_total_variation(std::span<const double> profile) {
  double tv = 0.0;
  for (std::size_t i = 1; i < profile.size(); ++i) tv += std::abs(profile[i] - profile[i - 1]);
  return tv;
}

}  // namespace epi

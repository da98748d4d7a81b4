#pragma once

#include <optional>
#include <string>

#include "epi/interp_resample.hpp"
#include "epi/kspace.hpp"
#include "epi/metrics.hpp"
#include "epi/ref_correction.hpp"

namespace epi {

enum class CorrectionMethod { None, Ref, Pa };

struct PipelineConfig {
  CorrectionMethod method = CorrectionMethod::None;
  bool ir_enabled = false;
  IRConfig ir;
  std::optional<RefCorrectionConfig> ref_cfg;  // defaults derived from the input when absent
  std::optional<ROISpec> roi;                  // centered defaults when absent
};

struct PipelineResult {
  KSpaceData corrected;
  RealMatrix original_image;
  RealMatrix corrected_image;
  QualityReport original;
  QualityReport after;  // residual_percent filled in against `original`
};

/// Correction stages only: reversal (if still pending) then the preliminary
/// method (Ref or Pa) then optional interpolation-resampling. Input must be
/// in the (kx, ky) domain. Ref requires a reference scan.
KSpaceData apply_correction(const PipelineConfig& cfg, const KSpaceData& input,
                            const KSpaceData* reference);

/// Reconstruct a magnitude image from any domain by applying whatever
/// centered inverse transforms are still pending. Reversal is applied first
/// when the data is still in (kx, ky) with the flag unset.
RealMatrix reconstruct_magnitude(const KSpaceData& k);

/// Full pipeline: correct, reconstruct both the untouched and the corrected
/// data, and evaluate GSR/SNR on both magnitude images.
PipelineResult run_pipeline(const PipelineConfig& cfg, const KSpaceData& input,
                            const KSpaceData* reference);

/// Quality-report JSON with fixed key order and 17-significant-digit numbers:
/// {"original":{gsr,snr},"corrected":{gsr,snr},"residual_percent":...,
///  "roi":{...},"config":{...}}. Non-finite values serialize as null.
std::string quality_report_json(const QualityReport& original, const QualityReport& corrected,
                                std::optional<double> residual_percent,
                                const std::string& config_json);

/// One double at 17 significant digits (used everywhere numbers are printed).
std::string format_double(double v);

}  // namespace epi

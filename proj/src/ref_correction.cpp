#include "epi/ref_correction.hpp"

#include <cmath>

#include "epi/errors.hpp"

namespace epi {

ReferencePhaseMap estimate_parity_phase(const KSpaceData& k_ref, const RefCorrectionConfig& cfg) {
  if (k_ref.domain != Domain::KxKy)
    throw ConfigError("estimate_parity_phase: reference scan must be in the (kx, ky) domain");
  if (!k_ref.reversal_applied)
    throw ConfigError("estimate_parity_phase: readout reversal must be applied first");
  cfg.rows.validate(k_ref.matrix.rows());

  const KSpaceData hybrid = ifft_kx_to_x(k_ref);
  const auto even_line = hybrid.matrix.row(cfg.rows.even_row - 1);
  const auto odd_line = hybrid.matrix.row(cfg.rows.odd_row - 1);

  ReferencePhaseMap pm;
  pm.source_rows = cfg.rows;
  pm.dphi.resize(hybrid.matrix.cols());
  for (std::size_t x = 0; x < pm.dphi.size(); ++x)
    pm.dphi[x] = phase_angle(odd_line[x]) - phase_angle(even_line[x]);
  return pm;
}

KSpaceData correct_even_lines_hybrid(const KSpaceData& hybrid, const ReferencePhaseMap& pm,
                                     PhaseSign sign) {
  if (hybrid.domain != Domain::XKy)
    throw ConfigError("correct_even_lines_hybrid: data must be in the (x, ky) domain");
  if (pm.dphi.size() != hybrid.matrix.cols())
    throw ConfigError("correct_even_lines_hybrid: phase map length does not match columns");

  const double flip = (sign == PhaseSign::Negated) ? -1.0 : 1.0;
  ParitySplit parts = split_parity(hybrid);
  for (std::vector<cplx>& line : parts.even.rows) {
    for (std::size_t x = 0; x < line.size(); ++x) {
      const double mag = std::abs(line[x]);
      const double corrected = phase_angle(line[x]) + flip * pm.dphi[x];
      line[x] = cplx(mag * std::cos(corrected), mag * std::sin(corrected));
    }
  }
  return merge_parity(parts);
}

KSpaceData apply_ref_correction(const KSpaceData& k_formal, const ReferencePhaseMap& pm,
                                PhaseSign sign) {
  if (k_formal.domain != Domain::KxKy)
    throw ConfigError("apply_ref_correction: imaging scan must be in the (kx, ky) domain");
  if (!k_formal.reversal_applied)
    throw ConfigError("apply_ref_correction: readout reversal must be applied first");
  if (pm.dphi.size() != k_formal.matrix.cols())
    throw ConfigError("apply_ref_correction: phase map length does not match columns");

  const KSpaceData hybrid = ifft_kx_to_x(k_formal);
  const KSpaceData corrected = correct_even_lines_hybrid(hybrid, pm, sign);
  return fft_x_to_kx(corrected);
}

}  // namespace epi

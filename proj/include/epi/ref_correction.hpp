#pragma once

#include <vector>

#include "epi/kspace.hpp"

namespace epi {

/// Flips the sign of the estimated phase difference before application.
/// Standard removes an even-line phase error that is present identically in
/// the reference and imaging scans; Negated exists for experimentation.
enum class PhaseSign { Standard, Negated };

struct RefCorrectionConfig {
  CenterRowPair rows;
  PhaseSign sign = PhaseSign::Standard;

  static RefCorrectionConfig defaults(std::size_t n_rows) {
    return {CenterRowPair::defaults(n_rows), PhaseSign::Standard};
  }
};

/// Odd/even phase-difference profile over x, estimated from a blip-off
/// reference scan: dphi[x] = phase(odd center line) - phase(even center line)
/// in the hybrid (x, ky) domain. Entries lie in (-2*pi, 2*pi); consumers
/// treat them modulo 2*pi.
struct ReferencePhaseMap {
  std::vector<double> dphi;
  CenterRowPair source_rows;
};

/// Estimate the odd/even phase-angle error from a reference scan
/// (domain KxKy, reversal already applied).
ReferencePhaseMap estimate_parity_phase(const KSpaceData& k_ref, const RefCorrectionConfig& cfg);

/// Phase-correct the even lines of hybrid-domain data: each even-line sample
/// is rebuilt from its own magnitude and the corrected phase angle
/// phi + dphi(x). Odd lines pass through untouched. Even-line magnitudes are
/// preserved per sample by construction.
KSpaceData correct_even_lines_hybrid(const KSpaceData& hybrid, const ReferencePhaseMap& pm,
                                     PhaseSign sign = PhaseSign::Standard);

/// Full reference-scan correction of an imaging scan (domain KxKy, reversal
/// applied): transform to (x, ky), fix even-line phases, transform back.
KSpaceData apply_ref_correction(const KSpaceData& k_formal, const ReferencePhaseMap& pm,
                                PhaseSign sign = PhaseSign::Standard);

}  // namespace epi

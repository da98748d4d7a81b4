#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "epi/kspace.hpp"

namespace epi {

/// Literal keeps every f-th interpolated point, which lands exactly on the
/// original samples and therefore reproduces the input bit for bit.
/// CenteredAverage takes the mean over a centered f-sample window instead,
/// smoothing residual line-to-line inconsistencies.
enum class ResampleMode { Literal, CenteredAverage };

struct IRConfig {
  std::size_t factor = 64;  // f = N_interp / N, integer >= 1
  ResampleMode mode = ResampleMode::CenteredAverage;
  std::size_t passes = 1;

  void validate() const;
};

/// Build a config from the interpolated point count N_interp, which must be a
/// positive integer multiple of the line length.
IRConfig ir_config_from_points(std::size_t n_interp, std::size_t n_cols,
                               ResampleMode mode = ResampleMode::CenteredAverage,
                               std::size_t passes = 1);

/// Piecewise-linear upsampling to f*N points: output[n*f + r] = v[n] when
/// r = 0, else (1-a)*v[n] + a*v[n+1] with a = r/f; the out-of-range neighbor
/// v[N] is clamped to v[N-1].
std::vector<cplx> linear_upsample_line(std::span<const cplx> v, std::size_t factor);

/// Resample f*N points back to N. Literal: output[n] = v[n*f].
/// CenteredAverage: mean of v over [n*f - floor(f/2), n*f + ceil(f/2) - 1]
/// with indices clamped to the valid range.
std::vector<cplx> resample_line(std::span<const cplx> v, std::size_t factor, ResampleMode mode);

/// Upsample-then-resample every line along kx independently, cfg.passes
/// times. Lines are processed in parallel with deterministic output.
KSpaceData apply_ir(const KSpaceData& k, const IRConfig& cfg);

}  // namespace epi

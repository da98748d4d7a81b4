#pragma once

#include <span>
#include <vector>

#include "epi/fourier.hpp"
#include "epi/matrix.hpp"

// Serial reference implementations, kept deliberately naive and independent of
// the production kernels. Tests use them as the comparison oracle, and the
// benchmark target measures the production kernels against them. Nothing here
// is reached from the production code path.
namespace epi::serial_reference {

/// Centered transform by direct evaluation of the defining sum:
///   y[m] = scale * sum_k x[k] * exp(s * 2*pi*i * (k - N/2)(m - N/2) / N)
/// with s = +1, scale = 1 for Forward and s = -1, scale = 1/N for Inverse.
std::vector<cplx> centered_line_transform(std::span<const cplx> line, fourier::Direction dir);

/// Row-by-row direct-evaluation transform (serial).
ComplexMatrix centered_transform_rows(const ComplexMatrix& m, fourier::Direction dir);

/// Column-by-column direct-evaluation transform (serial).
ComplexMatrix centered_transform_cols(const ComplexMatrix& m, fourier::Direction dir);

/// Piecewise-linear upsampling of one line to f*N points (serial loop).
std::vector<cplx> upsample_line(std::span<const cplx> v, std::size_t factor);

/// Brute-force windowed mean over [n*f - floor(f/2), n*f + ceil(f/2) - 1]
/// with index clamping (serial loop).
std::vector<cplx> resample_line_mean(std::span<const cplx> v, std::size_t factor);

/// Full serial 2-D centered inverse transform of k-space to a magnitude image.
RealMatrix reconstruct_magnitude(const ComplexMatrix& kspace);

}  // namespace epi::serial_reference

#pragma once

#include <cstdint>
#include <vector>

#include "epi/kspace.hpp"

namespace epi {

enum class PhantomShape { Disk, TwoDisks, Rect };

/// Deterministic raster phantom. The support must fit inside the central
/// half-height band so a half-FOV ghost never overlaps its parent.
struct PhantomSpec {
  PhantomShape shape = PhantomShape::Disk;
  std::size_t n_rows = 64;
  std::size_t n_cols = 64;
  double radius = 12.0;  // disk radius, or half-extent of the square
  double intensity = 1.0;
  std::size_t center_row = 32;
  std::size_t center_col = 32;

  static PhantomSpec disk(std::size_t size, double radius, double intensity = 1.0);

  void validate() const;
};

/// Injected odd/even inconsistencies. Phase terms act multiplicatively on the
/// even lines in the hybrid (x, ky) domain; the polynomial is evaluated in
/// normalized x = 2*n/N - 1. The peak shift circularly displaces even lines
/// along kx. Noise is i.i.d. complex Gaussian, sigma relative to the
/// noise-free k-space peak magnitude.
struct ErrorModel {
  double const_phase_even = 0.0;
  std::vector<double> xphase_poly_even;
  std::ptrdiff_t peak_shift_even = 0;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;

  void validate(std::size_t n_cols) const;
};

struct SimOutput {
  KSpaceData k_formal;             // imaging scan, errors applied, reversal done
  KSpaceData k_ref;                // blip-off reference scan, same errors, own noise
  RealMatrix ground_truth_image;   // the phantom
  KSpaceData ground_truth_kspace;  // error-free forward transform
};

/// Rasterize the phantom (real, nonnegative).
RealMatrix make_phantom(const PhantomSpec& spec);

/// Support mask of the phantom (true where intensity would be deposited).
std::vector<bool> phantom_support(const PhantomSpec& spec);

/// Forward-model an EPI acquisition of the image: error-free k-space, an
/// imaging scan with the even-line errors applied, and a matched blip-off
/// reference scan whose every echo re-samples the central ky line. Both scans
/// are delivered with readout reversal already applied. With averages > 1 the
/// noise of each scan is the mean of that many independent realizations.
SimOutput simulate_epi(const RealMatrix& img, const ErrorModel& err, unsigned averages = 1);

/// Energy inside the half-FOV-shifted phantom support divided by total image
/// energy. A sharp test-side complement to the GSR.
double ghost_energy_fraction(const RealMatrix& img, const PhantomSpec& phantom);

/// Multiply even lines of hybrid-domain data by exp(i * (theta + poly(x))).
/// Exposed for composition tests; simulate_epi uses it internally.
KSpaceData modulate_even_lines_hybrid(const KSpaceData& hybrid, double theta,
                                      const std::vector<double>& poly);

/// Circularly shift every even line along kx by delta samples
/// (output[n] = input[(n - delta) mod N]).
KSpaceData shift_even_lines(const KSpaceData& k, std::ptrdiff_t delta);

}  // namespace epi

#include "epi/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "epi/errors.hpp"

namespace epi {
namespace {

// Deterministic Gaussian stream: mt19937_64 plus an explicit Box-Muller,
// so identical seeds give bit-identical output on every platform.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();        // [0, 1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

bool in_support(const PhantomSpec& spec, std::size_t r, std::size_t c) {
  const double dr = static_cast<double>(r) - static_cast<double>(spec.center_row);
  const double dc = static_cast<double>(c) - static_cast<double>(spec.center_col);
  switch (spec.shape) {
    case PhantomShape::Disk:
      return dr * dr + dc * dc <= spec.radius * spec.radius;
    case PhantomShape::TwoDisks: {
      const double off = spec.radius + 2.0;
      const double dl = dc + off;
      const double dg = dc - off;
      return dr * dr + dl * dl <= spec.radius * spec.radius ||
             dr * dr + dg * dg <= spec.radius * spec.radius;
    }
    case PhantomShape::Rect:
      return std::abs(dr) <= spec.radius && std::abs(dc) <= spec.radius;
  }
  return false;
}

bool has_phase_error(const ErrorModel& err) {
  if (err.const_phase_even != 0.0) return true;
  return std::any_of(err.xphase_poly_even.begin(), err.xphase_poly_even.end(),
                     [](double c) { return c != 0.0; });
}

double max_magnitude(const ComplexMatrix& m) {
  double peak = 0.0;
  for (const cplx& v : m.data()) peak = std::max(peak, std::abs(v));
  return peak;
}

// Mean of `averages` independent complex Gaussian draws per sample, scaled by
// sigma relative to the pre-noise peak. Draw order is fixed (row-major, one
// sample at a time) so results are reproducible.
void add_scan_noise(ComplexMatrix& m, double sigma, unsigned averages, GaussianSampler& g) {
  if (sigma == 0.0) return;
  const double scale = sigma * max_magnitude(m);
  for (cplx& v : m.data()) {
    cplx acc(0.0, 0.0);
    for (unsigned a = 0; a < averages; ++a) acc += cplx(g.next(), g.next());
    v += scale * (acc / static_cast<double>(averages));
  }
}

std::size_t wrap_source_index(std::size_t n, std::ptrdiff_t delta, std::size_t len) {
  std::ptrdiff_t src = static_cast<std::ptrdiff_t>(n) - delta;
  const auto span = static_cast<std::ptrdiff_t>(len);
  src %= span;
  if (src < 0) src += span;
  return static_cast<std::size_t>(src);
}

}  // namespace

PhantomSpec PhantomSpec::disk(std::size_t size, double radius, double intensity) {
  PhantomSpec spec;
  spec.shape = PhantomShape::Disk;
  spec.n_rows = size;
  spec.n_cols = size;
  spec.radius = radius;
  spec.intensity = intensity;
  spec.center_row = size / 2;
  spec.center_col = size / 2;
  return spec;
}

void PhantomSpec::validate() const {
  if (n_rows < 4 || n_cols < 4 || n_rows % 2 != 0 || n_cols % 2 != 0)
    throw ConfigError("PhantomSpec: matrix dimensions must be even and at least 4");
  if (!(intensity > 0.0)) throw ConfigError("PhantomSpec: intensity must be > 0");
  if (!(radius >= 0.0) || !std::isfinite(radius))
    throw ConfigError("PhantomSpec: radius must be finite and >= 0");
  if (center_row >= n_rows || center_col >= n_cols)
    throw ConfigError("PhantomSpec: center lies outside the matrix");

  // Support must stay inside the central half-height band so the half-FOV
  // ghost never overlaps the parent.
  const std::size_t band_lo = n_rows / 4;
  const std::size_t band_hi = band_lo + n_rows / 2;  // exclusive
  bool any = false;
  for (std::size_t r = 0; r < n_rows; ++r) {
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (!in_support(*this, r, c)) continue;
      any = true;
      if (r < band_lo || r >= band_hi)
        throw ConfigError("PhantomSpec: support leaves the central half-height band");
    }
  }
  if (!any) throw ConfigError("PhantomSpec: empty support");
}

RealMatrix make_phantom(const PhantomSpec& spec) {
  spec.validate();
  RealMatrix img(spec.n_rows, spec.n_cols);
  for (std::size_t r = 0; r < spec.n_rows; ++r)
    for (std::size_t c = 0; c < spec.n_cols; ++c)
      if (in_support(spec, r, c)) img.at(r, c) = spec.intensity;
  return img;
}

std::vector<bool> phantom_support(const PhantomSpec& spec) {
  spec.validate();
  std::vector<bool> mask(spec.n_rows * spec.n_cols, false);
  for (std::size_t r = 0; r < spec.n_rows; ++r)
    for (std::size_t c = 0; c < spec.n_cols; ++c)
      mask[r * spec.n_cols + c] = in_support(spec, r, c);
  return mask;
}

void ErrorModel::validate(std::size_t n_cols) const {
  const auto quarter = static_cast<std::ptrdiff_t>(n_cols / 4);
  if (peak_shift_even <= -quarter || peak_shift_even >= quarter)
    throw ConfigError("ErrorModel: |peak_shift_even| must be below N/4");
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma))
    throw ConfigError("ErrorModel: noise_sigma must be finite and >= 0");
  if (!std::isfinite(const_phase_even))
    throw ConfigError("ErrorModel: const_phase_even must be finite");
  for (double c : xphase_poly_even)
    if (!std::isfinite(c)) throw ConfigError("ErrorModel: polynomial coefficients must be finite");
}

KSpaceData modulate_even_lines_hybrid(const KSpaceData& hybrid, double theta,
                                      const std::vector<double>& poly) {
  if (hybrid.domain != Domain::XKy)
    throw ConfigError("modulate_even_lines_hybrid: data must be in the (x, ky) domain");

  const std::size_t n_cols = hybrid.matrix.cols();
  std::vector<cplx> factor(n_cols);
  for (std::size_t x = 0; x < n_cols; ++x) {
    const double xn = 2.0 * static_cast<double>(x) / static_cast<double>(n_cols) - 1.0;
    double p = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) p = p * xn + *it;
    const double angle = theta + p;
    factor[x] = cplx(std::cos(angle), std::sin(angle));
  }

  KSpaceData out = hybrid;
  for (std::size_t r = 0; r < out.matrix.rows(); ++r) {
    if (row_parity(r) != Parity::Even) continue;
    auto row = out.matrix.row(r);
    for (std::size_t x = 0; x < n_cols; ++x) row[x] *= factor[x];
  }
  return out;
}

KSpaceData shift_even_lines(const KSpaceData& k, std::ptrdiff_t delta) {
  if (k.domain != Domain::KxKy)
    throw ConfigError("shift_even_lines: data must be in the (kx, ky) domain");
  if (delta == 0) return k;

  KSpaceData out = k;
  const std::size_t n_cols = k.matrix.cols();
  std::vector<cplx> shifted(n_cols);
  for (std::size_t r = 0; r < k.matrix.rows(); ++r) {
    if (row_parity(r) != Parity::Even) continue;
    const auto src = k.matrix.row(r);
    for (std::size_t n = 0; n < n_cols; ++n)
      shifted[n] = src[wrap_source_index(n, delta, n_cols)];
    std::copy(shifted.begin(), shifted.end(), out.matrix.row(r).begin());
  }
  return out;
}

SimOutput simulate_epi(const RealMatrix& img, const ErrorModel& err, unsigned averages) {
  if (averages == 0) throw ConfigError("simulate_epi: averages must be >= 1");
  if (!img.all_finite()) throw NumericError("simulate_epi: image contains NaN/Inf");
  err.validate(img.cols());

  KSpaceData image_domain;
  image_domain.matrix = ComplexMatrix(img.rows(), img.cols());
  for (std::size_t i = 0; i < img.size(); ++i)
    image_domain.matrix.data()[i] = cplx(img.data()[i], 0.0);
  image_domain.domain = Domain::XY;
  image_domain.reversal_applied = true;

  SimOutput out;
  out.ground_truth_image = img;
  out.ground_truth_kspace = fft_x_to_kx(fft_y_to_ky(image_domain));

  const auto inject_phase = [&](KSpaceData k) {
    if (!has_phase_error(err)) return k;
    KSpaceData hybrid = ifft_kx_to_x(k);
    hybrid = modulate_even_lines_hybrid(hybrid, err.const_phase_even, err.xphase_poly_even);
    return fft_x_to_kx(hybrid);
  };

  // Imaging scan: phase error in hybrid space, then the kx displacement.
  KSpaceData formal = inject_phase(out.ground_truth_kspace);
  formal = shift_even_lines(formal, err.peak_shift_even);

  // Reference scan: blips off, every echo re-samples the central ky line,
  // then the same per-echo parity errors.
  KSpaceData ref = out.ground_truth_kspace;
  {
    const std::size_t center = ref.matrix.rows() / 2;
    std::vector<cplx> center_line(ref.matrix.row(center).begin(), ref.matrix.row(center).end());
    for (std::size_t r = 0; r < ref.matrix.rows(); ++r)
      std::copy(center_line.begin(), center_line.end(), ref.matrix.row(r).begin());
  }
  ref = inject_phase(ref);
  ref = shift_even_lines(ref, err.peak_shift_even);

  GaussianSampler noise(err.seed);
  add_scan_noise(formal.matrix, err.noise_sigma, averages, noise);
  add_scan_noise(ref.matrix, err.noise_sigma, averages, noise);

  out.k_formal = std::move(formal);
  out.k_ref = std::move(ref);
  return out;
}

double ghost_energy_fraction(const RealMatrix& img, const PhantomSpec& phantom) {
  if (img.rows() != phantom.n_rows || img.cols() != phantom.n_cols)
    throw ConfigError("ghost_energy_fraction: image and phantom dimensions differ");
  const std::vector<bool> support = phantom_support(phantom);

  const std::size_t half = img.rows() / 2;
  double ghost = 0.0;
  double total = 0.0;
  for (std::size_t r = 0; r < img.rows(); ++r) {
    const std::size_t shifted = (r + half) % img.rows();
    for (std::size_t c = 0; c < img.cols(); ++c) {
      const double v = img.at(r, c);
      total += v * v;
      if (support[shifted * img.cols() + c]) ghost += v * v;
    }
  }
  return total == 0.0 ? 0.0 : ghost / total;
}

}  // namespace epi

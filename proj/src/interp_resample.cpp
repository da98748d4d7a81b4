#include "epi/interp_resample.hpp"

#include <algorithm>

#include "epi/errors.hpp"

namespace epi {

void IRConfig::validate() const {
  if (factor < 1) throw ConfigError("IRConfig: interpolation factor must be >= 1");
  if (passes < 1) throw ConfigError("IRConfig: passes must be >= 1");
}

IRConfig ir_config_from_points(std::size_t n_interp, std::size_t n_cols, ResampleMode mode,
                               std::size_t passes) {
  if (n_cols == 0 || n_interp == 0 || n_interp % n_cols != 0)
    throw ConfigError("IRConfig: interpolated point count must be a positive multiple of N");
  IRConfig cfg{n_interp / n_cols, mode, passes};
  cfg.validate();
  return cfg;
}

std::vector<cplx> linear_upsample_line(std::span<const cplx> v, std::size_t factor) {
  if (factor < 1) throw ConfigError("linear_upsample_line: factor must be >= 1");
  const std::size_t n = v.size();
  std::vector<cplx> out(n * factor);
  for (std::size_t q = 0; q < n; ++q) {
    const cplx left = v[q];
    const cplx right = (q + 1 < n) ? v[q + 1] : v[n - 1];  // clamp past the end
    cplx* seg = out.data() + q * factor;
    seg[0] = left;
    for (std::size_t r = 1; r < factor; ++r) {
      const double alpha = static_cast<double>(r) / static_cast<double>(factor);
      seg[r] = (1.0 - alpha) * left + alpha * right;
    }
  }
  return out;
}

std::vector<cplx> resample_line(std::span<const cplx> v, std::size_t factor, ResampleMode mode) {
  if (factor < 1) throw ConfigError("resample_line: factor must be >= 1");
  if (v.size() % factor != 0)
    throw ConfigError("resample_line: length is not divisible by the factor");
  const std::size_t n = v.size() / factor;
  std::vector<cplx> out(n);

  if (mode == ResampleMode::Literal) {
    for (std::size_t i = 0; i < n; ++i) out[i] = v[i * factor];
    return out;
  }

  const auto last = static_cast<std::ptrdiff_t>(v.size()) - 1;
  const auto lo = static_cast<std::ptrdiff_t>(factor / 2);
  const auto hi = static_cast<std::ptrdiff_t>((factor + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    const auto anchor = static_cast<std::ptrdiff_t>(i * factor);
    cplx acc(0.0, 0.0);
    for (std::ptrdiff_t j = anchor - lo; j < anchor + hi; ++j)
      acc += v[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(j, 0, last))];
    out[i] = acc / static_cast<double>(factor);
  }
  return out;
}

KSpaceData apply_ir(const KSpaceData& k, const IRConfig& cfg) {
  if (k.domain != Domain::KxKy)
    throw ConfigError("apply_ir: data must be in the (kx, ky) domain");
  cfg.validate();

  KSpaceData out = k;
  const auto n_rows = static_cast<std::ptrdiff_t>(k.matrix.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < n_rows; ++r) {
    auto line = out.matrix.row(static_cast<std::size_t>(r));
    for (std::size_t pass = 0; pass < cfg.passes; ++pass) {
      const std::vector<cplx> up = linear_upsample_line(line, cfg.factor);
      const std::vector<cplx> down = resample_line(up, cfg.factor, cfg.mode);
      std::copy(down.begin(), down.end(), line.begin());
    }
  }
  return out;
}

}  // namespace epi

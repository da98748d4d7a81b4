#include "epi/kspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "epi/errors.hpp"
#include "epi/fourier.hpp"

namespace epi {
namespace {

void require_domain(const KSpaceData& k, Domain expected, const char* op) {
  if (k.domain != expected)
    throw ConfigError(std::string(op) + ": data is not in the required domain");
}

KSpaceData transformed(const KSpaceData& k, Domain from, Domain to, fourier::Direction dir,
                       bool along_rows, const char* op) {
  require_domain(k, from, op);
  KSpaceData out = k;
  if (along_rows)
    fourier::centered_transform_rows(out.matrix, dir);
  else
    fourier::centered_transform_cols(out.matrix, dir);
  out.domain = to;
  return out;
}

}  // namespace

void AcquisitionMeta::validate() const {
  const auto positive = [](const char* name, double v) {
    if (!(v > 0.0)) throw ConfigError(std::string("AcquisitionMeta: ") + name + " must be > 0");
  };
  if (field_strength_t) positive("field_strength_t", *field_strength_t);
  if (fov_mm) {
    positive("fov_mm", fov_mm->first);
    positive("fov_mm", fov_mm->second);
  }
  if (slice_thickness_mm) positive("slice_thickness_mm", *slice_thickness_mm);
  if (te_ms) positive("te_ms", *te_ms);
  if (tr_ms) positive("tr_ms", *tr_ms);
  if (averages && *averages == 0) throw ConfigError("AcquisitionMeta: averages must be > 0");
  if (b_value_s_per_mm2) positive("b_value_s_per_mm2", *b_value_s_per_mm2);
}

AcquisitionMeta AcquisitionMeta::low_field_defaults() {
  AcquisitionMeta m;
  m.field_strength_t = 0.5;
  m.fov_mm = {250.0, 250.0};
  m.slice_thickness_mm = 5.0;
  m.te_ms = 86.0;
  m.tr_ms = 3000.0;
  m.averages = 1;
  return m;
}

void CenterRowPair::validate(std::size_t n_rows) const {
  if (even_row < 1 || even_row > n_rows || odd_row < 1 || odd_row > n_rows)
    throw ConfigError("CenterRowPair: rows out of range");
  if (even_row % 2 != 0) throw ConfigError("CenterRowPair: even_row has odd parity");
  if (odd_row % 2 != 1) throw ConfigError("CenterRowPair: odd_row has even parity");
  const std::size_t lo = std::min(even_row, odd_row);
  const std::size_t hi = std::max(even_row, odd_row);
  if (hi - lo != 1) throw ConfigError("CenterRowPair: rows must be adjacent");
}

KSpaceData reverse_alternate_rows(const KSpaceData& k, Parity which) {
  require_domain(k, Domain::KxKy, "reverse_alternate_rows");
  if (k.reversal_applied)
    throw ConfigError("reverse_alternate_rows: reversal already applied");
  KSpaceData out = k;
  for (std::size_t r = 0; r < out.matrix.rows(); ++r) {
    if (row_parity(r) != which) continue;
    auto row = out.matrix.row(r);
    std::reverse(row.begin(), row.end());
  }
  out.reversal_applied = true;
  return out;
}

KSpaceData ifft_kx_to_x(const KSpaceData& k) {
  return transformed(k, Domain::KxKy, Domain::XKy, fourier::Direction::Inverse, true,
                     "ifft_kx_to_x");
}

KSpaceData fft_x_to_kx(const KSpaceData& k) {
  return transformed(k, Domain::XKy, Domain::KxKy, fourier::Direction::Forward, true,
                     "fft_x_to_kx");
}

KSpaceData ifft_ky_to_y(const KSpaceData& k) {
  return transformed(k, Domain::XKy, Domain::XY, fourier::Direction::Inverse, false,
                     "ifft_ky_to_y");
}

KSpaceData fft_y_to_ky(const KSpaceData& k) {
  return transformed(k, Domain::XY, Domain::XKy, fourier::Direction::Forward, false,
                     "fft_y_to_ky");
}

ParitySplit split_parity(const KSpaceData& k) {
  ParitySplit parts;
  parts.n_rows = k.matrix.rows();
  parts.n_cols = k.matrix.cols();
  parts.domain = k.domain;
  parts.reversal_applied = k.reversal_applied;
  parts.meta = k.meta;
  for (std::size_t r = 0; r < k.matrix.rows(); ++r) {
    ParityRows& group = (row_parity(r) == Parity::Odd) ? parts.odd : parts.even;
    group.indices.push_back(r);
    const auto row = k.matrix.row(r);
    group.rows.emplace_back(row.begin(), row.end());
  }
  return parts;
}

KSpaceData merge_parity(const ParitySplit& parts) {
  if (parts.odd.indices.size() != parts.odd.rows.size() ||
      parts.even.indices.size() != parts.even.rows.size())
    throw ConfigError("merge_parity: index/row count mismatch");

  std::vector<bool> seen(parts.n_rows, false);
  const auto place = [&](const ParityRows& group, ComplexMatrix& m) {
    for (std::size_t i = 0; i < group.indices.size(); ++i) {
      const std::size_t r = group.indices[i];
      if (r >= parts.n_rows) throw ConfigError("merge_parity: row index out of range");
      if (seen[r]) throw ConfigError("merge_parity: overlapping row indices");
      if (group.rows[i].size() != parts.n_cols)
        throw ConfigError("merge_parity: row length mismatch");
      seen[r] = true;
      std::copy(group.rows[i].begin(), group.rows[i].end(), m.row(r).begin());
    }
  };

  KSpaceData out;
  out.matrix = ComplexMatrix(parts.n_rows, parts.n_cols);
  out.domain = parts.domain;
  out.reversal_applied = parts.reversal_applied;
  out.meta = parts.meta;
  place(parts.odd, out.matrix);
  place(parts.even, out.matrix);
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw ConfigError("merge_parity: missing row indices");
  return out;
}

double phase_angle(const cplx& v) {
  if (v.real() == 0.0 && v.imag() == 0.0) return 0.0;
  const double p = std::atan2(v.imag(), v.real());
  // atan2(-0, x<0) is -pi; fold it onto +pi to keep the (-pi, pi] range.
  if (p == -std::numbers::pi) return std::numbers::pi;
  return p;
}

RealMatrix magnitude(const ComplexMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  const auto n = static_cast<std::ptrdiff_t>(m.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out.data()[static_cast<std::size_t>(i)] = std::abs(m.data()[static_cast<std::size_t>(i)]);
  return out;
}

RealMatrix phase(const ComplexMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  const auto n = static_cast<std::ptrdiff_t>(m.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const cplx& v = m.data()[static_cast<std::size_t>(i)];
    out.data()[static_cast<std::size_t>(i)] = phase_angle(v);
  }
  return out;
}

}  // namespace epi

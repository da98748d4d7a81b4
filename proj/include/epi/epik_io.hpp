#pragma once

#include <filesystem>
#include <string>

#include "epi/kspace.hpp"
#include "epi/matrix.hpp"

namespace epi {

// EPIK container: 16-byte header followed by row-major complex samples.
//   bytes 0-3   magic "EPIK"
//   byte  4     version, 0x01
//   byte  5     domain tag: 0 = (kx,ky), 1 = (x,ky), 2 = (x,y)
//   byte  6     reversal flag: 0 or 1
//   byte  7     reserved, 0
//   bytes 8-11  n_cols, u32 little-endian
//   bytes 12-15 n_rows, u32 little-endian
//   payload     n_rows*n_cols samples, each two f32 little-endian (re, im)
// An optional JSON sidecar at "<path>.json" carries the acquisition metadata.

/// Read an EPIK file (and its metadata sidecar, when present). Samples are
/// widened to 64-bit components in memory.
KSpaceData read_epik(const std::filesystem::path& path);

/// Write an EPIK file; 64-bit components are rounded to nearest 32-bit on
/// write. The file is written to a temporary name and renamed on success, so
/// no partial output ever appears. A sidecar is written when the metadata has
/// any value set.
void write_epik(const KSpaceData& k, const std::filesystem::path& path);

/// 8-bit P5 PGM, max-normalized: the maximum magnitude maps to 255, linear
/// scaling, round half up. An all-zero image stays all zero.
void export_image_pgm(const RealMatrix& img, const std::filesystem::path& path);

/// Lossless dump: row-major f64 little-endian values, no header.
void export_image_raw(const RealMatrix& img, const std::filesystem::path& path);

/// Serialize the metadata sidecar JSON (fixed key order).
std::string meta_to_json(const AcquisitionMeta& meta);

/// Parse a metadata sidecar.
AcquisitionMeta meta_from_json(const std::string& text);

}  // namespace epi

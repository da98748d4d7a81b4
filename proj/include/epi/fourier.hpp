#pragma once

#include <span>

#include "epi/matrix.hpp"

namespace epi::fourier {

/// Forward: unit-scale sum with kernel exp(+2*pi*i*j*k/N).
/// Inverse: 1/N-scale sum with kernel exp(-2*pi*i*j*k/N).
enum class Direction { Forward, Inverse };

/// Centered 1-D transform of every row, in place. Lines are processed in
/// parallel; each line is computed with a fixed serial operation order, so the
/// result is identical for any thread count. Power-of-two lengths use an
/// iterative radix-2 kernel, other even lengths fall back to direct
/// evaluation.
void centered_transform_rows(ComplexMatrix& m, Direction dir);

/// Centered 1-D transform of every column, in place. Same guarantees as the
/// row variant.
void centered_transform_cols(ComplexMatrix& m, Direction dir);

/// Centered transform of a single line (out of place).
std::vector<cplx> centered_transform_line(std::span<const cplx> line, Direction dir);

}  // namespace epi::fourier

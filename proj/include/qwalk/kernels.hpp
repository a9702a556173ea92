#pragma once

#include <cstddef>

#include "qwalk/mat2.hpp"

namespace qwalk::kernels {

// The walk's inner loops are 2x2 complex mixes broadcast over arrays,
//
//   u[i] = m00*x[i] + m01*y[i]
//   v[i] = m10*x[i] + m11*y[i]
//
// applied to coin rows of a pure state, row pairs of a density matrix, and
// the two column halves of each density-matrix row. Every variant (scalar,
// AVX2, NEON) evaluates the same expression tree per element:
//
//   re(m*z) = mr*zr - mi*zi,  im(m*z) = mr*zi + mi*zr,
//
// products first, one add/sub each, then the final sum of the two terms.
// No fused multiply-add is used and the project builds with
// -ffp-contract=off, so all variants return bit-identical results. The
// equivalence tests assert exact equality, not a tolerance.
//
// Aliasing: mix2 permits u == x and v == y (in-place); mix2_acc permits no
// overlap between destinations and sources. Any other overlap is undefined.

/// (u, v) <- M (x, y), elementwise over n entries.
using mix2_fn = void (*)(cplx* u, cplx* v, const cplx* x, const cplx* y,
                         std::size_t n, const Mat2& m);

/// (u, v) <- (u, v) + M (x, y).
using mix2_acc_fn = mix2_fn;

/// out[i] = |x[i]|^2 + |y[i]|^2.
using abs2_sum2_fn = void (*)(double* out, const cplx* x, const cplx* y,
                              std::size_t n);

struct KernelSet {
    mix2_fn mix2;
    mix2_acc_fn mix2_acc;
    abs2_sum2_fn abs2_sum2;
    const char* name;
};

/// Portable reference kernels; always available.
const KernelSet& scalar_kernels();

/// AVX2 kernels, or nullptr when the build target or the running cpu lacks
/// AVX2.
const KernelSet* avx2_kernels();

/// NEON kernels on aarch64 builds, or nullptr.
const KernelSet* neon_kernels();

/// The set chosen at first use: the best available, unless the QWALK_SIMD
/// environment variable (auto | scalar | avx2 | neon) pins one. Requesting
/// an unavailable set falls back to scalar.
const KernelSet& active_kernels();

}  // namespace qwalk::kernels

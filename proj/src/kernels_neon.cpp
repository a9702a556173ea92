// NEON variants for aarch64, one complex double per 128-bit register.
// Negating mi*zi and adding is bit-identical to the scalar subtraction, so
// the exact-equivalence contract of kernels.hpp holds here too.

#include "qwalk/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace qwalk::kernels {
namespace {

// m * z; z holds (zr, zi).
inline float64x2_t cmul1(double mr, double mi, float64x2_t z) {
    const float64x2_t t1 = vmulq_n_f64(z, mr);          // (mr*zr, mr*zi)
    const float64x2_t zswap = vextq_f64(z, z, 1);       // (zi, zr)
    const float64x2_t t2 = vmulq_n_f64(zswap, mi);      // (mi*zi, mi*zr)
    const float64x2_t sign = {-1.0, 1.0};
    return vaddq_f64(t1, vmulq_f64(t2, sign));
}

void mix2_neon(cplx* u, cplx* v, const cplx* x, const cplx* y,
               std::size_t n, const Mat2& m) {
    const double m00r = m.a00.real(), m00i = m.a00.imag();
    const double m01r = m.a01.real(), m01i = m.a01.imag();
    const double m10r = m.a10.real(), m10i = m.a10.imag();
    const double m11r = m.a11.real(), m11i = m.a11.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t vx = vld1q_f64(reinterpret_cast<const double*>(x + i));
        const float64x2_t vy = vld1q_f64(reinterpret_cast<const double*>(y + i));
        const float64x2_t un = vaddq_f64(cmul1(m00r, m00i, vx), cmul1(m01r, m01i, vy));
        const float64x2_t vn = vaddq_f64(cmul1(m10r, m10i, vx), cmul1(m11r, m11i, vy));
        vst1q_f64(reinterpret_cast<double*>(u + i), un);
        vst1q_f64(reinterpret_cast<double*>(v + i), vn);
    }
}

void mix2_acc_neon(cplx* u, cplx* v, const cplx* x, const cplx* y,
                   std::size_t n, const Mat2& m) {
    const double m00r = m.a00.real(), m00i = m.a00.imag();
    const double m01r = m.a01.real(), m01i = m.a01.imag();
    const double m10r = m.a10.real(), m10i = m.a10.imag();
    const double m11r = m.a11.real(), m11i = m.a11.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t vx = vld1q_f64(reinterpret_cast<const double*>(x + i));
        const float64x2_t vy = vld1q_f64(reinterpret_cast<const double*>(y + i));
        const float64x2_t du = vaddq_f64(cmul1(m00r, m00i, vx), cmul1(m01r, m01i, vy));
        const float64x2_t dv = vaddq_f64(cmul1(m10r, m10i, vx), cmul1(m11r, m11i, vy));
        const float64x2_t uo = vld1q_f64(reinterpret_cast<double*>(u + i));
        const float64x2_t vo = vld1q_f64(reinterpret_cast<double*>(v + i));
        vst1q_f64(reinterpret_cast<double*>(u + i), vaddq_f64(uo, du));
        vst1q_f64(reinterpret_cast<double*>(v + i), vaddq_f64(vo, dv));
    }
}

void abs2_sum2_neon(double* out, const cplx* x, const cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t vx = vld1q_f64(reinterpret_cast<const double*>(x + i));
        const float64x2_t vy = vld1q_f64(reinterpret_cast<const double*>(y + i));
        // paired adds mirror the scalar (xr*xr + xi*xi) + (yr*yr + yi*yi)
        const double xs = vpaddd_f64(vmulq_f64(vx, vx));
        const double ys = vpaddd_f64(vmulq_f64(vy, vy));
        out[i] = xs + ys;
    }
}

}  // namespace

const KernelSet* neon_kernels() {
    static const KernelSet set{mix2_neon, mix2_acc_neon, abs2_sum2_neon, "neon"};
    return &set;
}

}  // namespace qwalk::kernels

#else

namespace qwalk::kernels {

const KernelSet* neon_kernels() { return nullptr; }

}  // namespace qwalk::kernels

#endif

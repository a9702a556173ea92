// AVX2 variants of the mix/abs2 kernels. This translation unit is compiled
// with -mavx2 on x86 targets; avx2_kernels() still verifies cpu support at
// runtime before handing the set out. Two complex doubles per 256-bit
// register, interleaved re/im exactly as std::complex<double> is stored.

#include "qwalk/kernels.hpp"

#if (defined(__x86_64__) || defined(__i386__)) && defined(__AVX2__)

#include <immintrin.h>

namespace qwalk::kernels {
namespace {

inline void cmul(double mr, double mi, double zr, double zi,
                 double& outr, double& outi) {
    outr = mr * zr - mi * zi;
    outi = mr * zi + mi * zr;
}

// m * z for two packed complex values. The permute pairs (zi, zr) so that
// addsub produces (mr*zr - mi*zi, mr*zi + mi*zr): the scalar kernel's
// operations, lane for lane.
inline __m256d cmul2(__m256d mr, __m256d mi, __m256d z) {
    const __m256d zswap = _mm256_permute_pd(z, 0b0101);
    const __m256d t1 = _mm256_mul_pd(mr, z);
    const __m256d t2 = _mm256_mul_pd(mi, zswap);
    return _mm256_addsub_pd(t1, t2);
}

void mix2_avx2(cplx* u, cplx* v, const cplx* x, const cplx* y,
               std::size_t n, const Mat2& m) {
    const __m256d m00r = _mm256_set1_pd(m.a00.real());
    const __m256d m00i = _mm256_set1_pd(m.a00.imag());
    const __m256d m01r = _mm256_set1_pd(m.a01.real());
    const __m256d m01i = _mm256_set1_pd(m.a01.imag());
    const __m256d m10r = _mm256_set1_pd(m.a10.real());
    const __m256d m10i = _mm256_set1_pd(m.a10.imag());
    const __m256d m11r = _mm256_set1_pd(m.a11.real());
    const __m256d m11i = _mm256_set1_pd(m.a11.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d vy = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
        const __m256d un = _mm256_add_pd(cmul2(m00r, m00i, vx), cmul2(m01r, m01i, vy));
        const __m256d vn = _mm256_add_pd(cmul2(m10r, m10i, vx), cmul2(m11r, m11i, vy));
        _mm256_storeu_pd(reinterpret_cast<double*>(u + i), un);
        _mm256_storeu_pd(reinterpret_cast<double*>(v + i), vn);
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        double ar, ai, br, bi;
        cmul(m.a00.real(), m.a00.imag(), xr, xi, ar, ai);
        cmul(m.a01.real(), m.a01.imag(), yr, yi, br, bi);
        const cplx un(ar + br, ai + bi);
        cmul(m.a10.real(), m.a10.imag(), xr, xi, ar, ai);
        cmul(m.a11.real(), m.a11.imag(), yr, yi, br, bi);
        const cplx vn(ar + br, ai + bi);
        u[i] = un;
        v[i] = vn;
    }
}

void mix2_acc_avx2(cplx* u, cplx* v, const cplx* x, const cplx* y,
                   std::size_t n, const Mat2& m) {
    const __m256d m00r = _mm256_set1_pd(m.a00.real());
    const __m256d m00i = _mm256_set1_pd(m.a00.imag());
    const __m256d m01r = _mm256_set1_pd(m.a01.real());
    const __m256d m01i = _mm256_set1_pd(m.a01.imag());
    const __m256d m10r = _mm256_set1_pd(m.a10.real());
    const __m256d m10i = _mm256_set1_pd(m.a10.imag());
    const __m256d m11r = _mm256_set1_pd(m.a11.real());
    const __m256d m11i = _mm256_set1_pd(m.a11.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d vy = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
        const __m256d du = _mm256_add_pd(cmul2(m00r, m00i, vx), cmul2(m01r, m01i, vy));
        const __m256d dv = _mm256_add_pd(cmul2(m10r, m10i, vx), cmul2(m11r, m11i, vy));
        const __m256d uo = _mm256_loadu_pd(reinterpret_cast<const double*>(u + i));
        const __m256d vo = _mm256_loadu_pd(reinterpret_cast<const double*>(v + i));
        _mm256_storeu_pd(reinterpret_cast<double*>(u + i), _mm256_add_pd(uo, du));
        _mm256_storeu_pd(reinterpret_cast<double*>(v + i), _mm256_add_pd(vo, dv));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        double ar, ai, br, bi;
        cmul(m.a00.real(), m.a00.imag(), xr, xi, ar, ai);
        cmul(m.a01.real(), m.a01.imag(), yr, yi, br, bi);
        u[i] = cplx(u[i].real() + (ar + br), u[i].imag() + (ai + bi));
        cmul(m.a10.real(), m.a10.imag(), xr, xi, ar, ai);
        cmul(m.a11.real(), m.a11.imag(), yr, yi, br, bi);
        v[i] = cplx(v[i].real() + (ar + br), v[i].imag() + (ai + bi));
    }
}

void abs2_sum2_avx2(double* out, const cplx* x, const cplx* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d vy = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
        // hadd of the squared lanes gives (|x0|^2, |y0|^2, |x1|^2, |y1|^2)
        const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(vx, vx), _mm256_mul_pd(vy, vy));
        const __m128d lo = _mm256_castpd256_pd128(h);
        const __m128d hi = _mm256_extractf128_pd(h, 1);
        const __m128d xs = _mm_unpacklo_pd(lo, hi);  // (|x0|^2, |x1|^2)
        const __m128d ys = _mm_unpackhi_pd(lo, hi);  // (|y0|^2, |y1|^2)
        _mm_storeu_pd(out + i, _mm_add_pd(xs, ys));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        out[i] = (xr * xr + xi * xi) + (yr * yr + yi * yi);
    }
}

}  // namespace

const KernelSet* avx2_kernels() {
    static const KernelSet set{mix2_avx2, mix2_acc_avx2, abs2_sum2_avx2, "avx2"};
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok ? &set : nullptr;
}

}  // namespace qwalk::kernels

#else

namespace qwalk::kernels {

const KernelSet* avx2_kernels() { return nullptr; }

}  // namespace qwalk::kernels

#endif

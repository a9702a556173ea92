#include "qwalk/kernels.hpp"

namespace qwalk::kernels {
namespace {

// One complex product with the rounding sequence pinned: two multiplies per
// component, then a single add or subtract.
inline void cmul(double mr, double mi, double zr, double zi,
                 double& outr, double& outi) {
    outr = mr * zr - mi * zi;
    outi = mr * zi + mi * zr;
}

void mix2_scalar(cplx* u, cplx* v, const cplx* x, const cplx* y,
                 std::size_t n, const Mat2& m) {
    const double m00r = m.a00.real(), m00i = m.a00.imag();
    const double m01r = m.a01.real(), m01i = m.a01.imag();
    const double m10r = m.a10.real(), m10i = m.a10.imag();
    const double m11r = m.a11.real(), m11i = m.a11.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        double ar, ai, br, bi;
        cmul(m00r, m00i, xr, xi, ar, ai);
        cmul(m01r, m01i, yr, yi, br, bi);
        const cplx un(ar + br, ai + bi);
        cmul(m10r, m10i, xr, xi, ar, ai);
        cmul(m11r, m11i, yr, yi, br, bi);
        const cplx vn(ar + br, ai + bi);
        u[i] = un;  // sources fully read; in-place aliasing is safe
        v[i] = vn;
    }
}

void mix2_acc_scalar(cplx* u, cplx* v, const cplx* x, const cplx* y,
                     std::size_t n, const Mat2& m) {
    const double m00r = m.a00.real(), m00i = m.a00.imag();
    const double m01r = m.a01.real(), m01i = m.a01.imag();
    const double m10r = m.a10.real(), m10i = m.a10.imag();
    const double m11r = m.a11.real(), m11i = m.a11.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        double ar, ai, br, bi;
        cmul(m00r, m00i, xr, xi, ar, ai);
        cmul(m01r, m01i, yr, yi, br, bi);
        u[i] = cplx(u[i].real() + (ar + br), u[i].imag() + (ai + bi));
        cmul(m10r, m10i, xr, xi, ar, ai);
        cmul(m11r, m11i, yr, yi, br, bi);
        v[i] = cplx(v[i].real() + (ar + br), v[i].imag() + (ai + bi));
    }
}

void abs2_sum2_scalar(double* out, const cplx* x, const cplx* y,
                      std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        out[i] = (xr * xr + xi * xi) + (yr * yr + yi * yi);
    }
}

}  // namespace

const KernelSet& scalar_kernels() {
    static const KernelSet set{mix2_scalar, mix2_acc_scalar, abs2_sum2_scalar,
                               "scalar"};
    return set;
}

}  // namespace qwalk::kernels

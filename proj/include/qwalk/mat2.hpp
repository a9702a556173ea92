#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace qwalk {

using cplx = std::complex<double>;

/// Dense 2x2 complex matrix, row-major.
struct Mat2 {
    cplx a00{}, a01{}, a10{}, a11{};

    static Mat2 identity() { return {{1.0, 0.0}, {}, {}, {1.0, 0.0}}; }
    static Mat2 pauli_x() { return {{}, {1.0, 0.0}, {1.0, 0.0}, {}}; }
    static Mat2 pauli_z() { return {{1.0, 0.0}, {}, {}, {-1.0, 0.0}}; }

    Mat2 adjoint() const {
        return {std::conj(a00), std::conj(a10), std::conj(a01), std::conj(a11)};
    }

    /// Entry-wise conjugate (no transpose).
    Mat2 conj() const {
        return {std::conj(a00), std::conj(a01), std::conj(a10), std::conj(a11)};
    }

    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {l.a00 * r.a00 + l.a01 * r.a10, l.a00 * r.a01 + l.a01 * r.a11,
                l.a10 * r.a00 + l.a11 * r.a10, l.a10 * r.a01 + l.a11 * r.a11};
    }

    friend Mat2 operator+(const Mat2& l, const Mat2& r) {
        return {l.a00 + r.a00, l.a01 + r.a01, l.a10 + r.a10, l.a11 + r.a11};
    }
};

/// Largest entry-wise |l - r|.
inline double max_abs_diff(const Mat2& l, const Mat2& r) {
    return std::max({std::abs(l.a00 - r.a00), std::abs(l.a01 - r.a01),
                     std::abs(l.a10 - r.a10), std::abs(l.a11 - r.a11)});
}

/// True when m^dagger m is the identity to within tol per entry.
inline bool is_unitary(const Mat2& m, double tol) {
    return max_abs_diff(m.adjoint() * m, Mat2::identity()) <= tol;
}

}  // namespace qwalk

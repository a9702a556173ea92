#pragma once

#include "qwalk/error.hpp"
#include "qwalk/mat2.hpp"

namespace qwalk {

/// SU(2) coin angles, radians.
struct CoinParams {
    double xi = 0.0;
    double theta = 0.0;
    double zeta = 0.0;

    friend bool operator==(const CoinParams&, const CoinParams&) = default;
};

/// Angles wrapped into [0, 2*pi).
CoinParams normalized(const CoinParams& p);

/// A coin operator validated to be unitary.
class CoinMatrix {
public:
    /// Throws invalid_parameter unless m is unitary to 1e-12.
    explicit CoinMatrix(const Mat2& m);

    const Mat2& mat() const { return m_; }

private:
    Mat2 m_;
};

/// The three-angle coin family
///
///   B = [ e^{i xi} cos(theta)    e^{i zeta} sin(theta) ]
///       [ e^{-i zeta} sin(theta) -e^{-i xi} cos(theta) ]
///
/// Throws invalid_parameter on non-finite angles.
CoinMatrix make_coin(const CoinParams& p);

/// The balanced coin, make_coin({0, pi/4, 0}).
CoinMatrix hadamard_coin();

}  // namespace qwalk

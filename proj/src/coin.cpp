#include "qwalk/coin.hpp"

#include <cmath>
#include <numbers>

namespace qwalk {
namespace {

double wrap_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(a, two_pi);
    if (r < 0.0) r += two_pi;
    return r;
}

cplx unit_phase(double a) { return {std::cos(a), std::sin(a)}; }

}  // namespace

CoinParams normalized(const CoinParams& p) {
    return {wrap_angle(p.xi), wrap_angle(p.theta), wrap_angle(p.zeta)};
}

CoinMatrix::CoinMatrix(const Mat2& m) : m_(m) {
    if (!is_unitary(m_, 1e-12))
        throw invalid_parameter("coin matrix is not unitary");
}

CoinMatrix make_coin(const CoinParams& p) {
    if (!std::isfinite(p.xi) || !std::isfinite(p.theta) || !std::isfinite(p.zeta))
        throw invalid_parameter("coin angles must be finite");
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    return CoinMatrix(Mat2{unit_phase(p.xi) * c, unit_phase(p.zeta) * s,
                           unit_phase(-p.zeta) * s, -unit_phase(-p.xi) * c});
}

CoinMatrix hadamard_coin() {
    return make_coin({0.0, std::numbers::pi / 4.0, 0.0});
}

}  // namespace qwalk

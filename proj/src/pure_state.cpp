#include "qwalk/pure_state.hpp"

#include <cmath>
#include <string>

#include "qwalk/kernels.hpp"

namespace qwalk {
namespace {

// Coin-state norms may carry rounding dust from caller arithmetic; anything
// further off than this is treated as a caller bug, not noise.
constexpr double norm_slack = 1e-6;

void check_norm(double n2, const char* what) {
    if (!std::isfinite(n2) || std::abs(std::sqrt(n2) - 1.0) > norm_slack)
        throw invalid_parameter(std::string(what) +
                                " must be normalized to within 1e-6");
}

}  // namespace

double PositionDistribution::total() const {
    double t = 0.0;
    for (double p : probs) t += p;
    return t;
}

PureState::PureState(int radius, int lo, int hi)
    : radius_(radius),
      lo_(lo),
      hi_(hi),
      a0_(static_cast<std::size_t>(2 * radius + 1)),
      a1_(static_cast<std::size_t>(2 * radius + 1)) {}

PureState PureState::basis(int j0, cplx c0, cplx c1, int radius) {
    if (radius < 0) throw invalid_parameter("radius must be nonnegative");
    if (j0 < -radius || j0 > radius)
        throw capacity_error("start site " + std::to_string(j0) +
                             " outside lattice radius " + std::to_string(radius));
    const double n2 = std::norm(c0) + std::norm(c1);
    check_norm(n2, "coin state");
    const double scale = 1.0 / std::sqrt(n2);
    PureState s(radius, j0, j0);
    s.a0_[s.site_index(j0)] = c0 * scale;
    s.a1_[s.site_index(j0)] = c1 * scale;
    return s;
}

PureState PureState::from_amplitudes(int radius, int site_lo,
                                     std::span<const cplx> a0,
                                     std::span<const cplx> a1) {
    if (radius < 0) throw invalid_parameter("radius must be nonnegative");
    if (a0.size() != a1.size() || a0.empty())
        throw invalid_parameter("amplitude blocks must be nonempty and equal-sized");
    const int site_hi = site_lo + static_cast<int>(a0.size()) - 1;
    if (site_lo < -radius || site_hi > radius)
        throw capacity_error("amplitude block outside lattice radius");
    double n2 = 0.0;
    for (std::size_t i = 0; i < a0.size(); ++i) n2 += std::norm(a0[i]) + std::norm(a1[i]);
    check_norm(n2, "initial state");
    const double scale = 1.0 / std::sqrt(n2);
    PureState s(radius, site_lo, site_hi);
    for (std::size_t i = 0; i < a0.size(); ++i) {
        s.a0_[s.site_index(site_lo) + i] = a0[i] * scale;
        s.a1_[s.site_index(site_lo) + i] = a1[i] * scale;
    }
    return s;
}

cplx PureState::amplitude(int coin, int j) const {
    if (coin != 0 && coin != 1) throw invalid_parameter("coin index must be 0 or 1");
    if (j < -radius_ || j > radius_) return {};
    return coin == 0 ? a0_[site_index(j)] : a1_[site_index(j)];
}

std::span<const cplx> PureState::coin_row(int c) const {
    if (c != 0 && c != 1) throw invalid_parameter("coin index must be 0 or 1");
    return c == 0 ? a0_ : a1_;
}

double PureState::norm_sq() const {
    double n2 = 0.0;
    for (const cplx& a : a0_) n2 += std::norm(a);
    for (const cplx& a : a1_) n2 += std::norm(a);
    return n2;
}

PureState init_pure_walker(int j0, cplx c0, cplx c1, int radius) {
    return PureState::basis(j0, c0, c1, radius);
}

PureState init_symmetric_walker(int j0, int radius) {
    const double r = 1.0 / std::sqrt(2.0);
    return PureState::basis(j0, cplx(r, 0.0), cplx(0.0, r), radius);
}

PureState step_pure(const PureState& s, const CoinMatrix& coin) {
    if (s.lo_ - 1 < -s.radius_ || s.hi_ + 1 > s.radius_)
        throw capacity_error("step would cross lattice radius " +
                             std::to_string(s.radius_) +
                             "; allocate a larger state");
    PureState out(s.radius_, s.lo_ - 1, s.hi_ + 1);
    // Coin mix and shift fused in one pass: the mixed |0> row lands one
    // site left of its source, the |1> row one site right. Distinct
    // buffers, so the offset stores cannot alias the loads.
    const std::size_t base = s.site_index(s.lo_);
    const std::size_t n = static_cast<std::size_t>(s.hi_ - s.lo_ + 1);
    kernels::active_kernels().mix2(out.a0_.data() + base - 1,
                                   out.a1_.data() + base + 1,
                                   s.a0_.data() + base, s.a1_.data() + base, n,
                                   coin.mat());
    return out;
}

PureState evolve_pure(const PureState& s, const CoinMatrix& coin, int steps) {
    if (steps < 0) throw invalid_parameter("steps must be nonnegative");
    PureState cur = s;
    for (int k = 0; k < steps; ++k) cur = step_pure(cur, coin);
    return cur;
}

PositionDistribution position_distribution(const PureState& s) {
    PositionDistribution d;
    d.radius = s.radius_;
    d.probs.resize(s.a0_.size());
    kernels::active_kernels().abs2_sum2(d.probs.data(), s.a0_.data(),
                                        s.a1_.data(), d.probs.size());
    return d;
}

}  // namespace qwalk

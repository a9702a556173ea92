#pragma once

#include <span>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/error.hpp"

namespace qwalk {

/// Probabilities over lattice sites j in [-radius, radius].
struct PositionDistribution {
    int radius = 0;
    std::vector<double> probs;  // size 2*radius+1, index j + radius

    double prob(int j) const {
        return probs[static_cast<std::size_t>(j + radius)];
    }
    /// Fixed-order (ascending j) sum; 1 to within 1e-10 for valid states.
    double total() const;
};

class PureState;
PureState step_pure(const PureState& s, const CoinMatrix& coin);
PositionDistribution position_distribution(const PureState& s);

/// One walker's amplitudes over coin {|0>, |1>} x sites [-R, R].
///
/// Storage is planar: one contiguous array per coin component, so the step
/// kernels run at unit stride. Instances are immutable; evolution returns
/// new states. [support_lo, support_hi] conservatively bounds the nonzero
/// sites; everything outside is exactly zero.
class PureState {
public:
    /// Coin state (c0, c1) placed at site j0. The coin state is
    /// renormalized when its norm is within 1e-6 of 1 and rejected
    /// otherwise; |j0| > radius is a capacity_error.
    static PureState basis(int j0, cplx c0, cplx c1, int radius);

    /// Amplitudes over the site block [site_lo, site_lo + a0.size() - 1],
    /// renormalized under the same 1e-6 rule.
    static PureState from_amplitudes(int radius, int site_lo,
                                     std::span<const cplx> a0,
                                     std::span<const cplx> a1);

    int radius() const { return radius_; }
    int support_lo() const { return lo_; }
    int support_hi() const { return hi_; }

    cplx amplitude(int coin, int j) const;
    std::span<const cplx> coin_row(int c) const;
    double norm_sq() const;

private:
    PureState(int radius, int lo, int hi);

    std::size_t site_index(int j) const {
        return static_cast<std::size_t>(j + radius_);
    }

    int radius_;
    int lo_, hi_;
    std::vector<cplx> a0_, a1_;

    friend PureState step_pure(const PureState&, const CoinMatrix&);
    friend PositionDistribution position_distribution(const PureState&);
};

/// The walker used throughout: coin state (c0, c1) localized at j0.
PureState init_pure_walker(int j0, cplx c0, cplx c1, int radius);

/// init_pure_walker with the balanced coin state (|0> + i|1>)/sqrt(2).
PureState init_symmetric_walker(int j0, int radius);

/// One step: coin on the internal state, then the conditional shift
/// (coin |0> moves to j-1, coin |1> to j+1). Throws capacity_error when
/// the support already touches the boundary.
PureState step_pure(const PureState& s, const CoinMatrix& coin);

/// steps >= 0 applications of step_pure, bit-identical to the loop.
PureState evolve_pure(const PureState& s, const CoinMatrix& coin, int steps);

/// Marginal probs[j] = sum_c |amplitude(c, j)|^2.
PositionDistribution position_distribution(const PureState& s);

}  // namespace qwalk

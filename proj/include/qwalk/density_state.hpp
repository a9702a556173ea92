#pragma once

#include "qwalk/noise.hpp"
#include "qwalk/pure_state.hpp"

namespace qwalk {

class DensityState;
DensityState step_density(const DensityState& rho, const CoinMatrix& coin,
                          const KrausSet& kraus,
                          NoiseOrder order = NoiseOrder::AfterStep);
PositionDistribution position_distribution(const DensityState& rho);

/// Density matrix over the coin x position basis.
///
/// Basis index (c, j) -> c*(2R+1) + (j+R); the matrix is stored dense,
/// row-major, dimension d = 2*(2R+1). Support bounds are conservative site
/// bounds shared by rows and columns.
class DensityState {
public:
    /// |psi><psi|.
    static DensityState from_pure(const PureState& psi);

    int radius() const { return radius_; }
    int dim() const { return 2 * (2 * radius_ + 1); }
    int support_lo() const { return lo_; }
    int support_hi() const { return hi_; }

    cplx entry(int c_row, int j_row, int c_col, int j_col) const;

    /// Real part of the trace. (The imaginary part is zero for any state
    /// this library produces; tests pin that.)
    double trace() const;

    /// tr(rho^2) assuming hermiticity: the sum of |entry|^2.
    double purity() const;

    /// Largest |rho - rho^dagger| entry.
    double hermiticity_defect() const;

private:
    DensityState(int radius, int lo, int hi);

    int site_count() const { return 2 * radius_ + 1; }
    std::size_t row_index(int c, int j) const {
        return static_cast<std::size_t>(c) * site_count() + (j + radius_);
    }

    int radius_;
    int lo_, hi_;
    std::vector<cplx> rho_;  // dim x dim

    friend DensityState step_density(const DensityState&, const CoinMatrix&,
                                     const KrausSet&, NoiseOrder);
    friend PositionDistribution position_distribution(const DensityState&);
};

/// Density operator of a freshly prepared pure walker.
DensityState init_density_walker(const PureState& psi);

/// One noisy step. The unitary part applies the coin and then the
/// conditional shift; the channel acts on the coin subsystem after the
/// unitary (or before, with NoiseOrder::BeforeStep). Throws capacity_error
/// when the support already touches the boundary.
DensityState step_density(const DensityState& rho, const CoinMatrix& coin,
                          const KrausSet& kraus, NoiseOrder order);

/// steps >= 0 noisy steps; equal to the step_density loop. Verifies trace
/// preservation to 1e-10 once at the end and throws qwalk::error on defect.
DensityState evolve_density(const DensityState& rho, const CoinMatrix& coin,
                            const NoiseModel& noise, int steps,
                            NoiseOrder order = NoiseOrder::AfterStep);

/// Diagonal marginal probs[j] = sum_c entry(c, j, c, j). Values in
/// [-1e-10, 0) are clamped to zero; anything lower throws qwalk::error.
PositionDistribution position_distribution(const DensityState& rho);

}  // namespace qwalk

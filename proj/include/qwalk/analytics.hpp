#pragma once

#include <span>

#include "qwalk/ensemble.hpp"

namespace qwalk {

/// Central moments of a position distribution.
struct MomentReport {
    double mean = 0.0;
    double variance = 0.0;
    /// m4/m2^2 - 3; defined as 0 when the variance vanishes.
    double excess_kurtosis = 0.0;
};

MomentReport moments(const PositionDistribution& dist);

/// Moments of a profile after normalizing it to unit mass.
MomentReport moments(const DensityProfile& profile);

/// Least-squares fit of sigma^2 = slope * N^2 through the origin, over
/// fresh simulations of the theta-coin walk (xi = zeta = 0) from the
/// balanced initial state at each step count.
struct ScalingFit {
    double theta = 0.0;
    double slope = 0.0;
    /// Uncentered r^2 in [0, 1].
    double r_squared = 0.0;
};

/// Throws invalid_parameter unless `steps` has at least three entries, all
/// nonnegative, with max(steps) >= 50.
ScalingFit variance_scaling_fit(double theta, std::span<const int> steps);

/// Unbiased +-1 classical random walk after `steps` steps. Same layout as
/// the quantum distributions: radius = steps, odd-parity sites exactly 0.
PositionDistribution crw_distribution(int steps);

/// Quantum vs classical time to spread M atoms across their own block:
/// min_steps_full_overlap against the diffusive M^2.
struct SpeedupReport {
    int quantum_steps = 0;
    long long classical_steps = 0;
    double ratio = 0.0;  // quantum_steps / classical_steps
};

/// Throws invalid_parameter for M < 2 (no spreading problem to compare).
SpeedupReport speedup_report(int atom_count, double theta);

}  // namespace qwalk

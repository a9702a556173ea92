#pragma once

#include "qwalk/density_state.hpp"

namespace qwalk {

/// How the M atoms start out on the M-site block.
enum class InitialProfile {
    MottInsulator,  // one atom pinned per site
    Superfluid,     // each atom spread uniformly over the block, zero phases
};

/// M atoms occupying the centered block [site_lo, site_hi].
struct EnsembleSpec {
    int atom_count = 0;
    InitialProfile profile = InitialProfile::MottInsulator;
    int site_lo = 0;
    int site_hi = 0;
};

/// Closed site interval [lo, hi].
struct SiteInterval {
    int lo = 0;
    int hi = 0;
    int width() const { return hi - lo + 1; }

    friend bool operator==(const SiteInterval&, const SiteInterval&) = default;
};

/// Expected atom number n_j per site, j in [-radius, radius].
struct DensityProfile {
    int radius = 0;
    std::vector<double> n;  // size 2*radius+1, index j + radius

    double at(int j) const { return n[static_cast<std::size_t>(j + radius)]; }
    /// Fixed-order (ascending j) sum; equals atom_count to 1e-8.
    double total() const;
};

/// The M-site block for M atoms: sites -ceil(M/2)+1 .. floor(M/2), so
/// M = 40 occupies -19..20. Throws invalid_parameter for M < 1.
EnsembleSpec init_ensemble(int atom_count, InitialProfile profile);

/// Evolves every atom for `steps` under the coin (and channel, when one is
/// set) and aggregates the per-atom position distributions into n_j. Atoms
/// do not interact, so the result is the plain sum of single-atom profiles;
/// both initial profiles are translation-structured enough that a single
/// evolution suffices internally, which the tests check against the naive
/// per-atom sum.
DensityProfile ensemble_profile(const EnsembleSpec& spec, const CoinParams& coin,
                                const NoiseModel& noise, int steps,
                                NoiseOrder order = NoiseOrder::AfterStep);

/// ceil((M/2) / cos(theta)): steps until the ballistic fronts from every
/// block site have crossed the block center. Throws invalid_parameter when
/// cos(theta) <= 0.
int min_steps_full_overlap(int atom_count, double theta);

/// Smallest interval, trimmed symmetrically from the profile's edges, that
/// keeps each discarded tail at or below epsilon/2 of the total mass.
SiteInterval profile_support(const DensityProfile& profile, double epsilon);

/// Coefficient of variation (population stddev / mean) of n_j over the
/// window. Throws invalid_parameter for an empty window or zero mean.
double uniformity(const DensityProfile& profile, SiteInterval window);

/// A single-walker distribution viewed as a one-atom profile.
DensityProfile to_profile(const PositionDistribution& dist);

}  // namespace qwalk

#include "qwalk/ensemble.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qwalk {
namespace {

// Single walker from site 0, radius exactly `steps`, as pure or density
// evolution depending on the noise model.
PositionDistribution origin_walker_distribution(const CoinMatrix& coin,
                                                const NoiseModel& noise,
                                                int steps, NoiseOrder order) {
    PureState psi = init_symmetric_walker(0, steps);
    if (noise.kind == NoiseKind::None)
        return position_distribution(evolve_pure(psi, coin, steps));
    return position_distribution(
        evolve_density(init_density_walker(psi), coin, noise, steps, order));
}

}  // namespace

double DensityProfile::total() const {
    double t = 0.0;
    for (double v : n) t += v;
    return t;
}

EnsembleSpec init_ensemble(int atom_count, InitialProfile profile) {
    if (atom_count < 1)
        throw invalid_parameter("atom count must be at least 1");
    EnsembleSpec spec;
    spec.atom_count = atom_count;
    spec.profile = profile;
    spec.site_lo = -((atom_count + 1) / 2) + 1;
    spec.site_hi = atom_count / 2;
    return spec;
}

DensityProfile ensemble_profile(const EnsembleSpec& spec, const CoinParams& coin,
                                const NoiseModel& noise, int steps,
                                NoiseOrder order) {
    if (steps < 0) throw invalid_parameter("steps must be nonnegative");
    if (spec.atom_count < 1 || spec.site_hi - spec.site_lo + 1 != spec.atom_count)
        throw invalid_parameter("ensemble spec does not hold one site per atom");
    const CoinMatrix B = make_coin(coin);
    const int extent = std::max(std::abs(spec.site_lo), std::abs(spec.site_hi));
    DensityProfile prof;
    prof.radius = extent + steps;
    prof.n.assign(static_cast<std::size_t>(2 * prof.radius + 1), 0.0);

    if (spec.profile == InitialProfile::MottInsulator) {
        // The evolution commutes with lattice translations, so each pinned
        // atom produces the same distribution around its own start site.
        const PositionDistribution base =
            origin_walker_distribution(B, noise, steps, order);
        for (int s = spec.site_lo; s <= spec.site_hi; ++s)
            for (int j = -steps; j <= steps; ++j)
                prof.n[static_cast<std::size_t>(j + s + prof.radius)] += base.prob(j);
        return prof;
    }

    // Superfluid: every atom is the same delocalized state, so n_j is M
    // times one walker's distribution.
    const std::size_t block = static_cast<std::size_t>(spec.atom_count);
    const double amp = 1.0 / std::sqrt(2.0 * spec.atom_count);
    std::vector<cplx> a0(block, cplx(amp, 0.0));
    std::vector<cplx> a1(block, cplx(0.0, amp));
    const PureState psi =
        PureState::from_amplitudes(prof.radius, spec.site_lo, a0, a1);
    PositionDistribution dist;
    if (noise.kind == NoiseKind::None)
        dist = position_distribution(evolve_pure(psi, B, steps));
    else
        dist = position_distribution(
            evolve_density(init_density_walker(psi), B, noise, steps, order));
    for (std::size_t i = 0; i < prof.n.size(); ++i)
        prof.n[i] = spec.atom_count * dist.probs[i];
    return prof;
}

int min_steps_full_overlap(int atom_count, double theta) {
    if (atom_count < 0) throw invalid_parameter("atom count must be nonnegative");
    const double c = std::cos(theta);
    const double steps = std::ceil((atom_count / 2.0) / c);
    if (!(c > 0.0) || steps > static_cast<double>(std::numeric_limits<int>::max()))
        throw invalid_parameter("cos(theta) must be positive; the walk front "
                                "does not advance otherwise");
    return static_cast<int>(steps);
}

SiteInterval profile_support(const DensityProfile& profile, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw invalid_parameter("epsilon must lie in (0, 1)");
    const double total = profile.total();
    if (!(total > 0.0)) throw invalid_parameter("profile has no mass");
    const double tail = total * (epsilon / 2.0);
    int lo = -profile.radius, hi = profile.radius;
    double cut = 0.0;
    while (lo < hi && cut + profile.at(lo) <= tail) cut += profile.at(lo++);
    cut = 0.0;
    while (hi > lo && cut + profile.at(hi) <= tail) cut += profile.at(hi--);
    return {lo, hi};
}

double uniformity(const DensityProfile& profile, SiteInterval window) {
    if (window.lo > window.hi)
        throw invalid_parameter("uniformity window is empty");
    if (window.lo < -profile.radius || window.hi > profile.radius)
        throw invalid_parameter("uniformity window exceeds profile radius");
    const double count = window.width();
    double mean = 0.0;
    for (int j = window.lo; j <= window.hi; ++j) mean += profile.at(j);
    mean /= count;
    if (!(mean > 0.0))
        throw invalid_parameter("uniformity window holds no mass");
    double var = 0.0;
    for (int j = window.lo; j <= window.hi; ++j) {
        const double d = profile.at(j) - mean;
        var += d * d;
    }
    var /= count;
    return std::sqrt(var) / mean;
}

DensityProfile to_profile(const PositionDistribution& dist) {
    DensityProfile prof;
    prof.radius = dist.radius;
    prof.n = dist.probs;
    return prof;
}

}  // namespace qwalk

#include "qwalk/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace qwalk {
namespace {

MomentReport moments_of(int radius, const std::vector<double>& w) {
    double total = 0.0;
    for (double v : w) total += v;
    if (!(total > 0.0)) throw invalid_parameter("distribution has no mass");

    double mean = 0.0;
    for (int j = -radius; j <= radius; ++j)
        mean += j * w[static_cast<std::size_t>(j + radius)];
    mean /= total;

    double m2 = 0.0, m4 = 0.0;
    for (int j = -radius; j <= radius; ++j) {
        const double d = j - mean;
        const double p = w[static_cast<std::size_t>(j + radius)] / total;
        m2 += d * d * p;
        m4 += d * d * d * d * p;
    }

    MomentReport r;
    r.mean = mean;
    r.variance = m2;
    r.excess_kurtosis = m2 > 0.0 ? m4 / (m2 * m2) - 3.0 : 0.0;
    return r;
}

}  // namespace

MomentReport moments(const PositionDistribution& dist) {
    return moments_of(dist.radius, dist.probs);
}

MomentReport moments(const DensityProfile& profile) {
    return moments_of(profile.radius, profile.n);
}

ScalingFit variance_scaling_fit(double theta, std::span<const int> steps) {
    if (steps.size() < 3)
        throw invalid_parameter("variance fit needs at least three step counts");
    for (int n : steps)
        if (n < 0) throw invalid_parameter("step counts must be nonnegative");
    if (*std::max_element(steps.begin(), steps.end()) < 50)
        throw invalid_parameter("variance fit needs a step count of 50 or more");

    const CoinMatrix coin = make_coin({0.0, theta, 0.0});
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    std::vector<std::pair<double, double>> pts;
    pts.reserve(steps.size());
    for (int n : steps) {
        const PureState end =
            evolve_pure(init_symmetric_walker(0, n), coin, n);
        const double x = static_cast<double>(n) * n;
        const double y = moments(position_distribution(end)).variance;
        pts.emplace_back(x, y);
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }

    ScalingFit fit;
    fit.theta = theta;
    fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    double ss_res = 0.0;
    for (const auto& [x, y] : pts) {
        const double r = y - fit.slope * x;
        ss_res += r * r;
    }
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

PositionDistribution crw_distribution(int steps) {
    if (steps < 0) throw invalid_parameter("steps must be nonnegative");
    PositionDistribution d;
    d.radius = steps;
    d.probs.assign(static_cast<std::size_t>(2 * steps + 1), 0.0);
    if (steps == 0) {
        d.probs[0] = 1.0;
        return d;
    }
    // binomial(steps, k) / 2^steps at j = 2k - steps. Seeded at the center
    // and grown multiplicatively outward: the center value stays
    // representable for any steps, while far tails underflow to the zeros
    // they round to anyway.
    const int k0 = steps / 2;
    const double logc = std::lgamma(steps + 1.0) - std::lgamma(k0 + 1.0) -
                        std::lgamma(steps - k0 + 1.0) -
                        steps * std::numbers::ln2;
    const double center = std::exp(logc);
    d.probs[static_cast<std::size_t>(2 * k0)] = center;
    double p = center;
    for (int k = k0; k < steps; ++k) {
        p = p * (steps - k) / (k + 1);
        d.probs[static_cast<std::size_t>(2 * (k + 1))] = p;
    }
    p = center;
    for (int k = k0; k > 0; --k) {
        p = p * k / (steps - k + 1.0);
        d.probs[static_cast<std::size_t>(2 * (k - 1))] = p;
    }
    return d;
}

SpeedupReport speedup_report(int atom_count, double theta) {
    if (atom_count < 2)
        throw invalid_parameter("speedup comparison needs at least two atoms");
    SpeedupReport r;
    r.quantum_steps = min_steps_full_overlap(atom_count, theta);
    r.classical_steps =
        static_cast<long long>(atom_count) * static_cast<long long>(atom_count);
    r.ratio = static_cast<double>(r.quantum_steps) /
              static_cast<double>(r.classical_steps);
    return r;
}

}  // namespace qwalk

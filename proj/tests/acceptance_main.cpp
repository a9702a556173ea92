// Acceptance gate for the walk simulator. Each numbered check prints one
// [PASS]/[FAIL] line with the measured values; the process exits with the
// number of failed checks. Checks 1-10 exercise the library directly;
// check 11 needs the CLI binary's path as argv[1].

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qwalk/analytics.hpp"
#include "qwalk/density_state.hpp"
#include "qwalk/emit.hpp"

using namespace qwalk;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;
int failures = 0;

void report(int num, bool ok, const std::string& what) {
    std::printf("[%s] %2d %s\n", ok ? "PASS" : "FAIL", num, what.c_str());
    if (!ok) ++failures;
}

std::string fmt(double v, const char* spec = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

PositionDistribution timed_walk(const CoinParams& cp, int steps, int radius,
                                double& out_ms) {
    const auto t0 = std::chrono::steady_clock::now();
    const PureState end =
        evolve_pure(init_symmetric_walker(0, radius), make_coin(cp), steps);
    out_ms = ms_since(t0);
    return position_distribution(end);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- 1: variance scaling --------------------------------------------------

void check_variance_scaling() {
    const std::vector<int> grid{25, 50, 75, 100};
    bool ok = true;
    double worst_dev = 0.0, worst_ms = 0.0;
    std::string detail;
    for (double theta : {pi / 12, pi / 4, 5 * pi / 12}) {
        double walk_ms = 0.0;
        timed_walk({0.0, theta, 0.0}, 100, 100, walk_ms);
        worst_ms = std::max(worst_ms, walk_ms);
        const ScalingFit fit = variance_scaling_fit(theta, grid);
        const double target = 1.0 - std::sin(theta);
        const double dev = std::abs(fit.slope - target) / target;
        worst_dev = std::max(worst_dev, dev);
        ok = ok && dev <= 0.15 && walk_ms < 1000.0;
        detail += " slope(" + fmt(theta * 180 / pi, "%.0f") + "deg)=" +
                  fmt(fit.slope) + "/" + fmt(target);
    }
    report(1, ok,
           "variance scaling within 15% of 1-sin(theta):" + detail +
               ", worst dev " + fmt(100 * worst_dev, "%.2f") + "%, slowest walk " +
               fmt(worst_ms, "%.0f") + " ms");
}

// ---- 2: support interval ---------------------------------------------------

void check_support() {
    const int n = 100;
    double walk_ms = 0.0;
    const PositionDistribution d =
        timed_walk({0.0, pi / 4, 0.0}, n, n + 10, walk_ms);
    const int cone = static_cast<int>(std::ceil(n * std::cos(pi / 4))) + 5;
    double inside = 0.0;
    bool zeros_ok = true;
    for (int j = -d.radius; j <= d.radius; ++j) {
        if (std::abs(j) <= cone) inside += d.prob(j);
        if (std::abs(j) > n && d.prob(j) != 0.0) zeros_ok = false;
    }
    const bool ok = inside >= 0.99 && zeros_ok && walk_ms < 1000.0;
    report(2, ok,
           "support: " + fmt(100 * inside, "%.4f") + "% of mass inside +-" +
               std::to_string(cone) + ", exact zeros outside +-" +
               std::to_string(n) + (zeros_ok ? " (yes)" : " (VIOLATED)") + ", " +
               fmt(walk_ms, "%.0f") + " ms");
}

// ---- 3: hand oracles -------------------------------------------------------

void check_hand_oracles() {
    const CoinMatrix h = hadamard_coin();
    const PositionDistribution d1 =
        position_distribution(evolve_pure(init_symmetric_walker(0, 2), h, 1));
    const PositionDistribution d2 =
        position_distribution(evolve_pure(init_symmetric_walker(0, 2), h, 2));
    double err = 0.0;
    err = std::max(err, std::abs(d1.prob(-1) - 0.5));
    err = std::max(err, std::abs(d1.prob(1) - 0.5));
    err = std::max(err, std::abs(d1.prob(0)));
    err = std::max(err, std::abs(d2.prob(-2) - 0.25));
    err = std::max(err, std::abs(d2.prob(0) - 0.5));
    err = std::max(err, std::abs(d2.prob(2) - 0.25));
    err = std::max(err, std::abs(d2.prob(-1)));
    err = std::max(err, std::abs(d2.prob(1)));
    report(3, err <= 1e-12,
           "hand oracles N=1 {1/2,1/2}, N=2 {1/4,1/2,1/4}: max dev " + fmt(err));
}

// ---- 4: noiseless equivalence ----------------------------------------------

void check_noiseless_equivalence() {
    const int n = 50, radius = 60;
    const CoinMatrix h = hadamard_coin();
    const PositionDistribution pure = position_distribution(
        evolve_pure(init_symmetric_walker(0, radius), h, n));
    const auto t0 = std::chrono::steady_clock::now();
    const PositionDistribution dens = position_distribution(
        evolve_density(init_density_walker(init_symmetric_walker(0, radius)), h,
                       {NoiseKind::None, 0.0}, n));
    const double density_ms = ms_since(t0);
    double err = 0.0;
    for (std::size_t i = 0; i < pure.probs.size(); ++i)
        err = std::max(err, std::abs(pure.probs[i] - dens.probs[i]));
    const bool ok = err <= 1e-10 && density_ms < 30000.0;
    report(4, ok,
           "noiseless density equals pure marginal at N=50, R=60: max dev " +
               fmt(err) + ", density run " + fmt(density_ms, "%.0f") + " ms");
}

// ---- 5: completeness and trace ----------------------------------------------

void check_kraus_and_trace() {
    double completeness = 0.0;
    for (NoiseKind kind : {NoiseKind::BitFlip, NoiseKind::PhaseFlip,
                           NoiseKind::AmplitudeDamping})
        for (int i = 0; i <= 10; ++i)
            completeness = std::max(
                completeness,
                max_abs_diff(completeness_sum(kraus_for({kind, i / 10.0})),
                             Mat2::identity()));

    double trace_dev = 0.0;
    const int n = 40;
    for (NoiseKind kind : {NoiseKind::BitFlip, NoiseKind::PhaseFlip,
                           NoiseKind::AmplitudeDamping})
        for (double p : {0.1, 0.5}) {
            const DensityState end =
                evolve_density(init_density_walker(init_symmetric_walker(0, n)),
                               hadamard_coin(), {kind, p}, n);
            trace_dev = std::max(trace_dev, std::abs(end.trace() - 1.0));
        }
    const bool ok = completeness <= 1e-12 && trace_dev <= 1e-10;
    report(5, ok,
           "Kraus completeness (max dev " + fmt(completeness) +
               ") and 40-step trace preservation (max dev " + fmt(trace_dev) +
               ")");
}

// ---- 6: noise phenomenology --------------------------------------------------

MomentReport noisy_moments(const NoiseModel& noise) {
    const int n = 40;
    return moments(position_distribution(
        evolve_density(init_density_walker(init_symmetric_walker(0, n)),
                       hadamard_coin(), noise, n)));
}

void check_phenomenology() {
    const MomentReport none = noisy_moments({NoiseKind::None, 0.0});
    const MomentReport p02 = noisy_moments({NoiseKind::PhaseFlip, 0.02});
    const MomentReport p10 = noisy_moments({NoiseKind::PhaseFlip, 0.1});
    const MomentReport p50 = noisy_moments({NoiseKind::PhaseFlip, 0.5});
    const MomentReport ad = noisy_moments({NoiseKind::AmplitudeDamping, 0.2});
    const bool decreasing = none.variance > p02.variance &&
                            p02.variance > p10.variance &&
                            p10.variance > p50.variance;
    const bool gaussianizing = p10.excess_kurtosis > p02.excess_kurtosis;
    const bool damping_biases = std::abs(ad.mean) > 0.5;
    const bool noiseless_centered = std::abs(none.mean) < 1e-8;
    const bool ok =
        decreasing && gaussianizing && damping_biases && noiseless_centered;
    report(6, ok,
           "phenomenology at N=M=40: var " + fmt(none.variance, "%.1f") + ">" +
               fmt(p02.variance, "%.1f") + ">" + fmt(p10.variance, "%.1f") +
               ">" + fmt(p50.variance, "%.1f") + ", kurtosis " +
               fmt(p10.excess_kurtosis, "%.3f") + ">" +
               fmt(p02.excess_kurtosis, "%.3f") + ", damping mean " +
               fmt(ad.mean, "%.2f") + ", noiseless mean " + fmt(none.mean));
}

// ---- 7: conservation and fast path -------------------------------------------

DensityProfile naive_mi_sf(const EnsembleSpec& spec, int steps) {
    const CoinMatrix coin = make_coin({0.0, pi / 4, 0.0});
    const int radius =
        std::max(std::abs(spec.site_lo), std::abs(spec.site_hi)) + steps;
    DensityProfile prof;
    prof.radius = radius;
    prof.n.assign(static_cast<std::size_t>(2 * radius + 1), 0.0);
    const auto accumulate = [&](const PureState& start) {
        const PositionDistribution d =
            position_distribution(evolve_pure(start, coin, steps));
        for (std::size_t i = 0; i < prof.n.size(); ++i) prof.n[i] += d.probs[i];
    };
    if (spec.profile == InitialProfile::MottInsulator) {
        for (int s = spec.site_lo; s <= spec.site_hi; ++s)
            accumulate(init_symmetric_walker(s, radius));
    } else {
        const double amp = 1.0 / std::sqrt(2.0 * spec.atom_count);
        const std::vector<cplx> a0(spec.atom_count, cplx(amp, 0.0));
        const std::vector<cplx> a1(spec.atom_count, cplx(0.0, amp));
        const PureState atom =
            PureState::from_amplitudes(radius, spec.site_lo, a0, a1);
        for (int k = 0; k < spec.atom_count; ++k) accumulate(atom);
    }
    return prof;
}

void check_conservation_and_fast_path() {
    const CoinParams balanced{0.0, pi / 4, 0.0};
    double conservation = 0.0;
    for (InitialProfile profile :
         {InitialProfile::MottInsulator, InitialProfile::Superfluid})
        for (int n : {0, 10, 25, 40}) {
            const DensityProfile prof =
                ensemble_profile(init_ensemble(40, profile), balanced,
                                 {NoiseKind::None, 0.0}, n);
            conservation = std::max(conservation, std::abs(prof.total() - 40.0));
        }

    double fast_path = 0.0;
    const auto compare = [&](const EnsembleSpec& spec, int steps) {
        const DensityProfile fast = ensemble_profile(
            spec, balanced, {NoiseKind::None, 0.0}, steps);
        const DensityProfile slow = naive_mi_sf(spec, steps);
        for (int j = -fast.radius; j <= fast.radius; ++j)
            fast_path = std::max(fast_path, std::abs(fast.at(j) - slow.at(j)));
    };
    for (InitialProfile profile :
         {InitialProfile::MottInsulator, InitialProfile::Superfluid})
        for (int m = 1; m <= 5; ++m)
            for (int n : {0, 3, 10}) compare(init_ensemble(m, profile), n);
    compare(init_ensemble(40, InitialProfile::MottInsulator), 25);

    const bool ok = conservation <= 1e-8 && fast_path <= 1e-12;
    report(7, ok,
           "ensemble conservation (max dev " + fmt(conservation) +
               ") and fast path vs per-atom (max dev " + fmt(fast_path) + ")");
}

// ---- 8: SF flattening and MI support growth -----------------------------------

void check_fig3_behaviour() {
    const CoinParams balanced{0.0, pi / 4, 0.0};
    const double cv = uniformity(
        ensemble_profile(init_ensemble(40, InitialProfile::Superfluid), balanced,
                         {NoiseKind::None, 0.0}, 25),
        {-20, 20});

    bool monotone = true;
    int prev = 0;
    std::string widths;
    for (int n : {0, 10, 25, 40}) {
        const int width =
            profile_support(
                ensemble_profile(init_ensemble(40, InitialProfile::MottInsulator),
                                 balanced, {NoiseKind::None, 0.0}, n),
                0.01)
                .width();
        monotone = monotone && width >= prev;
        prev = width;
        widths += (widths.empty() ? "" : "/") + std::to_string(width);
    }
    const bool ok = cv <= 0.25 && monotone;
    report(8, ok,
           "superfluid CV over +-20 at N=25 is " + fmt(cv, "%.4f") +
               " (<= 0.25); Mott support widths " + widths + " nondecreasing");
}

// ---- 9: bias directions --------------------------------------------------------

void check_bias() {
    const auto dist = [](const CoinParams& cp) {
        return position_distribution(
            evolve_pure(init_symmetric_walker(0, 100), make_coin(cp), 100));
    };
    const auto raw2 = [](const PositionDistribution& d) {
        double m = 0.0;
        for (int j = -d.radius; j <= d.radius; ++j)
            m += static_cast<double>(j) * j * d.prob(j);
        return m;
    };
    const PositionDistribution left = dist({pi / 6, pi / 6, 0.0});
    const PositionDistribution right = dist({0.0, pi / 6, pi / 6});
    const double mean_left = moments(left).mean;
    const double mean_right = moments(right).mean;

    const PositionDistribution base = dist({0.0, pi / 4, 0.0});
    const PositionDistribution biased = dist({pi / 6, pi / 4, 0.0});
    const double raw_shift =
        std::abs(raw2(biased) - raw2(base)) / raw2(base);
    const double central_shift =
        (moments(biased).variance - moments(base).variance) /
        moments(base).variance;

    const bool ok = mean_left < 0.0 && mean_right > 0.0 && raw_shift <= 0.05;
    report(9, ok,
           "bias: mean(xi=30deg)=" + fmt(mean_left, "%.2f") + " < 0 < mean(zeta=30deg)=" +
               fmt(mean_right, "%.2f") + "; xi leaves the origin second moment "
               "within 5% (shift " +
               fmt(100 * raw_shift, "%.2e") + "%; central variance shifts " +
               fmt(100 * central_shift, "%.1f") + "% via the mean)");
}

// ---- 10: speedup and classical baseline -----------------------------------------

void check_speedup_and_crw() {
    const SpeedupReport sp = speedup_report(40, pi / 4);
    double var_dev = 0.0;
    for (int n = 1; n <= 200; ++n)
        var_dev = std::max(var_dev,
                           std::abs(moments(crw_distribution(n)).variance - n));
    const bool ok = sp.quantum_steps == 29 && sp.classical_steps == 1600 &&
                    var_dev <= 1e-9;
    report(10, ok,
           "speedup_report(40, pi/4) = (" + std::to_string(sp.quantum_steps) +
               ", " + std::to_string(sp.classical_steps) +
               "), classical variance dev <= " + fmt(var_dev));
}

// ---- 11: CLI determinism ---------------------------------------------------------

bool run_cli(const std::string& cli, const std::string& env,
             const std::string& args) {
    const std::string cmd =
        env + (env.empty() ? "" : " ") + "\"" + cli + "\" " + args + " > /dev/null";
    return std::system(cmd.c_str()) == 0;
}

bool dirs_identical(const fs::path& a, const fs::path& b, std::string& note) {
    std::vector<fs::path> names;
    for (const auto& entry : fs::directory_iterator(a))
        names.push_back(entry.path().filename());
    if (names.empty()) {
        note = "no files produced";
        return false;
    }
    std::sort(names.begin(), names.end());
    for (const fs::path& name : names) {
        if (!fs::exists(b / name)) {
            note = "missing " + name.string();
            return false;
        }
        if (slurp(a / name) != slurp(b / name)) {
            note = name.string() + " differs";
            return false;
        }
    }
    note = std::to_string(names.size()) + " files identical";
    return true;
}

void check_cli_determinism(const std::string& cli) {
    if (cli.empty()) {
        report(11, false, "determinism: no CLI path supplied to the gate");
        return;
    }
    const fs::path base =
        fs::temp_directory_path() /
        ("qwalk-acceptance-" + std::to_string(::getpid()));
    std::error_code ec;
    fs::remove_all(base, ec);
    bool ok = true;
    std::string detail;
    const auto pair = [&](const std::string& preset, const std::string& env_a,
                          const std::string& env_b, const std::string& tag) {
        const fs::path da = base / (preset + "-" + tag + "-a");
        const fs::path db = base / (preset + "-" + tag + "-b");
        bool ran = run_cli(cli, env_a, "preset " + preset + " --out " + da.string()) &&
                   run_cli(cli, env_b, "preset " + preset + " --out " + db.string());
        std::string note = "cli invocation failed";
        const bool same = ran && dirs_identical(da, db, note);
        ok = ok && same;
        detail += (detail.empty() ? "" : "; ") + preset + " " + tag + ": " + note;
    };
    pair("fig1", "", "", "rerun");
    pair("fig4", "", "", "rerun");
    pair("fig1", "", "QWALK_SIMD=scalar", "simd-vs-scalar");
    fs::remove_all(base, ec);
    report(11, ok, "determinism: " + detail);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    check_variance_scaling();
    check_support();
    check_hand_oracles();
    check_noiseless_equivalence();
    check_kraus_and_trace();
    check_phenomenology();
    check_conservation_and_fast_path();
    check_fig3_behaviour();
    check_bias();
    check_speedup_and_crw();
    check_cli_determinism(cli);
    std::printf("%d/11 criteria passed\n", 11 - failures);
    return failures;
}

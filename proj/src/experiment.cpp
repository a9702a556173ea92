#include "qwalk/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace qwalk {
namespace {

bool wants(const ExperimentConfig& cfg, OutputKind k) {
    return std::find(cfg.outputs.begin(), cfg.outputs.end(), k) != cfg.outputs.end();
}

constexpr double pi = std::numbers::pi;

ExperimentConfig single_run(std::string label, CoinParams coin, int steps,
                            NoiseModel noise = {}) {
    ExperimentConfig cfg;
    cfg.label = std::move(label);
    cfg.coin = coin;
    cfg.steps = steps;
    cfg.noise = noise;
    cfg.outputs = {OutputKind::Distribution, OutputKind::Moments,
                   OutputKind::Support};
    resolve_defaults(cfg);
    return cfg;
}

ExperimentConfig ensemble_run(std::string label, InitialProfile profile,
                              int atoms, CoinParams coin, int steps,
                              NoiseModel noise = {}) {
    ExperimentConfig cfg;
    cfg.label = std::move(label);
    cfg.coin = coin;
    cfg.steps = steps;
    cfg.walker = EnsembleWalker{atoms, profile};
    cfg.noise = noise;
    resolve_defaults(cfg);
    return cfg;
}

std::vector<Preset> build_presets() {
    std::vector<Preset> ps;
    const CoinParams balanced{0.0, pi / 4.0, 0.0};

    {
        Preset p{"fig1",
                 "single walker after 100 steps, three coin angles",
                 {}};
        p.runs.push_back(single_run("theta15", {0.0, pi / 12.0, 0.0}, 100));
        p.runs.push_back(single_run("theta45", balanced, 100));
        p.runs.push_back(single_run("theta75", {0.0, 5.0 * pi / 12.0, 0.0}, 100));
        ps.push_back(std::move(p));
    }
    {
        Preset p{"fig2",
                 "biased walks after 100 steps: xi or zeta breaks the "
                 "left-right symmetry",
                 {}};
        p.runs.push_back(single_run("xi30-theta30", {pi / 6.0, pi / 6.0, 0.0}, 100));
        p.runs.push_back(single_run("theta30-zeta30", {0.0, pi / 6.0, pi / 6.0}, 100));
        p.runs.push_back(single_run("xi75-theta60", {5.0 * pi / 12.0, pi / 3.0, 0.0}, 100));
        p.runs.push_back(single_run("theta60-zeta75", {0.0, pi / 3.0, 5.0 * pi / 12.0}, 100));
        ps.push_back(std::move(p));
    }
    for (auto [name, profile] :
         {std::pair{"fig3-mi", InitialProfile::MottInsulator},
          std::pair{"fig3-sf", InitialProfile::Superfluid}}) {
        Preset p{name,
                 std::string("40-atom ") +
                     (profile == InitialProfile::MottInsulator
                          ? "Mott-insulator"
                          : "superfluid") +
                     " density profile vs step count",
                 {}};
        for (int n : {0, 10, 25, 40})
            p.runs.push_back(ensemble_run("n" + std::to_string(n), profile, 40,
                                          balanced, n));
        ps.push_back(std::move(p));
    }
    for (auto [name, profile] : {std::pair{"fig4", InitialProfile::MottInsulator},
                                 std::pair{"fig5", InitialProfile::Superfluid}}) {
        Preset p{name,
                 std::string("noise on the 40-atom ") +
                     (profile == InitialProfile::MottInsulator
                          ? "Mott-insulator"
                          : "superfluid") +
                     " profile, 40 steps",
                 {}};
        p.runs.push_back(ensemble_run("noiseless", profile, 40, balanced, 40));
        p.runs.push_back(ensemble_run("phase-flip-0.02", profile, 40, balanced,
                                      40, {NoiseKind::PhaseFlip, 0.02}));
        p.runs.push_back(ensemble_run("phase-flip-0.1", profile, 40, balanced,
                                      40, {NoiseKind::PhaseFlip, 0.1}));
        p.runs.push_back(ensemble_run("amp-damp-0.2", profile, 40, balanced, 40,
                                      {NoiseKind::AmplitudeDamping, 0.2}));
        ps.push_back(std::move(p));
    }
    for (auto [name, profile] :
         {std::pair{"fig-multi1", InitialProfile::MottInsulator},
          std::pair{"fig-multi2", InitialProfile::Superfluid}}) {
        Preset p{name,
                 std::string("coin-angle sweep of the 40-atom ") +
                     (profile == InitialProfile::MottInsulator
                          ? "Mott-insulator"
                          : "superfluid") +
                     " profile, 40 steps",
                 {}};
        p.runs.push_back(ensemble_run("theta30", profile, 40, {0.0, pi / 6.0, 0.0}, 40));
        p.runs.push_back(ensemble_run("theta45", profile, 40, balanced, 40));
        p.runs.push_back(ensemble_run("theta60", profile, 40, {0.0, pi / 3.0, 0.0}, 40));
        ps.push_back(std::move(p));
    }
    return ps;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config) {
    ExperimentConfig cfg = config;
    resolve_defaults(cfg);
    validate(cfg);

    RunResult res;
    res.label = cfg.label;
    res.config = cfg;

    if (const auto* single = std::get_if<SingleWalker>(&cfg.walker)) {
        const CoinMatrix coin = make_coin(cfg.coin);
        const int radius = std::abs(single->j0) + cfg.steps;
        const PureState start = init_symmetric_walker(single->j0, radius);
        PositionDistribution dist;
        if (cfg.noise.kind == NoiseKind::None)
            dist = position_distribution(evolve_pure(start, coin, cfg.steps));
        else
            dist = position_distribution(evolve_density(
                init_density_walker(start), coin, cfg.noise, cfg.steps,
                cfg.noise_order));
        if (wants(cfg, OutputKind::Moments)) res.moments = moments(dist);
        if (wants(cfg, OutputKind::Support))
            res.support = profile_support(to_profile(dist), cfg.support_epsilon);
        if (wants(cfg, OutputKind::ScalingFit))
            res.scaling_fit =
                variance_scaling_fit(cfg.coin.theta, cfg.scaling_steps);
        if (wants(cfg, OutputKind::Distribution))
            res.distribution = std::move(dist);
        return res;
    }

    const auto& ens = std::get<EnsembleWalker>(cfg.walker);
    const EnsembleSpec spec = init_ensemble(ens.atom_count, ens.profile);
    DensityProfile prof = ensemble_profile(spec, cfg.coin, cfg.noise, cfg.steps,
                                           cfg.noise_order);
    if (wants(cfg, OutputKind::Moments)) res.moments = moments(prof);
    if (wants(cfg, OutputKind::Support))
        res.support = profile_support(prof, cfg.support_epsilon);
    if (wants(cfg, OutputKind::Uniformity))
        res.uniformity_cv = uniformity(prof, *cfg.uniformity_window);
    if (wants(cfg, OutputKind::Profile)) res.profile = std::move(prof);
    return res;
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> ps = build_presets();
    return ps;
}

const Preset* find_preset(std::string_view name) {
    for (const Preset& p : presets())
        if (p.name == name) return &p;
    return nullptr;
}

unsigned default_thread_cap() {
    if (const char* env = std::getenv("QWALK_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw >= 1 ? hw : 1;
}

std::vector<RunResult> run_many(const std::vector<ExperimentConfig>& runs,
                                unsigned threads) {
    std::vector<RunResult> out(runs.size());
    if (threads == 0) threads = default_thread_cap();
    threads = std::min<unsigned>(threads, static_cast<unsigned>(runs.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < runs.size(); ++i)
            out[i] = run_experiment(runs[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= runs.size()) return;
                try {
                    out[i] = run_experiment(runs[i]);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

nlohmann::json result_to_json(const RunResult& result) {
    nlohmann::json root;
    root["label"] = result.label;
    root["config"] = config_echo(result.config);
    if (result.distribution)
        root["distribution"] = {{"radius", result.distribution->radius},
                                {"probs", result.distribution->probs}};
    if (result.profile)
        root["profile"] = {{"radius", result.profile->radius},
                           {"n", result.profile->n}};
    if (result.moments)
        root["moments"] = {{"mean", result.moments->mean},
                           {"variance", result.moments->variance},
                           {"excess_kurtosis", result.moments->excess_kurtosis}};
    if (result.scaling_fit)
        root["scaling_fit"] = {{"theta", result.scaling_fit->theta},
                               {"slope", result.scaling_fit->slope},
                               {"r_squared", result.scaling_fit->r_squared}};
    if (result.support)
        root["support"] = {{"lo", result.support->lo},
                           {"hi", result.support->hi}};
    if (result.uniformity_cv) root["uniformity_cv"] = *result.uniformity_cv;
    return root;
}

}  // namespace qwalk

#pragma once

#include "qwalk/config.hpp"

namespace qwalk {

/// Everything one run produced. Optional members mirror the requested
/// outputs; absent ones were not computed.
struct RunResult {
    std::string label;
    ExperimentConfig config;  // resolved form
    std::optional<PositionDistribution> distribution;
    std::optional<DensityProfile> profile;
    std::optional<MomentReport> moments;
    std::optional<ScalingFit> scaling_fit;
    std::optional<SiteInterval> support;
    std::optional<double> uniformity_cv;
};

/// Executes one config (resolving and validating it first). Deterministic:
/// equal configs produce equal results, bit for bit.
RunResult run_experiment(const ExperimentConfig& config);

/// A canned group of runs emitted side by side.
struct Preset {
    std::string name;
    std::string title;
    std::vector<ExperimentConfig> runs;
};

/// The built-in experiment groups: fig1, fig2, fig3-mi, fig3-sf, fig4,
/// fig5, fig-multi1, fig-multi2.
const std::vector<Preset>& presets();

/// Preset by name, or nullptr.
const Preset* find_preset(std::string_view name);

/// Runs independent configs, at most `threads` at a time (0 picks
/// default_thread_cap()). Results keep the input order; the first worker
/// exception is rethrown after all workers finish.
std::vector<RunResult> run_many(const std::vector<ExperimentConfig>& runs,
                                unsigned threads = 0);

/// QWALK_THREADS when set to a positive integer, otherwise
/// hardware_concurrency (at least 1).
unsigned default_thread_cap();

/// The full record of a run as JSON (config echo plus outputs).
nlohmann::json result_to_json(const RunResult& result);

}  // namespace qwalk

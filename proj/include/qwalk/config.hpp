#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qwalk/analytics.hpp"

namespace qwalk {

enum class OutputKind {
    Distribution,  // single-walker position probabilities
    Profile,       // ensemble n_j
    Moments,
    ScalingFit,    // single-walker only
    Support,
    Uniformity,    // ensemble only
};

struct SingleWalker {
    int j0 = 0;

    friend bool operator==(const SingleWalker&, const SingleWalker&) = default;
};

struct EnsembleWalker {
    int atom_count = 1;
    InitialProfile profile = InitialProfile::MottInsulator;

    friend bool operator==(const EnsembleWalker&, const EnsembleWalker&) = default;
};

struct EmitSpec {
    std::optional<std::string> csv_path;
    std::optional<std::string> json_path;
    std::optional<std::string> plot_path;  // gnuplot; requires csv_path
    bool include_zero_rows = false;

    friend bool operator==(const EmitSpec&, const EmitSpec&) = default;
};

/// One fully described run. parse_config resolves all defaults, so a parsed
/// config is self-contained; hand-built configs should go through
/// resolve_defaults + validate before use.
struct ExperimentConfig {
    std::string label;
    CoinParams coin{0.0, std::numbers::pi / 4.0, 0.0};
    int steps = 0;
    std::variant<SingleWalker, EnsembleWalker> walker = SingleWalker{};
    NoiseModel noise{};
    NoiseOrder noise_order = NoiseOrder::AfterStep;
    std::vector<OutputKind> outputs;  // empty only before resolve_defaults
    std::vector<int> scaling_steps{25, 50, 75, 100};
    double support_epsilon = 0.01;
    std::optional<SiteInterval> uniformity_window;
    EmitSpec emit;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Fills empty outputs with the mode's defaults (single: distribution,
/// moments, support; ensemble: profile, moments, support, uniformity) and
/// gives ensembles the central +-M/2 uniformity window when none is set.
void resolve_defaults(ExperimentConfig& cfg);

/// Cross-field validation; throws parse_error naming the offending field.
void validate(const ExperimentConfig& cfg);

/// Parses, resolves and validates a JSON config document. Syntax errors
/// report the line; schema errors name the field.
ExperimentConfig parse_config(const std::string& text);

/// The resolved config as JSON. parse_config(config_echo(c).dump()) == c
/// for any resolved config c.
nlohmann::json config_echo(const ExperimentConfig& cfg);

const char* to_string(OutputKind k);
const char* to_string(InitialProfile p);
const char* to_string(NoiseOrder o);

}  // namespace qwalk

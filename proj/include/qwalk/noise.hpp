#pragma once

#include <vector>

#include "qwalk/error.hpp"
#include "qwalk/mat2.hpp"

namespace qwalk {

enum class NoiseKind { None, BitFlip, PhaseFlip, AmplitudeDamping };

/// A per-step channel on the coin subsystem. p is the per-step flip or
/// damping probability: p = 0 is noiseless; the flip channels decohere
/// fastest at p = 0.5; amplitude damping empties |1> completely at p = 1.
struct NoiseModel {
    NoiseKind kind = NoiseKind::None;
    double p = 0.0;

    friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

/// Whether the channel acts after the unitary step (default) or before it.
enum class NoiseOrder { AfterStep, BeforeStep };

/// Kraus operators on coin space with sum_k K_k^dagger K_k = I.
struct KrausSet {
    std::vector<Mat2> ops;
};

/// Kraus decomposition of a model:
///   BitFlip            { sqrt(1-p) I, sqrt(p) X }
///   PhaseFlip          { sqrt(1-p) I, sqrt(p) Z }
///   AmplitudeDamping   { [[1,0],[0,sqrt(1-p)]], [[0,sqrt(p)],[0,0]] }
/// Operators that are exactly zero are dropped, so p = 0 yields {I} and the
/// flip channels at p = 1 yield the bare Pauli. Throws invalid_parameter
/// when p is outside [0, 1].
KrausSet kraus_for(const NoiseModel& model);

/// sum_k K_k^dagger K_k, for completeness checks.
Mat2 completeness_sum(const KrausSet& set);

const char* to_string(NoiseKind k);

}  // namespace qwalk

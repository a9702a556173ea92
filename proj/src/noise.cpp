#include "qwalk/noise.hpp"

#include <cmath>

namespace qwalk {

KrausSet kraus_for(const NoiseModel& model) {
    if (!(model.p >= 0.0 && model.p <= 1.0))
        throw invalid_parameter("noise probability p must lie in [0, 1]");
    const double p = model.p;
    KrausSet set;
    switch (model.kind) {
        case NoiseKind::None:
            set.ops.push_back(Mat2::identity());
            break;
        case NoiseKind::BitFlip: {
            const double a = std::sqrt(1.0 - p), b = std::sqrt(p);
            if (a != 0.0) set.ops.push_back({{a, 0.0}, {}, {}, {a, 0.0}});
            if (b != 0.0) set.ops.push_back({{}, {b, 0.0}, {b, 0.0}, {}});
            break;
        }
        case NoiseKind::PhaseFlip: {
            const double a = std::sqrt(1.0 - p), b = std::sqrt(p);
            if (a != 0.0) set.ops.push_back({{a, 0.0}, {}, {}, {a, 0.0}});
            if (b != 0.0) set.ops.push_back({{b, 0.0}, {}, {}, {-b, 0.0}});
            break;
        }
        case NoiseKind::AmplitudeDamping: {
            const double a = std::sqrt(1.0 - p), b = std::sqrt(p);
            set.ops.push_back({{1.0, 0.0}, {}, {}, {a, 0.0}});
            if (b != 0.0) set.ops.push_back({{}, {b, 0.0}, {}, {}});
            break;
        }
    }
    return set;
}

Mat2 completeness_sum(const KrausSet& set) {
    Mat2 sum{};
    for (const Mat2& k : set.ops) sum = sum + k.adjoint() * k;
    return sum;
}

const char* to_string(NoiseKind k) {
    switch (k) {
        case NoiseKind::None: return "none";
        case NoiseKind::BitFlip: return "bit-flip";
        case NoiseKind::PhaseFlip: return "phase-flip";
        case NoiseKind::AmplitudeDamping: return "amplitude-damping";
    }
    return "none";
}

}  // namespace qwalk

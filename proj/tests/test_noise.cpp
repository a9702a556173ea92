#include <cmath>

#include "doctest.h"
#include "qwalk/noise.hpp"

using namespace qwalk;

TEST_CASE("p = 0 collapses every channel to the identity") {
    for (NoiseKind kind : {NoiseKind::None, NoiseKind::BitFlip,
                           NoiseKind::PhaseFlip, NoiseKind::AmplitudeDamping}) {
        const KrausSet set = kraus_for({kind, 0.0});
        REQUIRE(set.ops.size() == 1);
        CHECK(max_abs_diff(set.ops[0], Mat2::identity()) == 0.0);
    }
}

TEST_CASE("p = 1 flips reduce to the bare Pauli operator") {
    const KrausSet bf = kraus_for({NoiseKind::BitFlip, 1.0});
    REQUIRE(bf.ops.size() == 1);
    CHECK(max_abs_diff(bf.ops[0], Mat2::pauli_x()) == 0.0);

    const KrausSet pf = kraus_for({NoiseKind::PhaseFlip, 1.0});
    REQUIRE(pf.ops.size() == 1);
    CHECK(max_abs_diff(pf.ops[0], Mat2::pauli_z()) == 0.0);
}

TEST_CASE("amplitude damping operators have the textbook form") {
    const double p = 0.37;
    const KrausSet set = kraus_for({NoiseKind::AmplitudeDamping, p});
    REQUIRE(set.ops.size() == 2);
    CHECK(set.ops[0].a00 == cplx(1.0, 0.0));
    CHECK(std::abs(set.ops[0].a11 - cplx(std::sqrt(1 - p), 0)) <= 1e-15);
    CHECK(set.ops[0].a01 == cplx{});
    CHECK(set.ops[0].a10 == cplx{});
    CHECK(std::abs(set.ops[1].a01 - cplx(std::sqrt(p), 0)) <= 1e-15);
    CHECK(set.ops[1].a00 == cplx{});
    CHECK(set.ops[1].a10 == cplx{});
    CHECK(set.ops[1].a11 == cplx{});

    // damping at p = 1 keeps both operators: |0><0| plus the jump
    CHECK(kraus_for({NoiseKind::AmplitudeDamping, 1.0}).ops.size() == 2);
}

TEST_CASE("completeness holds across the whole p grid") {
    for (NoiseKind kind : {NoiseKind::BitFlip, NoiseKind::PhaseFlip,
                           NoiseKind::AmplitudeDamping})
        for (int i = 0; i <= 10; ++i) {
            const double p = i / 10.0;
            const Mat2 sum = completeness_sum(kraus_for({kind, p}));
            CHECK(max_abs_diff(sum, Mat2::identity()) <= 1e-12);
        }
}

TEST_CASE("out-of-range probabilities are rejected") {
    CHECK_THROWS_AS(kraus_for({NoiseKind::BitFlip, -0.01}), invalid_parameter);
    CHECK_THROWS_AS(kraus_for({NoiseKind::BitFlip, 1.01}), invalid_parameter);
    CHECK_THROWS_AS(kraus_for({NoiseKind::PhaseFlip, std::nan("")}),
                    invalid_parameter);
}

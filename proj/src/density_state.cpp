#include "qwalk/density_state.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "qwalk/kernels.hpp"

namespace qwalk {
namespace {

// All four unitary-step pieces act on the flat d x d array, d = 2L:
// the coin mixes row pairs (left factor) and column halves (right factor),
// the shift slides whole rows (left) and the halves of each row (right).

void coin_rows(std::vector<cplx>& rho, int L, const Mat2& m) {
    const std::size_t d = static_cast<std::size_t>(2) * L;
    for (int s = 0; s < L; ++s) {
        cplx* r0 = rho.data() + static_cast<std::size_t>(s) * d;
        cplx* r1 = rho.data() + (static_cast<std::size_t>(L) + s) * d;
        kernels::active_kernels().mix2(r0, r1, r0, r1, d, m);
    }
}

// rho (M x I)^dagger mixes the two column halves of every row with the
// entry-wise conjugate of M (the transpose is absorbed by writing the mix
// per row).
void coin_cols_conj(std::vector<cplx>& rho, int L, const Mat2& mc) {
    const std::size_t d = static_cast<std::size_t>(2) * L;
    for (std::size_t r = 0; r < d; ++r) {
        cplx* h0 = rho.data() + r * d;
        cplx* h1 = h0 + L;
        kernels::active_kernels().mix2(h0, h1, h0, h1, static_cast<std::size_t>(L), mc);
    }
}

void shift_rows(std::vector<cplx>& rho, int L) {
    const std::size_t d = static_cast<std::size_t>(2) * L;
    const std::size_t block = static_cast<std::size_t>(L - 1) * d;
    // coin-0 rows move one site left: row s takes row s+1
    std::memmove(rho.data(), rho.data() + d, block * sizeof(cplx));
    std::fill_n(rho.data() + block, d, cplx{});
    // coin-1 rows move one site right: row s takes row s-1
    cplx* one = rho.data() + static_cast<std::size_t>(L) * d;
    std::memmove(one + d, one, block * sizeof(cplx));
    std::fill_n(one, d, cplx{});
}

void shift_cols(std::vector<cplx>& rho, int L) {
    const std::size_t d = static_cast<std::size_t>(2) * L;
    for (std::size_t r = 0; r < d; ++r) {
        cplx* row = rho.data() + r * d;
        std::memmove(row, row + 1, static_cast<std::size_t>(L - 1) * sizeof(cplx));
        row[L - 1] = cplx{};
        std::memmove(row + L + 1, row + L, static_cast<std::size_t>(L - 1) * sizeof(cplx));
        row[L] = cplx{};
    }
}

void unitary_step(std::vector<cplx>& rho, int L, const Mat2& coin) {
    coin_rows(rho, L, coin);
    coin_cols_conj(rho, L, coin.conj());
    shift_rows(rho, L);
    shift_cols(rho, L);
}

// rho <- sum_k (K_k x I) rho (K_k x I)^dagger
void apply_channel(std::vector<cplx>& rho, int L, const KrausSet& kraus) {
    if (kraus.ops.size() == 1 && max_abs_diff(kraus.ops[0], Mat2::identity()) == 0.0)
        return;
    const std::size_t d = static_cast<std::size_t>(2) * L;
    std::vector<cplx> tmp(rho.size());
    std::vector<cplx> acc(rho.size());
    for (const Mat2& k : kraus.ops) {
        for (int s = 0; s < L; ++s) {
            const cplx* r0 = rho.data() + static_cast<std::size_t>(s) * d;
            const cplx* r1 = rho.data() + (static_cast<std::size_t>(L) + s) * d;
            cplx* t0 = tmp.data() + static_cast<std::size_t>(s) * d;
            cplx* t1 = tmp.data() + (static_cast<std::size_t>(L) + s) * d;
            kernels::active_kernels().mix2(t0, t1, r0, r1, d, k);
        }
        const Mat2 kc = k.conj();
        for (std::size_t r = 0; r < d; ++r) {
            const cplx* h0 = tmp.data() + r * d;
            cplx* a0 = acc.data() + r * d;
            kernels::active_kernels().mix2_acc(a0, a0 + L, h0, h0 + L,
                                               static_cast<std::size_t>(L), kc);
        }
    }
    rho.swap(acc);
}

}  // namespace

DensityState::DensityState(int radius, int lo, int hi)
    : radius_(radius),
      lo_(lo),
      hi_(hi),
      rho_(static_cast<std::size_t>(2 * (2 * radius + 1)) *
           static_cast<std::size_t>(2 * (2 * radius + 1))) {}

DensityState DensityState::from_pure(const PureState& psi) {
    DensityState rho(psi.radius(), psi.support_lo(), psi.support_hi());
    const std::size_t d = static_cast<std::size_t>(rho.dim());
    const int lo = psi.support_lo(), hi = psi.support_hi();
    for (int cr = 0; cr < 2; ++cr)
        for (int jr = lo; jr <= hi; ++jr) {
            const cplx ar = psi.amplitude(cr, jr);
            cplx* row = rho.rho_.data() + rho.row_index(cr, jr) * d;
            for (int cc = 0; cc < 2; ++cc)
                for (int jc = lo; jc <= hi; ++jc)
                    row[rho.row_index(cc, jc)] = ar * std::conj(psi.amplitude(cc, jc));
        }
    return rho;
}

cplx DensityState::entry(int c_row, int j_row, int c_col, int j_col) const {
    if ((c_row != 0 && c_row != 1) || (c_col != 0 && c_col != 1))
        throw invalid_parameter("coin index must be 0 or 1");
    if (j_row < -radius_ || j_row > radius_ || j_col < -radius_ || j_col > radius_)
        return {};
    return rho_[row_index(c_row, j_row) * dim() + row_index(c_col, j_col)];
}

double DensityState::trace() const {
    const std::size_t d = static_cast<std::size_t>(dim());
    double t = 0.0;
    for (std::size_t r = 0; r < d; ++r) t += rho_[r * d + r].real();
    return t;
}

double DensityState::purity() const {
    double p = 0.0;
    for (const cplx& z : rho_) p += std::norm(z);
    return p;
}

double DensityState::hermiticity_defect() const {
    const std::size_t d = static_cast<std::size_t>(dim());
    double worst = 0.0;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = r; c < d; ++c)
            worst = std::max(worst,
                             std::abs(rho_[r * d + c] - std::conj(rho_[c * d + r])));
    return worst;
}

DensityState init_density_walker(const PureState& psi) {
    return DensityState::from_pure(psi);
}

DensityState step_density(const DensityState& rho, const CoinMatrix& coin,
                          const KrausSet& kraus, NoiseOrder order) {
    if (rho.lo_ - 1 < -rho.radius_ || rho.hi_ + 1 > rho.radius_)
        throw capacity_error("step would cross lattice radius " +
                             std::to_string(rho.radius_) +
                             "; allocate a larger state");
    if (kraus.ops.empty()) throw invalid_parameter("empty Kraus set");
    DensityState out(rho.radius_, rho.lo_ - 1, rho.hi_ + 1);
    out.rho_ = rho.rho_;
    const int L = rho.site_count();
    if (order == NoiseOrder::BeforeStep) {
        apply_channel(out.rho_, L, kraus);
        unitary_step(out.rho_, L, coin.mat());
    } else {
        unitary_step(out.rho_, L, coin.mat());
        apply_channel(out.rho_, L, kraus);
    }
    return out;
}

DensityState evolve_density(const DensityState& rho, const CoinMatrix& coin,
                            const NoiseModel& noise, int steps,
                            NoiseOrder order) {
    if (steps < 0) throw invalid_parameter("steps must be nonnegative");
    const KrausSet kraus = kraus_for(noise);
    DensityState cur = rho;
    for (int k = 0; k < steps; ++k) cur = step_density(cur, coin, kraus, order);
    if (std::abs(cur.trace() - 1.0) > 1e-10)
        throw error("density evolution lost trace normalization");
    return cur;
}

PositionDistribution position_distribution(const DensityState& rho) {
    const int L = 2 * rho.radius_ + 1;
    const std::size_t d = static_cast<std::size_t>(2) * L;
    PositionDistribution dist;
    dist.radius = rho.radius_;
    dist.probs.resize(static_cast<std::size_t>(L));
    for (int s = 0; s < L; ++s) {
        const double p = rho.rho_[static_cast<std::size_t>(s) * d + s].real() +
                         rho.rho_[(static_cast<std::size_t>(L) + s) * d + L + s].real();
        if (p < -1e-10)
            throw error("density diagonal fell below zero");
        dist.probs[static_cast<std::size_t>(s)] = p < 0.0 ? 0.0 : p;
    }
    return dist;
}

}  // namespace qwalk

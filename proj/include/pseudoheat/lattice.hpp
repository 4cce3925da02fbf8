#pragma once
/**
 * @file lattice.hpp
 * @brief Brute-force signed-measure oracle: a space-time lattice walk whose
 *        one-step weights are the (possibly sign-changing) kernel at time
 *        step dt, used to validate the closed-form transforms from first
 *        principles.
 *
 * The walk lives on the uniform grid x_i = grid_min + i h and advances in
 * time steps dt = 2^{-n}; one step moves by d cells with signed weight
 * w_d = p(dt; d h) h (renormalized to sum exactly to 1, the factor being
 * recorded). Because the kernel is analytic with superexponential decay, the
 * Riemann-sum weights are exponentially accurate in h, and convolving them
 * reproduces the kernel semigroup; what the DP adds is the pathwise side:
 * running maxima and first-crossing events, which have no semigroup shortcut.
 *
 * expect_max_functional computes
 *     Int_0^inf e^{-lambda t} E_x0[ e^{i mu X(t) - nu M(t)} ] dt
 * by tracking the pair (position, running maximum) — an upper-triangular
 * grid^2 state space — and accumulating the piecewise-constant Laplace
 * weight per step. first_passage_transform computes
 *     E_x0[ e^{-lambda T_a + i mu X(T_a)} ]
 * for the first entry into [a, infinity) by absorbing all mass that lands
 * there. Both are compared against the closed-form transforms in tests.
 *
 * Odd N is rejected: the one-step weights would have infinite total
 * variation, so truncation to a finite stencil is uncontrolled.
 *
 * The DP defaults to the serial backend (one run = one thread; independent
 * runs parallelize safely from outside). The openmp backend splits the
 * per-row correlations across threads and is maintained for the backend
 * benchmark; every write is owned by a single row/column and reductions keep
 * a fixed order, so its output is bitwise identical to serial.
 */

#include <complex>
#include <vector>

#include "pseudoheat/backend.hpp"
#include "pseudoheat/params.hpp"
#include "pseudoheat/roots.hpp"

namespace pseudoheat {

struct LatticeConfig {
    double grid_min = -8.0;
    double grid_max = 7.96;
    int points = 400;               ///< grid size (state space is points^2 / 2)
    int n = 6;                      ///< time step dt = 2^{-n}
    long long max_steps = 30000000; ///< Laplace-horizon cap before giving up
};

struct SignedLattice {
    ParamSet ps;
    double grid_min = 0.0;
    double h = 0.0;  ///< cell width
    double dt = 0.0; ///< time step
    int points = 0;
    long long max_steps = 0;
    std::vector<double> weights; ///< signed one-step weights, index d + radius
    int radius = 0;              ///< stencil half-width in cells
    double renorm = 1.0;         ///< raw weight sum divided out (≈ 1)
    double abs_mass = 0.0;       ///< sum |weights| after renormalization (≈ rho)

    double x(int i) const { return grid_min + i * h; }
};

/// Tabulate the one-step weights for even N. Throws grid_too_narrow when the
/// step kernel's mass does not fit the grid to 1e-3, unsupported for odd N.
SignedLattice build_lattice(const ParamSet& ps, const LatticeConfig& cfg = {});

/// Laplace functional of (X, M) by (position, running max) DP; the start x0
/// snaps to the nearest grid point. See file header.
cplx expect_max_functional(const SignedLattice& lat, double lambda, double mu, double nu,
                           double x0, Backend backend = Backend::serial);

/// Upward first-crossing transform E[e^{-lambda T_a + i mu X(T_a)}] by
/// absorbing DP; requires x0 < a. Throws horizon_not_covered when the Laplace
/// horizon needs more than max_steps steps.
cplx first_passage_transform(const SignedLattice& lat, double lambda, double mu,
                             double x0, double a, Backend backend = Backend::serial);

/// A finitely supported signed step distribution with total mass one.
struct SignedIncrementDist {
    std::vector<double> atom;   ///< step values
    std::vector<double> weight; ///< signed weights, must sum to 1
};

/**
 * Largest deviation, over orders 0..K, between the two sides of the
 * fluctuation identity for the walk S_k with the given signed step law:
 *
 *   sum_k E[e^{i mu S_k - nu max(0, S_1..S_k)}] z^k
 *     = exp( sum_{k>=1} E[e^{i mu S_k - nu max(S_k, 0)}] z^k / k )
 *
 * compared coefficient by coefficient (left side by exhaustive path
 * enumeration, right side by the exponential-series recurrence). The
 * identity needs total mass one but holds for signed weights.
 */
double spitzer_residual(const SignedIncrementDist& d, double mu, double nu, int K);

} // namespace pseudoheat

#pragma once
/**
 * @file hitting.hpp
 * @brief First-crossing laws of a level a: the joint transform of the
 *        crossing time T_a and crossing place X(T_a), its decomposition into
 *        point-mass derivatives ("multipoles") at the level, the real
 *        time-domain profiles multiplying each multipole, and the analytic
 *        consistency checks (strong Markov factorization, boundary-value
 *        characterization).
 *
 * Conventions, with r = lambda^{1/N} (principal branch):
 *
 * Upward crossing (start at x <= a):
 *   lft_hitting = E_x[e^{-lambda T_a + i mu X(T_a)}]
 *               = e^{i mu a} sum_{j in J} A_j
 *                   prod_{l in J\{j}} (1 - (i mu / r) conj(theta_l))
 *                   e^{theta_j r (x - a)}
 *
 * Expanding the product in powers of (i mu) splits the law into #J point
 * multipoles delta^{(q)}(. - a), q = 0..#J-1, with Laplace-domain amplitudes
 *
 *   multipole_lt(q) = lambda^{-q/N} sum_{j in J} conj(c[j][q]) A_j
 *                       e^{theta_j r (x - a)},
 *
 * so that  lft_hitting = e^{i mu a} sum_q (-i mu)^q multipole_lt(q)  exactly.
 * As lambda -> 0 the amplitudes converge to the crossing-place weights
 * (-1)^q (x-a)^q / q!, whose Fourier transform is ft_hitting_place.
 *
 * Downward crossing (start at x >= a) mirrors everything with K, B, d.
 *
 * Time domain: Ilq(l, q, t, xi) inverts lambda^{-q/N} e^{theta_l r xi}
 * (valid for Re(theta_l xi) < 0) on a contour rotated onto the rays
 * arg lambda = +-pi, giving integrals with e^{-t lambda^N} damping.
 * time_profile combines them into the real amplitude of multipole q:
 * J_q = sum_J conj(c[j][q]) A_j I_{j,q} upward, K_q = d/B/K mirror downward.
 * Each profile integrates in time to the place weight:
 *   Int_0^inf J_q(t; xi) dt = (-1)^q xi^q / q!.
 *
 * For odd N all of these are formal signed-kernel quantities; the formulas
 * are evaluated identically.
 */

#include <complex>
#include <vector>

#include "pseudoheat/backend.hpp"
#include "pseudoheat/quadrature.hpp"
#include "pseudoheat/roots.hpp"

namespace pseudoheat {

enum class Crossing { upward, downward };

/// Joint Laplace(time)-Fourier(place) transform of the first crossing of a.
/// Upward requires x <= a, downward x >= a (throws invalid_query otherwise).
cplx lft_hitting(const RootSystem& rs, Crossing dir, cplx lambda, double mu, double x,
                 double a);

/// Laplace-domain amplitude of the q-th multipole, q = 0..#J-1 (upward)
/// or 0..#K-1 (downward).
cplx multipole_lt(const RootSystem& rs, Crossing dir, int q, cplx lambda, double x,
                  double a);

/// Time-domain block: inverse Laplace transform of lambda^{-q/N}
/// e^{theta_l lambda^{1/N} xi} at time t > 0. Requires Re(theta_l xi) < 0.
cplx Ilq(const RootSystem& rs, int l, int q, double t, double xi);

/// Real time-domain amplitude of multipole q at elapsed time t, for starting
/// offset xi = x - a (upward: xi < 0; downward: xi > 0).
double time_profile(const RootSystem& rs, Crossing dir, int q, double t, double xi,
                    double* err_out = nullptr);

/// time_profile over a batch of offsets; rows are independent, so the openmp
/// backend splits them across threads (bitwise-identical to serial).
std::vector<double> time_profile_grid(const RootSystem& rs, Crossing dir, int q, double t,
                                      const std::vector<double>& xi,
                                      Backend backend = default_backend());

/// Int_0^inf time_profile(q, t, xi) dt, by log-graded quadrature up to T plus
/// the analytic large-T tail series. Converges to (-1)^q xi^q / q!.
quad::Result integral_time_profile(const RootSystem& rs, Crossing dir, int q, double xi);

/// Weight of delta^{(q)}(. - a) in the crossing-place law: (-1)^q (x-a)^q / q!.
double hitting_place_weight(const RootSystem& rs, Crossing dir, int q, double x, double a);

/// Fourier transform of the crossing-place law:
/// e^{i mu a} sum_{q} ((x-a)^q / q!) (i mu)^q.
cplx ft_hitting_place(const RootSystem& rs, Crossing dir, double mu, double x, double a);

/**
 * Residual of the strong-Markov factorization at real lambda > 0:
 *
 *   (lambda - kappa_N (i mu)^N) * e^{i mu a} / lambda
 *     * [ r sum_J theta_j A_j e^{theta_j r (x-a)} / (theta_j r - i mu) ]
 *     * [ r sum_K theta_k B_k / (theta_k r - i mu) ]
 *   = lft_hitting                                   (upward; K-mirror downward,
 *                                                    exponentials on the K factor)
 *
 * i.e. cutting the free-space resolvent at the crossing time reproduces the
 * crossing transform. Returns the absolute residual.
 */
double strong_markov_residual(const RootSystem& rs, Crossing dir, double lambda,
                              double mu, double x, double a);

/**
 * Residual of the boundary-value characterization of U(x) = lft_hitting at
 * fixed lambda > 0, mu: on the starting-point side of the level,
 *
 *   kappa_N U^(N)(x) = lambda U(x),
 *   U^(l)(a) = (i mu)^l e^{i mu a}   for l = 0..#J-1 (upward; #K-1 downward),
 *
 * all derivatives taken analytically on the exponential term list. Returns
 * the largest absolute residual over ODE samples and boundary conditions.
 */
double bvp_residual_hitting(const RootSystem& rs, Crossing dir, double lambda, double mu,
                            double a);

} // namespace pseudoheat

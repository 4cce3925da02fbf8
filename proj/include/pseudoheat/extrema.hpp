#pragma once
/**
 * @file extrema.hpp
 * @brief Joint laws of the process value and its running maximum M(t) (or
 *        minimum m(t)), in the Laplace domain and, via Talbot inversion or a
 *        kernel double integral, in the time domain.
 *
 * Core objects (r = lambda^{1/N} throughout, principal branch):
 *
 *   phi_lambda(xi) =  r * sum_J theta_j A_j e^{theta_j r xi}   (decays for xi <= 0)
 *   psi_lambda(xi) = -r * sum_K theta_k B_k e^{theta_k r xi}   (decays for xi >= 0)
 *
 * Maximum side, admissible for z >= max(x, y):
 *   joint_density_lt   = (1/lambda) phi_lambda(x - z) psi_lambda(z - y)
 *                        (density in (y, z) of (X(t), M(t)), transformed in t)
 *   dist_func_tail_lt  = LT_t P_x{X(t) <= y, M(t) >= z}
 *                      = (1/lambda) sum_{j,k} [theta_j A_j B_k / (theta_j - theta_k)]
 *                          e^{theta_j r (x-z) + theta_k r (z-y)}
 *   dist_func_lt       = LT_t P_x{X(t) <= y, M(t) <= z}
 *                      = Psi(lambda; x - y) - dist_func_tail_lt
 *
 * Minimum side mirrors everything, admissible for z <= min(x, y):
 *   joint_density_lt   = (1/lambda) psi_lambda(x - z) phi_lambda(z - y)
 *   dist_func_tail_lt  = LT_t P_x{X >= y, m <= z}
 *                      = (1/lambda) sum_{j,k} [A_j theta_k B_k / (theta_k - theta_j)]
 *                          e^{theta_j r (z-y) + theta_k r (x-z)}
 *   dist_func_lt       = 1/lambda - Psi(lambda; x - y) - dist_func_tail_lt
 *
 * The Laplace–Fourier transform of (X(t), M(t)) (resp. minimum) is
 *
 *   lft_extrema = e^{(i mu -+ nu) x} /
 *       [ prod_J (r - (i mu - nu) theta_j) * prod_K (r - i mu theta_k) ]   (maximum)
 *   and the minimum version swaps the roles:  e^{(i mu + nu) x} /
 *       [ prod_J (r - i mu theta_j) * prod_K (r - (i mu + nu) theta_k) ].
 *
 * For odd N these are formal signed-kernel quantities (no probabilistic
 * normalization); they are computed identically.
 */

#include <complex>

#include "pseudoheat/quadrature.hpp"
#include "pseudoheat/roots.hpp"
#include "pseudoheat/talbot.hpp"

namespace pseudoheat {

enum class Extremum { maximum, minimum };

cplx phi_lambda(const RootSystem& rs, cplx lambda, double xi);
cplx psi_lambda(const RootSystem& rs, cplx lambda, double xi);

/// E_x Int_0^inf e^{-lambda t} E[e^{i mu X(t) - nu M(t)}] dt (maximum) or the
/// e^{i mu X(t) + nu m(t)} analog (minimum); nu >= 0.
cplx lft_extrema(const RootSystem& rs, cplx lambda, double mu, double nu, double x,
                 Extremum which);

/// Laplace-domain joint density of (X(t), extremum(t)) at (y, z).
/// Maximum: z >= max(x, y); minimum: z <= min(x, y). Violations throw invalid_query.
cplx joint_density_lt(const RootSystem& rs, cplx lambda, double x, double y, double z,
                      Extremum which);

/// LT of the joint distribution function (see file header for the exact events).
cplx dist_func_lt(const RootSystem& rs, cplx lambda, double x, double y, double z,
                  Extremum which);
cplx dist_func_tail_lt(const RootSystem& rs, cplx lambda, double x, double y, double z,
                       Extremum which);

/// Time-domain joint distribution via Talbot inversion of the transforms above.
quad::Result dist_func_time(const RootSystem& rs, double t, double x, double y, double z,
                            Extremum which, bool tail, const TalbotConfig& cfg = {});

/**
 * Independent time-domain route to P_x{X(t) <= y <= z <= M(t)} (maximum side):
 * the kernel representation
 *
 *   sum_{k in K} sum_{m=0}^{#J-1} a_{km} Int_0^t Int_0^s
 *       p^{(m)}(sigma; x-z) I_{k0}(s-sigma; z-y) (t-s)^{(m+1)/N - 1} dsigma ds,
 *
 *   a_{km} = N B_k / Gamma((m+1)/N) * sum_J A_j alpha[j][m] / (theta_j - theta_k),
 *
 * evaluated by absorbing the power weight into the crossing block first:
 * by the Laplace convolution theorem the inner integral against
 * (t-s)^{(m+1)/N-1} / Gamma((m+1)/N) turns I_{k0} into I_{k,m+1}, so each
 * block is a single convolution p^{(m)} * I_{k,m+1} over [0, t]. Both
 * factors oscillate with phase ~ tau^{-1/(N-1)} as tau -> 0+ (amplitudes can
 * exceed the answer by orders of magnitude before the stretched-exponential
 * envelope wins), so profiles are tabulated on a grid graded in
 * w = tau^{-1/(N-1)} near zero and uniformly in the bulk.
 * Requires x < z, y < z, and even N.
 */
quad::Result dist_tail_time_repr(const RootSystem& rs, double t, double x, double y,
                                 double z);

/**
 * Residual of the boundary-value characterization of dist_func_lt (maximum
 * side) as a function of the starting point x, at fixed lambda > 0, y < z:
 *
 *   kappa_N F^{(N)}(x) = lambda F(x) - 1_{x < y},    x < z,
 *   F^{(l)}(z^-) = 0                                  for 0 <= l <= #J-1,
 *   F continuous at y up to order N-1, with the N-th derivative jumping by
 *   kappa_N across y, and F -> 1/lambda as x -> -inf.
 *
 * All derivatives are analytic (exponential term lists). Returns the largest
 * absolute residual over the checks.
 */
double bvp_residual_dist(const RootSystem& rs, double lambda, double y, double z);

} // namespace pseudoheat

#pragma once
/**
 * @file kernel.hpp
 * @brief The fundamental solution p(t; xi) of du/dt = kappa_N d^N u/dx^N and
 *        its lambda-potentials.
 *
 * p is defined through its space-Fourier representation. For even N the
 * symbol is a pure decay and
 *
 *   p(t; xi) = (1/pi) * Int_0^inf exp(-t u^N) cos(xi u) du,
 *
 * an even, signed (for N >= 4), mass-one kernel. For N = 3 the defining
 * oscillatory integral (1/pi) Int_0^inf cos(xi u - kappa t u^3) du is
 * evaluated after rotating the contour by -pi/6 (kappa = +1), which turns it
 * into an absolutely convergent integral of exp(-w^3) type; kappa = -1 is the
 * mirror image xi -> -xi. Odd orders above 3 have no implemented time-domain
 * representation and are rejected.
 *
 * Everything scales: p(t; xi) = t^{-1/N} p(1; xi t^{-1/N}), and the m-th
 * space derivative carries t^{-(m+1)/N}.
 *
 * The lambda-potentials are the Laplace transforms in time
 *
 *   Phi(lambda; xi) = Int_0^inf e^{-lambda t} p(t; xi) dt,
 *   Psi(lambda; xi) = Int_0^inf e^{-lambda t} P_xi(t) dt,
 *
 * where P_xi(t) is the kernel's distribution function; both reduce to
 * explicit exponential sums over the root system:
 *
 *   Phi(lambda; xi) = -(1/N) lambda^{1/N-1} sum_K theta_k e^{theta_k lambda^{1/N} xi}   (xi >= 0)
 *                     +(1/N) lambda^{1/N-1} sum_J theta_j e^{theta_j lambda^{1/N} xi}   (xi <= 0)
 *   Psi(lambda; xi) =  (1/(N lambda)) sum_K e^{theta_k lambda^{1/N} xi}                 (xi >= 0)
 *                      (1/lambda) [1 - (1/N) sum_J e^{theta_j lambda^{1/N} xi}]         (xi <= 0)
 */

#include <complex>

#include "pseudoheat/params.hpp"
#include "pseudoheat/quadrature.hpp"
#include "pseudoheat/roots.hpp"

namespace pseudoheat {

/// Kernel value p(t; xi), t > 0. Throws unsupported for odd N > 3.
double heat_kernel(const ParamSet& ps, double t, double xi);

/// m-th space derivative d^m/dxi^m p(t; xi), m >= 0 (same domain as heat_kernel).
double kernel_derivative(const ParamSet& ps, int m, double t, double xi);

/**
 * Total variation rho = Int |p(1; xi)| dxi: exactly 1 for N = 2, finite and
 * > 1 for even N >= 4 (computed by splitting at the kernel's sign changes),
 * and +infinity for odd N (throws not_absolutely_convergent).
 */
double rho(const ParamSet& ps);

/// Analytic moment Int xi^p p(t; xi) dxi: 1 for p = 0, 0 for 1 <= p <= N-1,
/// kappa_N * N! * t at p = N. Orders beyond N are rejected.
double moment(const ParamSet& ps, int p, double t);

/// The same moment by direct quadrature of the kernel (even N only),
/// for cross-validation of the analytic lemma.
quad::Result moment_quadrature(const ParamSet& ps, int p, double t);

/// Lambda-potentials at real lambda > 0 (values are real; the exponential
/// sums pair conjugate roots).
double potential_phi(const ParamSet& ps, double lambda, double xi);
double potential_psi(const ParamSet& ps, double lambda, double xi);

/// The same potentials continued to complex lambda off (-inf, 0], as needed
/// by contour inversion.
cplx potential_phi_c(const RootSystem& rs, cplx lambda, double xi);
cplx potential_psi_c(const RootSystem& rs, cplx lambda, double xi);

} // namespace pseudoheat

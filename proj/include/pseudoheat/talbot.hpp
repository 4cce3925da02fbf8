#pragma once
/**
 * @file talbot.hpp
 * @brief Numerical inverse Laplace transform on the fixed Talbot contour.
 *
 * The cotangent contour
 *
 *   s(theta) = (c/t) (-0.6122 + 0.5017 theta cot(0.6407 theta) + 0.2645 i theta),
 *
 * theta in (-pi, pi), c = scale (default M), wraps around the negative real
 * axis, so transforms with a branch point at the origin (every lambda^{1/N}
 * expression in this library) are evaluated only where they are analytic.
 * The constants keep Re s <= 0.1708 c/t everywhere on the contour, which
 * bounds the e^{st} roundoff amplification at e^{0.1708 M} while the midpoint
 * rule converges geometrically in M; for real-valued originals conjugate
 * symmetry folds the sum onto the upper half:
 *
 *   f(t) ~ (2/M) sum_{theta_m > 0} Im( e^{t s_m} F(s_m) s'(theta_m) ),
 *   theta_m = (m + 1/2) pi / (M/2),  m = 0..M/2-1.
 *
 * The error estimate is |f_M - f_{M/2}|, a doubling check in the node count.
 */

#include <complex>
#include <functional>

#include "pseudoheat/quadrature.hpp"

namespace pseudoheat {

struct TalbotConfig {
    int M = 64;         ///< node count; even, >= 8
    double scale = 0.0; ///< contour radius times t; 0 selects the default M
};

/**
 * Invert F at time t > 0. F must be analytic for Re lambda > 0 (and on the
 * Talbot contour) and conjugate-symmetric, i.e. the original f is real.
 *
 * @throws invalid_query on bad t or cfg, nonconvergence if F is non-finite
 *         on the contour.
 */
quad::Result talbot_invert(const std::function<quad::cplx(quad::cplx)>& F, double t,
                           const TalbotConfig& cfg = {});

} // namespace pseudoheat

#pragma once
/**
 * @file roots.hpp
 * @brief Root system of the symbol: the N-th roots theta_l of kappa_N, their
 *        half-plane split J/K, and the product coefficients A_j, B_k driving
 *        every extremum and hitting formula in this library.
 *
 * theta_l are the N solutions of theta^N = kappa_N, enumerated by explicit
 * angle formulas (never by numerical root finding):
 *
 *   even N = 2p:            theta_l = exp(i (2l + p + 1) pi / N)
 *   odd  N,  kappa = +1:    theta_l = exp(2 i l pi / N)
 *   odd  N,  kappa = -1:    theta_l = exp(i (2l + 1) pi / N)
 *
 * J = { l : Re theta_l > 0 } and K = { l : Re theta_l < 0 }. No root is ever
 * purely imaginary for N <= kMaxOrder (asserted), so the split is exact.
 *
 *   A_j = prod_{l in J\{j}} theta_l / (theta_l - theta_j),   j in J,
 *   B_k = prod_{l in K\{k}} theta_l / (theta_l - theta_k),   k in K.
 *
 * On top of these the builder tabulates:
 *  - c[j][q] / d[k][q]: elementary symmetric polynomials of the other roots
 *    in J (resp. K), used by the multipole decomposition of hitting laws;
 *  - alpha[j][m] / beta[k][m]: the dual (Vandermonde-inverse) coefficients
 *    with sum_{j in J} theta_j^l alpha[j][m] = delta_{lm}, and the K-side
 *    mirror for beta.
 */

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "pseudoheat/params.hpp"

namespace pseudoheat {

using cplx = std::complex<double>;

struct RootSystem {
    int N = 0;
    int kappa = 0;
    std::vector<cplx> theta; ///< size N
    std::vector<int> J;      ///< indices with Re theta > 0, ascending
    std::vector<int> K;      ///< indices with Re theta < 0, ascending
    std::vector<cplx> A;     ///< size N; zero outside J
    std::vector<cplx> B;     ///< size N; zero outside K

    /// c[j][q] = e_q({theta_l : l in J\{j}}), q = 0..#J-1 (c[j][0] = 1);
    /// rows outside J are empty. d is the K-side analog.
    std::vector<std::vector<cplx>> c, d;

    /// alpha[j][m], m = 0..#J-1: dual basis to the powers theta_j^l on J;
    /// beta is the K-side analog. Rows outside the owning set are empty.
    std::vector<std::vector<cplx>> alpha, beta;

    int cardJ() const { return static_cast<int>(J.size()); }
    int cardK() const { return static_cast<int>(K.size()); }

    /// Product of theta_j over J (resp. theta_k over K).
    cplx prodJ() const;
    cplx prodK() const;
};

/// Build the full root system for validated parameters.
RootSystem build_root_system(const ParamSet& ps);

/// Expected cardinalities (#J, #K) from the parity rules, without building.
std::pair<int, int> cardinalities(int N, int kappa);

/**
 * Residuals of the algebraic identity battery. Each entry is a named maximum
 * absolute deviation; all are ~1e-15 for a correct build. The battery:
 *
 *  - prod_elem:          prod_{l != m} theta_l/(theta_m - theta_l) = 1/N
 *  - sum_A / sum_B:      sum A_j = sum B_k = 1
 *  - partial_frac:       sum_J theta_j A_j/(theta_j - theta_k) = 1/(N B_k), and the K-mirror
 *  - expansion:          sum_J theta_j^p A_j/(1 - conj(theta_j) x)
 *                          = x^p / prod_J (1 - conj(theta_j) x)        (p <= #J-1)
 *                        with the extra constant (-1)^{#J-1} prod_J theta_j at p = #J
 *  - lemma_sum:          sum_J conj(c[j][q]) theta_j^p A_j = delta_{pq} (-1)^q  (p,q <= #J-1)
 *  - vandermonde_alpha:  sum_J theta_j^l alpha[j][m] = delta_{lm}
 *  - vandermonde_beta:   K-side mirror
 */
struct IdentityReport {
    std::vector<std::pair<std::string, double>> residuals;
    double max_residual() const;
};

IdentityReport identity_report(const RootSystem& rs);

} // namespace pseudoheat

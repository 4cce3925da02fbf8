#include "pseudoheat/roots.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

namespace pseudoheat {

namespace {

constexpr double kPi = std::numbers::pi;

// Elementary symmetric polynomials e_0..e_n of the given values, by
// incremental multiplication of prod (1 + v_i x).
std::vector<cplx> elementary_symmetric(const std::vector<cplx>& vals) {
    std::vector<cplx> e(vals.size() + 1, cplx(0.0));
    e[0] = 1.0;
    std::size_t used = 0;
    for (const cplx& v : vals) {
        ++used;
        for (std::size_t q = used; q >= 1; --q) e[q] += v * e[q - 1];
    }
    return e;
}

// Coefficients c[j][q] (or d[k][q]) and the dual coefficients for one
// half-plane set: own = J (or K), coefA = A (or B).
void build_set_tables(const std::vector<cplx>& theta, const std::vector<int>& own,
                      const std::vector<cplx>& coefA,
                      std::vector<std::vector<cplx>>& cTab,
                      std::vector<std::vector<cplx>>& dualTab) {
    const int n = static_cast<int>(theta.size());
    const int card = static_cast<int>(own.size());
    cTab.assign(n, {});
    dualTab.assign(n, {});
    cplx prodOwn = 1.0;
    for (int l : own) prodOwn *= theta[l];
    for (int j : own) {
        std::vector<cplx> others;
        others.reserve(card - 1);
        for (int l : own)
            if (l != j) others.push_back(theta[l]);
        std::vector<cplx> e = elementary_symmetric(others);
        cTab[j].assign(e.begin(), e.begin() + card); // q = 0..card-1
        // Dual basis: alpha[j][m] = (-1)^m c[j][card-1-m] theta_j A_j / prod_own,
        // the inverse of the Vandermonde matrix (theta_j^l)_{l,j in own}.
        dualTab[j].resize(card);
        for (int m = 0; m < card; ++m) {
            const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
            dualTab[j][m] = sgn * cTab[j][card - 1 - m] * theta[j] * coefA[j] / prodOwn;
        }
    }
}

} // namespace

cplx RootSystem::prodJ() const {
    cplx p = 1.0;
    for (int j : J) p *= theta[j];
    return p;
}

cplx RootSystem::prodK() const {
    cplx p = 1.0;
    for (int k : K) p *= theta[k];
    return p;
}

std::pair<int, int> cardinalities(int N, int kappa) {
    if (N % 2 == 0) return {N / 2, N / 2};
    const int p = (N - 1) / 2;
    // For odd N the half-plane counts depend on the parity of p and the sign
    // of kappa; the four cases below follow from counting angles in (-pi/2, pi/2).
    int cj;
    if (kappa == 1)
        cj = (p % 2 == 0) ? p + 1 : p;
    else
        cj = (p % 2 == 0) ? p : p + 1;
    return {cj, N - cj};
}

RootSystem build_root_system(const ParamSet& ps) {
    const int N = ps.N;
    RootSystem rs;
    rs.N = N;
    rs.kappa = ps.kappa;
    rs.theta.resize(N);

    for (int l = 0; l < N; ++l) {
        double ang;
        if (N % 2 == 0)
            ang = (2.0 * l + N / 2 + 1) * kPi / N;
        else if (ps.kappa == 1)
            ang = 2.0 * l * kPi / N;
        else
            ang = (2.0 * l + 1) * kPi / N;
        rs.theta[l] = std::polar(1.0, ang);
    }

    for (int l = 0; l < N; ++l) {
        const double re = rs.theta[l].real();
        // The angle grids above never produce a purely imaginary root for
        // N <= kMaxOrder; a violation means corrupted parameters.
        if (std::abs(re) <= 1e-9)
            throw invalid_query("root " + std::to_string(l) + " falls on the imaginary axis");
        (re > 0 ? rs.J : rs.K).push_back(l);
    }

    const auto [cj, ck] = cardinalities(N, ps.kappa);
    assert(rs.cardJ() == cj && rs.cardK() == ck);
    (void)cj;
    (void)ck;

    rs.A.assign(N, cplx(0.0));
    rs.B.assign(N, cplx(0.0));
    for (int j : rs.J) {
        cplx prod = 1.0;
        for (int l : rs.J)
            if (l != j) prod *= rs.theta[l] / (rs.theta[l] - rs.theta[j]);
        rs.A[j] = prod;
    }
    for (int k : rs.K) {
        cplx prod = 1.0;
        for (int l : rs.K)
            if (l != k) prod *= rs.theta[l] / (rs.theta[l] - rs.theta[k]);
        rs.B[k] = prod;
    }

    build_set_tables(rs.theta, rs.J, rs.A, rs.c, rs.alpha);
    build_set_tables(rs.theta, rs.K, rs.B, rs.d, rs.beta);
    return rs;
}

double IdentityReport::max_residual() const {
    double m = 0.0;
    for (const auto& [name, r] : residuals) m = std::max(m, r);
    return m;
}

IdentityReport identity_report(const RootSystem& rs) {
    IdentityReport rep;
    const int N = rs.N;
    const int cj = rs.cardJ();
    const int ck = rs.cardK();

    // prod_{l != m} theta_l / (theta_m - theta_l) = 1/N, for every m.
    {
        double worst = 0.0;
        for (int m = 0; m < N; ++m) {
            cplx prod = 1.0;
            for (int l = 0; l < N; ++l)
                if (l != m) prod *= rs.theta[l] / (rs.theta[l] - rs.theta[m]);
            worst = std::max(worst, std::abs(prod - cplx(1.0 / N)));
        }
        rep.residuals.emplace_back("prod_elem", worst);
    }

    // sum_J A_j = 1 and sum_K B_k = 1.
    {
        cplx sa = 0.0, sb = 0.0;
        for (int j : rs.J) sa += rs.A[j];
        for (int k : rs.K) sb += rs.B[k];
        rep.residuals.emplace_back("sum_A", std::abs(sa - cplx(1.0)));
        rep.residuals.emplace_back("sum_B", std::abs(sb - cplx(1.0)));
    }

    // sum_J theta_j A_j / (theta_j - theta_k) = 1/(N B_k) and the K-mirror.
    {
        double worst = 0.0;
        for (int k : rs.K) {
            cplx s = 0.0;
            for (int j : rs.J) s += rs.theta[j] * rs.A[j] / (rs.theta[j] - rs.theta[k]);
            worst = std::max(worst, std::abs(s - 1.0 / (double(N) * rs.B[k])));
        }
        for (int j : rs.J) {
            cplx s = 0.0;
            for (int k : rs.K) s += rs.theta[k] * rs.B[k] / (rs.theta[k] - rs.theta[j]);
            worst = std::max(worst, std::abs(s - 1.0 / (double(N) * rs.A[j])));
        }
        rep.residuals.emplace_back("partial_frac", worst);
    }

    // Geometric-series expansion over J at fixed sample points x in (-1,1):
    // for p <= #J-1 the rational function reproduces x^p / prod (1 - conj(theta_j) x);
    // at p = #J an extra constant (-1)^{#J-1} prod_J theta_j appears.
    {
        double worst = 0.0;
        const double xs[] = {0.3, -0.7, 0.55};
        for (double x : xs) {
            cplx denom = 1.0;
            for (int j : rs.J) denom *= (1.0 - std::conj(rs.theta[j]) * x);
            for (int p = 0; p <= cj; ++p) {
                cplx lhs = 0.0;
                for (int j : rs.J)
                    lhs += std::pow(rs.theta[j], p) * rs.A[j] /
                           (1.0 - std::conj(rs.theta[j]) * x);
                cplx rhs = std::pow(cplx(x), p) / denom;
                if (p == cj) rhs += ((cj % 2 == 1) ? 1.0 : -1.0) * rs.prodJ();
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
        rep.residuals.emplace_back("expansion", worst);
    }

    // Moment triangle of the symmetric-polynomial weights:
    // sum_J conj(c[j][q]) theta_j^p A_j = delta_{pq} (-1)^q for p,q <= #J-1,
    // and the K-side mirror with d/B.
    {
        double worst = 0.0;
        for (int q = 0; q < cj; ++q)
            for (int p = 0; p < cj; ++p) {
                cplx s = 0.0;
                for (int j : rs.J)
                    s += std::conj(rs.c[j][q]) * std::pow(rs.theta[j], p) * rs.A[j];
                const cplx want = (p == q) ? cplx((q % 2 == 0) ? 1.0 : -1.0) : cplx(0.0);
                worst = std::max(worst, std::abs(s - want));
            }
        for (int q = 0; q < ck; ++q)
            for (int p = 0; p < ck; ++p) {
                cplx s = 0.0;
                for (int k : rs.K)
                    s += std::conj(rs.d[k][q]) * std::pow(rs.theta[k], p) * rs.B[k];
                const cplx want = (p == q) ? cplx((q % 2 == 0) ? 1.0 : -1.0) : cplx(0.0);
                worst = std::max(worst, std::abs(s - want));
            }
        rep.residuals.emplace_back("lemma_sum", worst);
    }

    // Vandermonde duality of alpha (J side) and beta (K side).
    {
        double worstA = 0.0, worstB = 0.0;
        for (int l = 0; l < cj; ++l)
            for (int m = 0; m < cj; ++m) {
                cplx s = 0.0;
                for (int j : rs.J) s += std::pow(rs.theta[j], l) * rs.alpha[j][m];
                worstA = std::max(worstA, std::abs(s - cplx(l == m ? 1.0 : 0.0)));
            }
        for (int l = 0; l < ck; ++l)
            for (int m = 0; m < ck; ++m) {
                cplx s = 0.0;
                for (int k : rs.K) s += std::pow(rs.theta[k], l) * rs.beta[k][m];
                worstB = std::max(worstB, std::abs(s - cplx(l == m ? 1.0 : 0.0)));
            }
        rep.residuals.emplace_back("vandermonde_alpha", worstA);
        rep.residuals.emplace_back("vandermonde_beta", worstB);
    }

    return rep;
}

} // namespace pseudoheat

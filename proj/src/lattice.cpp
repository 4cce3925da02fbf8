#include "pseudoheat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pseudoheat/errors.hpp"
#include "pseudoheat/kernel.hpp"

namespace pseudoheat {

namespace {

constexpr double kHorizonLog = 13.815510557964274; ///< -ln(1e-6)
constexpr double kPruneRel = 1e-17; ///< per-cell drop threshold vs global max

int snap_index(const SignedLattice& lat, double x0) {
    const int i = static_cast<int>(std::lround((x0 - lat.grid_min) / lat.h));
    return std::clamp(i, 0, lat.points - 1);
}

/// Steps needed for the discarded Laplace tail e^{-lambda K dt} to drop
/// below 1e-6.
long long horizon_steps(const SignedLattice& lat, double lambda) {
    if (!(lambda > 0.0)) throw invalid_query("lattice transforms need lambda > 0");
    const double k = std::ceil(kHorizonLog / (lambda * lat.dt));
    if (!(k <= static_cast<double>(lat.max_steps)))
        throw horizon_not_covered("Laplace horizon exceeds the configured step cap");
    return static_cast<long long>(k);
}

} // namespace

SignedLattice build_lattice(const ParamSet& ps, const LatticeConfig& cfg) {
    if (ps.N % 2 != 0)
        throw unsupported(
            "lattice oracle requires even N: odd-order kernels have infinite "
            "total variation, so a truncated stencil is uncontrolled");
    if (cfg.points < 8 || cfg.points > 1024)
        throw invalid_query("lattice points must lie in [8, 1024]");
    if (cfg.n < 0 || cfg.n > 24) throw invalid_query("time exponent n must lie in [0, 24]");
    if (!(cfg.grid_max > cfg.grid_min)) throw invalid_query("grid_max must exceed grid_min");
    if (cfg.max_steps < 1) throw invalid_query("max_steps must be positive");

    SignedLattice lat;
    lat.ps = ps;
    lat.grid_min = cfg.grid_min;
    lat.points = cfg.points;
    lat.h = (cfg.grid_max - cfg.grid_min) / (cfg.points - 1);
    lat.dt = std::ldexp(1.0, -cfg.n);
    lat.max_steps = cfg.max_steps;

    // One-step weights w_d = p(dt; d h) h. Even kernels are symmetric, so
    // evaluate one side. The stencil is cut where the weights fall below
    // 1e-13 of the peak: the kernel evaluator carries quadrature noise of
    // about 3e-16 * peak, so a tighter cut would keep noise cells of random
    // sign and inflate the radius. Mass truncated by the cut is below 1e-12
    // in absolute terms. The Riemann sum is exponentially accurate in h for
    // these analytic kernels, so the mass check below is a grid-coverage
    // check, not a discretization check.
    const int rcap = cfg.points - 1;
    std::vector<double> side(rcap + 1, 0.0);
    double vmax = 0.0;
    for (int d = 0; d <= rcap; ++d) {
        side[d] = heat_kernel(lat.ps, lat.dt, d * lat.h) * lat.h;
        vmax = std::max(vmax, std::abs(side[d]));
    }
    int radius = 0;
    for (int d = 1; d <= rcap; ++d)
        if (std::abs(side[d]) >= 1e-13 * vmax) radius = d;

    double mass = side[0];
    for (int d = 1; d <= radius; ++d) mass += 2.0 * side[d];
    if (std::abs(mass - 1.0) > 1e-3)
        throw grid_too_narrow("one-step kernel mass escapes the grid");

    lat.radius = radius;
    lat.weights.assign(2 * radius + 1, 0.0);
    lat.renorm = mass;
    double abs_mass = 0.0;
    for (int d = -radius; d <= radius; ++d) {
        lat.weights[d + radius] = side[std::abs(d)] / mass;
        abs_mass += std::abs(lat.weights[d + radius]);
    }
    lat.abs_mass = abs_mass;
    return lat;
}

cplx expect_max_functional(const SignedLattice& lat, double lambda, double mu, double nu,
                           double x0, Backend backend) {
    if (nu < 0.0) throw invalid_query("running-max functional needs nu >= 0");
    const long long K = horizon_steps(lat, lambda);
    const int P = lat.points, R = lat.radius;
    const int i0 = snap_index(lat, x0);

    // dp[m*P + i]: signed mass at position i with running max m (i <= m,
    // m >= i0). rc holds the freshly correlated rows before the max
    // bookkeeping redistributes the diagonal.
    std::vector<double> dp(static_cast<std::size_t>(P) * P, 0.0);
    std::vector<double> rc(static_cast<std::size_t>(P) * P, 0.0);
    std::vector<int> lo(P, P), hi(P, -1), rlo(P, P), rhi(P, -1);
    dp[static_cast<std::size_t>(i0) * P + i0] = 1.0;
    lo[i0] = hi[i0] = i0;
    int m_hi = i0;

    std::vector<cplx> eip(P);
    std::vector<double> env(P);
    for (int i = 0; i < P; ++i) {
        eip[i] = std::exp(cplx{0.0, mu * lat.x(i)});
        env[i] = std::exp(-nu * lat.x(i));
    }

    // phi_k = sum_m e^{-nu x_m} sum_i dp[m][i] e^{i mu x_i}, summed in fixed
    // ascending order so both backends produce identical bytes.
    auto reduce_phi = [&]() {
        cplx phi{0.0, 0.0};
        for (int m = i0; m <= m_hi; ++m) {
            if (lo[m] > hi[m]) continue;
            cplx row{0.0, 0.0};
            for (int i = lo[m]; i <= hi[m]; ++i)
                row += dp[static_cast<std::size_t>(m) * P + i] * eip[i];
            phi += env[m] * row;
        }
        return phi;
    };

    cplx total = reduce_phi(); // k = 0 term, weight e^{-lambda * 0} = 1
    const double edt = std::exp(-lambda * lat.dt);
    double wk = edt;
    for (long long k = 1; k < K; ++k) {
        const int m_hi_old = m_hi;
        // Phase A: correlate every active row with the step weights. Each row
        // is owned by one loop index, so the openmp backend is bitwise equal.
        parallel_for(backend, static_cast<long long>(m_hi_old - i0 + 1), [&](long long mm) {
            const int m = i0 + static_cast<int>(mm);
            if (lo[m] > hi[m]) {
                rlo[m] = P;
                rhi[m] = -1;
                return;
            }
            const int out_lo = std::max(0, lo[m] - R);
            const int out_hi = std::min(P - 1, hi[m] + R);
            const double* row = &dp[static_cast<std::size_t>(m) * P];
            double* out = &rc[static_cast<std::size_t>(m) * P];
            for (int ip = out_lo; ip <= out_hi; ++ip) {
                double s = 0.0;
                const int dlo = std::max(-R, ip - hi[m]);
                const int dhi = std::min(R, ip - lo[m]);
                for (int d = dlo; d <= dhi; ++d) s += lat.weights[d + R] * row[ip - d];
                out[ip] = s;
            }
            rlo[m] = out_lo;
            rhi[m] = out_hi;
        });
        // Phase B: positions below the old max keep it; a landing at i' >= m
        // starts a new diagonal cell (i', i'), collected over old rows in
        // ascending order. Each new row is owned by one loop index.
        m_hi = std::min(P - 1, m_hi_old + R);
        parallel_for(backend, static_cast<long long>(m_hi - i0 + 1), [&](long long mm) {
            const int m = i0 + static_cast<int>(mm);
            double* row = &dp[static_cast<std::size_t>(m) * P];
            int nlo = m;
            if (m <= m_hi_old && rlo[m] <= rhi[m]) {
                const int cap = std::min(rhi[m], m - 1);
                for (int i = rlo[m]; i <= cap; ++i)
                    row[i] = rc[static_cast<std::size_t>(m) * P + i];
                for (int i = cap + 1; i < m; ++i) row[i] = 0.0;
                if (rlo[m] <= cap) nlo = rlo[m];
            }
            double diag = 0.0;
            for (int mp = i0; mp <= std::min(m, m_hi_old); ++mp)
                if (rlo[mp] <= m && m <= rhi[mp])
                    diag += rc[static_cast<std::size_t>(mp) * P + m];
            row[m] = diag;
            // Cells outside [nlo, m] may hold stale values from earlier
            // steps; they are never read, because every access (phase A,
            // the reduction, pruning) is span-guarded, and any later span
            // growth rewrites the newly covered cells here first.
            lo[m] = nlo;
            hi[m] = m;
        });
        // Prune: drop cells below kPruneRel of the global peak by shrinking
        // spans (values outside spans are never read).
        double gmax = 0.0;
        for (int m = i0; m <= m_hi; ++m)
            for (int i = lo[m]; i <= hi[m]; ++i)
                gmax = std::max(gmax, std::abs(dp[static_cast<std::size_t>(m) * P + i]));
        const double thr = kPruneRel * gmax;
        for (int m = i0; m <= m_hi; ++m) {
            while (lo[m] <= hi[m] &&
                   std::abs(dp[static_cast<std::size_t>(m) * P + lo[m]]) < thr)
                ++lo[m];
            while (hi[m] >= lo[m] &&
                   std::abs(dp[static_cast<std::size_t>(m) * P + hi[m]]) < thr)
                --hi[m];
        }
        while (m_hi > i0 && lo[m_hi] > hi[m_hi]) --m_hi;

        total += wk * reduce_phi();
        wk *= edt;
    }
    return (1.0 - edt) / lambda * total;
}

cplx first_passage_transform(const SignedLattice& lat, double lambda, double mu,
                             double x0, double a, Backend backend) {
    const long long K = horizon_steps(lat, lambda);
    const int P = lat.points, R = lat.radius;
    const int i0 = snap_index(lat, x0);
    // First grid index inside the absorbing set [a, infinity); grid points
    // within 1e-9 of a count as on the barrier.
    int ia = static_cast<int>(std::ceil((a - lat.grid_min) / lat.h - 1e-9));
    if (ia < 0) ia = 0;
    if (ia >= P) throw invalid_query("barrier lies above the grid");
    if (i0 >= ia) throw invalid_query("start must lie strictly below the barrier");
    // Absorbed mass landing beyond the grid top is clipped.  The clipped
    // weights live >= (grid_max - a) / dt^{1/N} one-step spreads out in the
    // kernel tail; requiring 12 spreads of headroom keeps the clipped total
    // far below the oracle's own truncation error.
    const double spread = std::pow(lat.dt, 1.0 / lat.ps.N);
    if (lat.x(P - 1) - a < 12.0 * spread)
        throw grid_too_narrow("grid top must clear the barrier by 12 one-step spreads");

    std::vector<double> dp(P, 0.0), rc(P, 0.0);
    int lo = i0, hi = i0;
    dp[i0] = 1.0;
    std::vector<cplx> eip(P);
    for (int i = ia; i < P; ++i) eip[i] = std::exp(cplx{0.0, mu * lat.x(i)});

    cplx acc{0.0, 0.0};
    const double edt = std::exp(-lambda * lat.dt);
    double wk = edt; // e^{-lambda t_{k+1}} for the step landing at t_{k+1}
    for (long long k = 0; k < K; ++k) {
        const int out_lo = std::max(0, lo - R);
        const int out_hi = std::min(P - 1, hi + R);
        const int cur_lo = lo, cur_hi = hi;
        parallel_for(backend, static_cast<long long>(out_hi - out_lo + 1), [&](long long ii) {
            const int ip = out_lo + static_cast<int>(ii);
            double s = 0.0;
            const int dlo = std::max(-R, ip - cur_hi);
            const int dhi = std::min(R, ip - cur_lo);
            for (int d = dlo; d <= dhi; ++d) s += lat.weights[d + R] * dp[ip - d];
            rc[ip] = s;
        });
        // Everything landing at or above the barrier is absorbed now, at the
        // monitoring time t_{k+1} (ascending order keeps bytes stable).
        cplx hit{0.0, 0.0};
        for (int ip = std::max(ia, out_lo); ip <= out_hi; ++ip) hit += rc[ip] * eip[ip];
        acc += wk * hit;
        wk *= edt;

        int nlo = out_lo, nhi = std::min(out_hi, ia - 1);
        if (nlo > nhi) break;
        double gmax = 0.0;
        for (int i = nlo; i <= nhi; ++i) gmax = std::max(gmax, std::abs(rc[i]));
        if (gmax == 0.0) break;
        const double thr = kPruneRel * gmax;
        while (nlo <= nhi && std::abs(rc[nlo]) < thr) ++nlo;
        while (nhi >= nlo && std::abs(rc[nhi]) < thr) --nhi;
        for (int i = nlo; i <= nhi; ++i) dp[i] = rc[i];
        lo = nlo;
        hi = nhi;
    }
    return acc;
}

double spitzer_residual(const SignedIncrementDist& d, double mu, double nu, int K) {
    const std::size_t atoms = d.atom.size();
    if (atoms == 0 || d.weight.size() != atoms)
        throw invalid_query("step law needs matching, non-empty atoms and weights");
    if (K < 1 || std::pow(static_cast<double>(atoms), K) > 2e7)
        throw invalid_query("series order too large for exhaustive path enumeration");
    if (nu < 0.0) throw invalid_query("needs nu >= 0");
    double mass = 0.0;
    for (double w : d.weight) mass += w;
    if (std::abs(mass - 1.0) > 1e-12)
        throw invalid_query("signed step law must have total mass one");

    // Left side L_k = E[e^{i mu S_k - nu max(0, S_1..S_k)}] and the one-step
    // marginals r_k = E[e^{i mu S_k - nu max(S_k, 0)}], both by exhaustive
    // enumeration of the atoms^K signed paths.
    std::vector<cplx> L(K + 1, cplx{0.0, 0.0}), r(K + 1, cplx{0.0, 0.0});
    L[0] = 1.0;
    const cplx imu{0.0, mu};
    std::function<void(int, double, double, double)> dfs = [&](int depth, double S,
                                                               double runmax, double w) {
        for (std::size_t t = 0; t < atoms; ++t) {
            const double S2 = S + d.atom[t];
            const double M2 = std::max(runmax, S2);
            const double w2 = w * d.weight[t];
            L[depth + 1] += w2 * std::exp(imu * S2 - nu * M2);
            r[depth + 1] += w2 * std::exp(imu * S2 - nu * std::max(S2, 0.0));
            if (depth + 1 < K) dfs(depth + 1, S2, M2, w2);
        }
    };
    dfs(0, 0.0, 0.0, 1.0);

    // Right side: exp of the series sum_k r_k z^k / k, expanded by the
    // standard recurrence m h_m = sum_{j=1}^{m} r_j h_{m-j}.
    std::vector<cplx> h(K + 1, cplx{0.0, 0.0});
    h[0] = 1.0;
    for (int m = 1; m <= K; ++m) {
        cplx s{0.0, 0.0};
        for (int j = 1; j <= m; ++j) s += r[j] * h[m - j];
        h[m] = s / static_cast<double>(m);
    }
    double res = 0.0;
    for (int k = 0; k <= K; ++k) res = std::max(res, std::abs(L[k] - h[k]));
    return res;
}

} // namespace pseudoheat

#include "pseudoheat/verify.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "pseudoheat/extrema.hpp"
#include "pseudoheat/hitting.hpp"
#include "pseudoheat/kernel.hpp"
#include "pseudoheat/roots.hpp"

namespace pseudoheat {

namespace {

/// Reassembling the multipole amplitudes with (-i mu)^q weights must
/// reproduce the full crossing transform exactly (it is the same product,
/// expanded).
double reassembly_residual(const RootSystem& rs, Crossing dir, cplx lambda, double mu,
                           double x, double a) {
    const int card = dir == Crossing::upward ? rs.cardJ() : rs.cardK();
    cplx sum{0.0, 0.0}, pw{1.0, 0.0};
    const cplx mim{0.0, -mu};
    for (int q = 0; q < card; ++q) {
        sum += pw * multipole_lt(rs, dir, q, lambda, x, a);
        pw *= mim;
    }
    sum *= std::exp(cplx{0.0, mu * a});
    return std::abs(sum - lft_hitting(rs, dir, lambda, mu, x, a));
}

} // namespace

std::vector<CheckResult> verify_all(const ParamSet& ps, unsigned seed) {
    const RootSystem rs = build_root_system(ps);
    std::mt19937 rng(seed);
    auto uni = [&](double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(rng);
    };

    std::vector<CheckResult> out;
    auto push = [&](const std::string& name, double residual, double tol) {
        out.push_back({name, residual, tol, residual <= tol});
    };

    // 1. Algebraic identity battery on the root system itself.
    for (const auto& [name, res] : identity_report(rs).residuals)
        push("identity/" + name, res, 1e-10);

    // 2. Potential branch matching at xi = 0: evaluating at -1e-300 selects
    //    the negative-side formula while its exponentials still evaluate at
    //    exactly xi = 0, so this compares the two branch formulas head on.
    for (double lambda : {0.4, 1.7}) {
        push("potential/phi-branch-match",
             std::abs(potential_phi(ps, lambda, 0.0) -
                      potential_phi(ps, lambda, -1e-300)),
             1e-12);
        push("potential/psi-branch-match",
             std::abs(potential_psi(ps, lambda, 0.0) -
                      potential_psi(ps, lambda, -1e-300)),
             1e-12);
    }

    // 3. Free resolvent: the extremum transform at nu = 0 must collapse to
    //    e^{i mu x} / (lambda - kappa (i mu)^N).
    for (int rep = 0; rep < 3; ++rep) {
        const double lambda = uni(0.3, 3.0), mu = uni(-2.0, 2.0), x = uni(-1.0, 1.0);
        const cplx free = std::exp(cplx{0.0, mu * x}) /
                          (lambda - static_cast<double>(rs.kappa) *
                                        std::pow(cplx{0.0, mu}, rs.N));
        push("extrema/free-resolvent",
             std::abs(lft_extrema(rs, lambda, mu, 0.0, x, Extremum::maximum) - free),
             1e-12);
    }

    // 4. Maximum/minimum duality for the symmetric (even N) kernel.
    if (ps.N % 2 == 0) {
        for (int rep = 0; rep < 3; ++rep) {
            const double lambda = uni(0.3, 3.0);
            const double x = uni(-1.0, 1.0), y = uni(-1.0, 1.0);
            const double z = std::max(x, y) + uni(0.05, 1.5);
            const cplx mx = dist_func_lt(rs, lambda, x, y, z, Extremum::maximum);
            const cplx mn = dist_func_lt(rs, lambda, -x, -y, -z, Extremum::minimum);
            push("extrema/max-min-duality", std::abs(mx - mn), 1e-12);
        }
    }

    // 5. Multipole reassembly against the full crossing transform.
    for (int rep = 0; rep < 3; ++rep) {
        const cplx lambda{uni(0.3, 3.0), uni(-0.5, 0.5)};
        const double mu = uni(-2.0, 2.0), a = uni(-0.5, 0.5), off = uni(0.1, 2.0);
        push("hitting/multipole-reassembly-up",
             reassembly_residual(rs, Crossing::upward, lambda, mu, a - off, a), 1e-11);
        push("hitting/multipole-reassembly-down",
             reassembly_residual(rs, Crossing::downward, lambda, mu, a + off, a), 1e-11);
    }

    // 6. Strong-Markov factorization of the free resolvent at the crossing.
    for (int rep = 0; rep < 2; ++rep) {
        const double lambda = uni(0.4, 2.5), mu = uni(-1.5, 1.5), a = uni(-0.5, 0.5);
        const double off = uni(0.2, 1.5);
        push("hitting/strong-markov-up",
             strong_markov_residual(rs, Crossing::upward, lambda, mu, a - off, a), 1e-8);
        push("hitting/strong-markov-down",
             strong_markov_residual(rs, Crossing::downward, lambda, mu, a + off, a),
             1e-8);
    }

    // 7. Boundary-value characterizations, analytic derivatives.
    {
        const double lambda = uni(0.5, 2.0), mu = uni(-1.0, 1.0), a = uni(-0.5, 0.5);
        push("hitting/bvp-up", bvp_residual_hitting(rs, Crossing::upward, lambda, mu, a),
             1e-9);
        push("hitting/bvp-down",
             bvp_residual_hitting(rs, Crossing::downward, lambda, mu, a), 1e-9);
        const double y = uni(-1.0, 0.0), z = y + uni(0.3, 1.5);
        push("extrema/bvp-dist", bvp_residual_dist(rs, lambda, y, z), 1e-9);
    }

    // 8. Small-lambda limit of the crossing transform against the
    //    crossing-place Fourier transform (error ~ lambda^{1/N}).
    {
        const double lambda = 1e-8, mu = 0.3, a = 0.25, off = 0.05;
        push("hitting/place-limit-up",
             std::abs(lft_hitting(rs, Crossing::upward, lambda, mu, a - off, a) -
                      ft_hitting_place(rs, Crossing::upward, mu, a - off, a)),
             1e-4);
        push("hitting/place-limit-down",
             std::abs(lft_hitting(rs, Crossing::downward, lambda, mu, a + off, a) -
                      ft_hitting_place(rs, Crossing::downward, mu, a + off, a)),
             1e-4);
    }

    return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

} // namespace pseudoheat

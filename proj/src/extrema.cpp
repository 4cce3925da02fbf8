#include "pseudoheat/extrema.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "exp_series.hpp"
#include "pseudoheat/errors.hpp"
#include "pseudoheat/hitting.hpp"
#include "pseudoheat/kernel.hpp"

namespace pseudoheat {

namespace {

using detail::ExpSeries;

cplx nth_root(cplx lambda, int N) { return std::pow(lambda, 1.0 / N); }

void require_max_admissible(double x, double y, double z) {
    if (z < x || z < y)
        throw invalid_query("maximum-side law needs z >= max(x, y)");
}

void require_min_admissible(double x, double y, double z) {
    if (z > x || z > y)
        throw invalid_query("minimum-side law needs z <= min(x, y)");
}

} // namespace

cplx phi_lambda(const RootSystem& rs, cplx lambda, double xi) {
    const cplx r = nth_root(lambda, rs.N);
    cplx s{0.0, 0.0};
    for (int j : rs.J) s += rs.theta[j] * rs.A[j] * std::exp(rs.theta[j] * r * xi);
    return r * s;
}

cplx psi_lambda(const RootSystem& rs, cplx lambda, double xi) {
    const cplx r = nth_root(lambda, rs.N);
    cplx s{0.0, 0.0};
    for (int k : rs.K) s += rs.theta[k] * rs.B[k] * std::exp(rs.theta[k] * r * xi);
    return -r * s;
}

cplx lft_extrema(const RootSystem& rs, cplx lambda, double mu, double nu, double x,
                 Extremum which) {
    if (nu < 0.0) throw invalid_query("extremum transform needs nu >= 0");
    const cplx r = nth_root(lambda, rs.N);
    const cplx imu{0.0, mu};
    cplx denom{1.0, 0.0};
    if (which == Extremum::maximum) {
        for (int j : rs.J) denom *= r - (imu - nu) * rs.theta[j];
        for (int k : rs.K) denom *= r - imu * rs.theta[k];
        return std::exp((imu - nu) * x) / denom;
    }
    for (int j : rs.J) denom *= r - imu * rs.theta[j];
    for (int k : rs.K) denom *= r - (imu + nu) * rs.theta[k];
    return std::exp((imu + nu) * x) / denom;
}

cplx joint_density_lt(const RootSystem& rs, cplx lambda, double x, double y, double z,
                      Extremum which) {
    if (which == Extremum::maximum) {
        require_max_admissible(x, y, z);
        return phi_lambda(rs, lambda, x - z) * psi_lambda(rs, lambda, z - y) / lambda;
    }
    require_min_admissible(x, y, z);
    return psi_lambda(rs, lambda, x - z) * phi_lambda(rs, lambda, z - y) / lambda;
}

cplx dist_func_tail_lt(const RootSystem& rs, cplx lambda, double x, double y, double z,
                       Extremum which) {
    const cplx r = nth_root(lambda, rs.N);
    cplx s{0.0, 0.0};
    if (which == Extremum::maximum) {
        require_max_admissible(x, y, z);
        for (int j : rs.J)
            for (int k : rs.K)
                s += rs.theta[j] * rs.A[j] * rs.B[k] / (rs.theta[j] - rs.theta[k]) *
                     std::exp(rs.theta[j] * r * (x - z) + rs.theta[k] * r * (z - y));
    } else {
        require_min_admissible(x, y, z);
        for (int j : rs.J)
            for (int k : rs.K)
                s += rs.A[j] * rs.theta[k] * rs.B[k] / (rs.theta[k] - rs.theta[j]) *
                     std::exp(rs.theta[j] * r * (z - y) + rs.theta[k] * r * (x - z));
    }
    return s / lambda;
}

cplx dist_func_lt(const RootSystem& rs, cplx lambda, double x, double y, double z,
                  Extremum which) {
    const cplx tail = dist_func_tail_lt(rs, lambda, x, y, z, which);
    const cplx psi = potential_psi_c(rs, lambda, x - y);
    if (which == Extremum::maximum) return psi - tail;
    return 1.0 / lambda - psi - tail;
}

quad::Result dist_func_time(const RootSystem& rs, double t, double x, double y, double z,
                            Extremum which, bool tail, const TalbotConfig& cfg) {
    auto F = [&](cplx s) {
        return tail ? dist_func_tail_lt(rs, s, x, y, z, which)
                    : dist_func_lt(rs, s, x, y, z, which);
    };
    return talbot_invert(F, t, cfg);
}

namespace {

constexpr double kPi = std::numbers::pi;

// --- Small-time treatment of the convolution blocks ---
//
// Each block below is a finite sum of ray integrals
//
//     Int_0^inf u^g e^{s_c u - tau u^N} du,
//
// and the Taylor terms of e^{-tau u^N} cancel identically between the rays,
// so near tau = 0+ only the stationary-point part survives:
//
//     ~ poly(w) e^{E_c w},  w = tau^{-1/(N-1)},  E_c = (N-1) (s_c/N)^{N/(N-1)},
//
// with Re E_c < 0: a decaying oscillation whose phase is linear in w. A grid
// uniform in tau aliases it completely (the amplitude can exceed the final
// answer by orders of magnitude); a grid uniform in w resolves it with a
// bounded number of samples per period.
struct HeadScales {
    double decay = 0.0; ///< slowest envelope rate:  min_c -Re E_c
    double phase = 0.0; ///< fastest phase rate:     max_c |Im E_c|
};

HeadScales head_scales(int N, const std::vector<cplx>& rays) {
    HeadScales hs{std::numeric_limits<double>::infinity(), 0.0};
    for (const cplx& s : rays) {
        // Scan the arg branches that can host a stationary point with
        // Re u* >= 0 and fold each into a conservative envelope.
        const double base = std::arg(s);
        for (double a : {base, base + 2.0 * kPi, base - 2.0 * kPi}) {
            if (std::abs(a) > kPi * (1.0 + 1.0 / N) + 1e-12) continue;
            if (std::cos(a / (N - 1)) < -1e-9) continue;
            const cplx E = (N - 1.0) * std::pow(std::abs(s) / N, N / (N - 1.0)) *
                           std::polar(1.0, a * N / (N - 1.0));
            if (!(E.real() < 0.0))
                throw invalid_query("oscillatory block does not decay for these offsets");
            hs.decay = std::min(hs.decay, -E.real());
            hs.phase = std::max(hs.phase, std::abs(E.imag()));
        }
    }
    if (!std::isfinite(hs.decay))
        throw invalid_query("no decaying stationary point for an oscillatory block");
    return hs;
}

// A time profile tabulated in two matched pieces: a cubic spline in
// w = tau^{-1/(N-1)} over the oscillatory head (0, delta] and a cubic spline
// in tau over the bulk [delta, t]. delta is chosen so the bulk grid resolves
// the local phase with ~0.15 rad per sample; the head grid keeps the same
// margin per sample in w, where the phase is linear.
class TwoPieceProfile {
  public:
    TwoPieceProfile(const std::function<cplx(double)>& f, double t, int N,
                    const HeadScales& hs)
        : N_(N), rate_(std::max(hs.phase, 0.5 * hs.decay)) {
        int n_bulk = 1537;
        double dg = t / (n_bulk - 1);
        auto resolvable = [&](double step) {
            return std::pow(0.04 * (N - 1) / (rate_ * step), 1.0 / N);
        };
        double w_lo = resolvable(dg);
        const double w_cap = std::pow(t / 4.0, -1.0 / (N - 1.0)); // delta <= t/4
        if (w_lo < w_cap) {
            // The pieces must meet no later than t/4; refine the bulk grid
            // until the phase there is resolved.
            dg = 0.04 * (N - 1) / (rate_ * std::pow(w_cap, static_cast<double>(N)));
            n_bulk = std::min(20001, static_cast<int>(t / dg) + 2);
            w_lo = std::max(resolvable(t / (n_bulk - 1)),
                            std::pow(t / 2.2, -1.0 / (N - 1.0)));
        }

        // Natural-spline boundary layers are O(h^2); pad each grid a few
        // samples beyond the integration range so the layers sit outside it.
        constexpr int kPad = 4;

        w_hi_ = 42.0 / hs.decay; // envelope e^{-42}: treat as dead beyond
        if (w_lo >= w_hi_) {
            // The bulk grid resolves everything down to the dead zone.
            delta_ = std::pow(w_hi_, -(N - 1.0));
        } else {
            w_lo_ = w_lo;
            delta_ = std::pow(w_lo, -(N - 1.0));
            double dw = std::min(0.05 / rate_, 0.01 * w_lo);
            int n_head = static_cast<int>((w_hi_ - w_lo) / dw) + 2;
            if (n_head > 6001) n_head = 6001;
            dw = (w_hi_ - w_lo) / (n_head - 1);
            const double w0 = w_lo - kPad * dw; // still > 0.9 w_lo > 0
            std::vector<cplx> vals(n_head + 2 * kPad);
            for (int i = 0; i < static_cast<int>(vals.size()); ++i)
                vals[i] = f(std::pow(w0 + i * dw, -(N - 1.0)));
            head_ = quad::CSpline(w0, dw, vals);
            tab_evals_ += static_cast<long long>(vals.size());
        }

        const double dx = (t - delta_) / (n_bulk - 1);
        const int lo_pad = std::min(kPad, static_cast<int>(delta_ / dx));
        const double x0 = delta_ - lo_pad * dx;
        std::vector<cplx> vals(n_bulk + lo_pad + kPad);
        for (int i = 0; i < static_cast<int>(vals.size()); ++i)
            vals[i] = f(x0 + i * dx);
        bulk_ = quad::CSpline(x0, dx, vals);
        tab_evals_ += static_cast<long long>(vals.size());
        n_bulk_ = n_bulk;
    }

    double delta() const { return delta_; }
    int bulk_samples() const { return n_bulk_; }
    long long tabulation_evaluations() const { return tab_evals_; }
    cplx bulk(double tau) const { return bulk_(tau); } // valid on [delta, t]

    /// Int_0^delta profile(tau) g(tau) dtau, g smooth on the bulk scale.
    quad::CResult head_integral(const std::function<cplx(double)>& g) const {
        if (w_lo_ == 0.0) return {};
        const double width = std::min(3.0 / rate_, 0.5 * w_lo_);
        const int panels = std::min(
            4000, static_cast<int>((w_hi_ - w_lo_) / width) + 1);
        auto integrand = [&](double w) {
            const double tau = std::pow(w, -(N_ - 1.0));
            return head_(w) * g(tau) * (N_ - 1.0) * std::pow(w, -static_cast<double>(N_));
        };
        return quad::integrate_c(integrand, w_lo_, w_hi_, panels);
    }

  private:
    int N_ = 0, n_bulk_ = 0;
    double rate_ = 0.0, delta_ = 0.0, w_lo_ = 0.0, w_hi_ = 0.0;
    quad::CSpline bulk_, head_;
    long long tab_evals_ = 0;
};

} // namespace

quad::Result dist_tail_time_repr(const RootSystem& rs, double t, double x, double y,
                                 double z) {
    if (!(t > 0.0)) throw invalid_query("time must be positive");
    if (!(x < z) || !(y < z))
        throw invalid_query("kernel representation needs x < z and y < z");
    if (rs.N % 2 != 0)
        throw invalid_query("kernel representation is implemented for even N only");
    const ParamSet ps{rs.N, rs.kappa};
    const int N = rs.N, nJ = rs.cardJ(), nK = rs.cardK();
    const double xi_p = x - z, xi_b = z - y;

    // Absorbing the weight (t-s)^{(m+1)/N - 1} of the underlying double
    // integral into the crossing block by Laplace convolution
    // (lambda^{-(m+1)/N} e^{theta_k r xi} inverts to I_{k,m+1}, and the
    // Gamma((m+1)/N) factors cancel) collapses each block to a single
    // convolution:
    //
    //   P_x{X <= y <= z <= M} = sum_{k in K} sum_{m=0}^{#J-1}
    //       N B_k [sum_J A_j alpha[j][m] / (theta_j - theta_k)]
    //       Int_0^t p^{(m)}(sigma; x-z) I_{k,m+1}(t - sigma; z-y) dsigma.
    const HeadScales hs_p =
        head_scales(N, {cplx{0.0, xi_p}, cplx{0.0, -xi_p}});
    std::vector<TwoPieceProfile> pm; // p^{(m)}(.; x-z), m = 0..nJ-1
    pm.reserve(nJ);
    for (int m = 0; m < nJ; ++m)
        pm.emplace_back(
            [&](double tau) { return cplx{kernel_derivative(ps, m, tau, xi_p), 0.0}; },
            t, N, hs_p);

    std::vector<std::vector<TwoPieceProfile>> blk(nK); // [ki][m] = I_{k,m+1}
    for (int ki = 0; ki < nK; ++ki) {
        const int k = rs.K[ki];
        const HeadScales hs_b =
            head_scales(N, {rs.theta[k] * std::polar(1.0, kPi / N) * xi_b,
                            rs.theta[k] * std::polar(1.0, -kPi / N) * xi_b});
        blk[ki].reserve(nJ);
        for (int m = 0; m < nJ; ++m)
            blk[ki].emplace_back(
                [&](double tau) { return Ilq(rs, k, m + 1, tau, xi_b); }, t, N, hs_b);
    }

    cplx total{0.0, 0.0};
    double err = 0.0;
    long long evals = 0;
    for (const auto& p : pm) evals += p.tabulation_evaluations();
    for (const auto& row : blk)
        for (const auto& b : row) evals += b.tabulation_evaluations();

    for (int ki = 0; ki < nK; ++ki) {
        const int k = rs.K[ki];
        for (int m = 0; m < nJ; ++m) {
            cplx coef{0.0, 0.0};
            for (int j : rs.J)
                coef += rs.A[j] * rs.alpha[j][m] / (rs.theta[j] - rs.theta[k]);
            coef *= static_cast<double>(N) * rs.B[k];

            const TwoPieceProfile& P = pm[m];
            const TwoPieceProfile& B = blk[ki][m];
            const auto head_p = P.head_integral([&](double s) { return B.bulk(t - s); });
            const auto head_b = B.head_integral([&](double s) { return P.bulk(t - s); });
            quad::CResult mid;
            const double lo = P.delta(), hi = t - B.delta();
            if (hi > lo) {
                const int panels =
                    std::max(64, std::max(P.bulk_samples(), B.bulk_samples()) / 4);
                mid = quad::integrate_c(
                    [&](double s) { return P.bulk(s) * B.bulk(t - s); }, lo, hi, panels);
            }
            total += coef * (head_p.value + mid.value + head_b.value);
            err += std::abs(coef) *
                   (head_p.error + mid.error + head_b.error +
                    5e-7 * (std::abs(head_p.value) + std::abs(mid.value) +
                            std::abs(head_b.value)));
            evals += head_p.evaluations + mid.evaluations + head_b.evaluations;
        }
    }
    return {total.real(), err + std::abs(total.imag()), evals};
}

double bvp_residual_dist(const RootSystem& rs, double lambda, double y, double z) {
    if (!(lambda > 0.0)) throw invalid_query("boundary-value check needs lambda > 0");
    if (!(y < z)) throw invalid_query("boundary-value check needs y < z");
    const double r = std::pow(lambda, 1.0 / rs.N);
    const double kap = rs.kappa;
    const int N = rs.N;

    // Shared tail terms of F(x) = LT P_x{X <= y, M <= z} (their rates live on
    // J, so they appear on both sides of y); the potential part switches
    // branch across x = y.
    ExpSeries below; // x < y
    ExpSeries mid;   // y < x < z
    below.constant = 1.0 / lambda;
    for (int j : rs.J) {
        for (int k : rs.K) {
            const cplx c = -rs.theta[j] * rs.A[j] * rs.B[k] /
                           (rs.theta[j] - rs.theta[k]) / lambda *
                           std::exp(rs.theta[k] * r * (z - y) - rs.theta[j] * r * z);
            below.add(c, rs.theta[j] * r);
            mid.add(c, rs.theta[j] * r);
        }
        below.add(-std::exp(-rs.theta[j] * r * y) / (static_cast<double>(N) * lambda),
                  rs.theta[j] * r);
    }
    for (int k : rs.K)
        mid.add(std::exp(-rs.theta[k] * r * y) / (static_cast<double>(N) * lambda),
                rs.theta[k] * r);

    double res = 0.0;
    auto track = [&](double v) { res = std::max(res, v); };

    // Interior equation kappa F^(N) = lambda F - 1_{x<y} on both branches.
    for (double x : {y - 1.31, y - 0.57, y - 0.11}) {
        track(std::abs(kap * below.deriv(N, x) - lambda * below.deriv(0, x) + 1.0));
        track(std::abs(below.deriv(0, x).imag()));
    }
    for (double f : {0.19, 0.52, 0.87}) {
        const double x = y + f * (z - y);
        track(std::abs(kap * mid.deriv(N, x) - lambda * mid.deriv(0, x)));
        track(std::abs(mid.deriv(0, x).imag()));
    }
    // Vanishing at the barrier: F^(l)(z^-) = 0 for l = 0..#J-1.
    for (int l = 0; l < rs.cardJ(); ++l) track(std::abs(mid.deriv(l, z)));
    // Smooth fit at y to order N-1, with the prescribed N-th derivative jump.
    for (int l = 0; l < N; ++l)
        track(std::abs(below.deriv(l, y) - mid.deriv(l, y)));
    track(std::abs(kap * (mid.deriv(N, y) - below.deriv(N, y)) - 1.0));
    // Far-field limit F -> 1/lambda as x -> -infinity.
    double min_re = 1.0;
    for (int j : rs.J) min_re = std::min(min_re, rs.theta[j].real());
    const double x_far = y - 40.0 / (r * min_re);
    track(std::abs(below.deriv(0, x_far) - 1.0 / lambda));
    return res;
}

} // namespace pseudoheat

#include "pseudoheat/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace pseudoheat {

namespace {

constexpr double kPi = std::numbers::pi;

// Scaled kernel derivative at t = 1: d^m/dv^m p(1; v), for even N.
double phat_even(int N, int m, double v) {
    auto f = [N, m, v](double u) {
        return std::pow(u, m) * std::exp(-std::pow(u, N)) * std::cos(v * u + m * kPi / 2.0);
    };
    return quad::decaying_quad(f, 1.0, N, std::abs(v)).value / kPi;
}

// Scaled kernel derivative at t = 1 for N = 3, kappa = +1, via the contour
// rotated by -pi/6: p(1; v) = (1/pi) Re[ e^{-i pi/6} Int_0^inf
// w^m e^{i m pi/3} exp(-w^3 + v e^{i pi/3} w) dw ].
double phat_cubic(int m, double v) {
    const quad::cplx rot = std::polar(1.0, kPi / 3.0);
    const quad::cplx pre = std::polar(1.0, -kPi / 6.0 + m * kPi / 3.0);
    auto f = [m, v, rot](double w) {
        return std::pow(w, m) * std::exp(-w * w * w + v * rot * w);
    };
    const double growth = std::max(0.0, 0.5 * v);
    const double osc = std::abs(v) * std::sin(kPi / 3.0);
    return (pre * quad::decaying_quad_c(f, 1.0, 3, osc, growth).value).real() / kPi;
}

double scaled_derivative(const ParamSet& ps, int m, double v) {
    if (ps.N % 2 == 0) return phat_even(ps.N, m, v);
    if (ps.N == 3) {
        if (ps.kappa == 1) return phat_cubic(m, v);
        const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        return sgn * phat_cubic(m, -v);
    }
    throw unsupported("time-domain kernel implemented only for even N and N = 3");
}

// Deterministic envelope scan: the smallest v on the grid step*1, step*2, ...
// past which |p(1; .)| stays below 1e-15 for three consecutive samples.
double kernel_support(const ParamSet& ps) {
    const double step = 1.0;
    int quiet = 0;
    double v = 0.0;
    for (int i = 1; i <= 400; ++i) {
        v = step * i;
        if (std::abs(scaled_derivative(ps, 0, v)) < 1e-15) {
            if (++quiet == 3) return v;
        } else {
            quiet = 0;
        }
    }
    return v;
}

} // namespace

double heat_kernel(const ParamSet& ps, double t, double xi) {
    if (!(t > 0.0)) throw invalid_query("heat_kernel requires t > 0");
    const double s = std::pow(t, -1.0 / ps.N);
    return s * scaled_derivative(ps, 0, xi * s);
}

double kernel_derivative(const ParamSet& ps, int m, double t, double xi) {
    if (!(t > 0.0)) throw invalid_query("kernel_derivative requires t > 0");
    if (m < 0) throw invalid_query("derivative order must be >= 0");
    const double s = std::pow(t, -1.0 / ps.N);
    return std::pow(s, m + 1) * scaled_derivative(ps, m, xi * s);
}

double rho(const ParamSet& ps) {
    if (ps.N % 2 != 0)
        throw not_absolutely_convergent("the kernel is not absolutely integrable for odd N");
    const double X = kernel_support(ps);
    auto p = [&ps](double v) { return scaled_derivative(ps, 0, v); };

    // Locate sign changes on a fixed scan grid, refine by bisection, then
    // integrate |p| piecewise between consecutive zeros (p is smooth there).
    std::vector<double> cuts{0.0};
    const double h = 0.05;
    double prev = p(0.0);
    for (double v = h; v <= X + h; v += h) {
        const double cur = p(v);
        if (prev != 0.0 && cur != 0.0 && (prev > 0) != (cur > 0)) {
            double lo = v - h, hi = v, flo = prev;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = p(mid);
                if ((fm > 0) == (flo > 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            cuts.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    cuts.push_back(X);

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] <= cuts[i]) continue;
        total += std::abs(quad::integrate(p, cuts[i], cuts[i + 1], 16).value);
    }
    return 2.0 * total; // even symmetry in xi
}

double moment(const ParamSet& ps, int p, double t) {
    if (!(t > 0.0)) throw invalid_query("moment requires t > 0");
    if (p < 0 || p > ps.N)
        throw invalid_query("moment order must lie in [0, N]");
    if (p == 0) return 1.0;
    if (p < ps.N) return 0.0;
    double fact = 1.0;
    for (int i = 2; i <= ps.N; ++i) fact *= i;
    return ps.kappa * fact * t;
}

quad::Result moment_quadrature(const ParamSet& ps, int p, double t) {
    if (ps.N % 2 != 0)
        throw not_absolutely_convergent("kernel moments require an absolutely integrable kernel");
    if (!(t > 0.0) || p < 0) throw invalid_query("moment_quadrature needs t > 0, p >= 0");
    // Work on the scaled kernel: Int xi^p p(t; xi) dxi = t^{p/N} Int v^p p(1; v) dv.
    const double X = kernel_support(ps);
    auto f = [&ps, p](double v) { return std::pow(v, p) * scaled_derivative(ps, 0, v); };
    // Symmetric interval, fine uniform panels; the integrand is smooth.
    quad::Result r = quad::integrate(f, -X, X, std::max(64, int(8 * X)));
    r.value *= std::pow(t, double(p) / ps.N);
    r.error *= std::pow(t, double(p) / ps.N);
    return r;
}

namespace {

cplx potential_phi_impl(const RootSystem& rs, cplx lambda, double xi) {
    const int N = rs.N;
    const cplx root = std::pow(lambda, 1.0 / N);
    const cplx pre = std::pow(lambda, 1.0 / N - 1.0) / double(N);
    cplx s = 0.0;
    if (xi >= 0.0) {
        for (int k : rs.K) s -= rs.theta[k] * std::exp(rs.theta[k] * root * xi);
    } else {
        for (int j : rs.J) s += rs.theta[j] * std::exp(rs.theta[j] * root * xi);
    }
    return pre * s;
}

cplx potential_psi_impl(const RootSystem& rs, cplx lambda, double xi) {
    const int N = rs.N;
    const cplx root = std::pow(lambda, 1.0 / N);
    if (xi >= 0.0) {
        cplx s = 0.0;
        for (int k : rs.K) s += std::exp(rs.theta[k] * root * xi);
        return s / (double(N) * lambda);
    }
    cplx s = 0.0;
    for (int j : rs.J) s += std::exp(rs.theta[j] * root * xi);
    return (1.0 - s / double(N)) / lambda;
}

} // namespace

cplx potential_phi_c(const RootSystem& rs, cplx lambda, double xi) {
    return potential_phi_impl(rs, lambda, xi);
}

cplx potential_psi_c(const RootSystem& rs, cplx lambda, double xi) {
    return potential_psi_impl(rs, lambda, xi);
}

double potential_phi(const ParamSet& ps, double lambda, double xi) {
    if (!(lambda > 0.0)) throw invalid_query("potential_phi requires lambda > 0");
    return potential_phi_impl(build_root_system(ps), cplx(lambda, 0.0), xi).real();
}

double potential_psi(const ParamSet& ps, double lambda, double xi) {
    if (!(lambda > 0.0)) throw invalid_query("potential_psi requires lambda > 0");
    return potential_psi_impl(build_root_system(ps), cplx(lambda, 0.0), xi).real();
}

} // namespace pseudoheat

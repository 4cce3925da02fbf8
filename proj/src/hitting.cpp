#include "pseudoheat/hitting.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>

#include "exp_series.hpp"
#include "pseudoheat/errors.hpp"

namespace pseudoheat {

namespace {

constexpr double kPi = std::numbers::pi;

cplx nth_root(cplx lambda, int N) { return std::pow(lambda, 1.0 / N); }

const std::vector<int>& own_set(const RootSystem& rs, Crossing dir) {
    return dir == Crossing::upward ? rs.J : rs.K;
}
const std::vector<cplx>& own_coef(const RootSystem& rs, Crossing dir) {
    return dir == Crossing::upward ? rs.A : rs.B;
}
const std::vector<std::vector<cplx>>& own_sym(const RootSystem& rs, Crossing dir) {
    return dir == Crossing::upward ? rs.c : rs.d;
}
int own_card(const RootSystem& rs, Crossing dir) {
    return dir == Crossing::upward ? rs.cardJ() : rs.cardK();
}

void require_side(Crossing dir, double x, double a) {
    if (dir == Crossing::upward && x > a)
        throw invalid_query("upward crossing needs a start x <= a");
    if (dir == Crossing::downward && x < a)
        throw invalid_query("downward crossing needs a start x >= a");
}

void require_order(const RootSystem& rs, Crossing dir, int q) {
    if (q < 0 || q >= own_card(rs, dir))
        throw invalid_query("multipole order exceeds the crossing-set size");
}

/// Offset sign for the time-domain profiles: upward looks at xi = x - a < 0,
/// downward at xi > 0.
void require_offset(Crossing dir, double xi) {
    if (dir == Crossing::upward && !(xi < 0.0))
        throw invalid_query("upward profile needs xi = x - a < 0");
    if (dir == Crossing::downward && !(xi > 0.0))
        throw invalid_query("downward profile needs xi = x - a > 0");
}

double factorial(int n) { return std::tgamma(n + 1.0); }

} // namespace

cplx lft_hitting(const RootSystem& rs, Crossing dir, cplx lambda, double mu, double x,
                 double a) {
    require_side(dir, x, a);
    const cplx r = nth_root(lambda, rs.N);
    const cplx w = cplx{0.0, mu} / r;
    const auto& set = own_set(rs, dir);
    const auto& coef = own_coef(rs, dir);
    cplx sum{0.0, 0.0};
    for (int j : set) {
        cplx prod{1.0, 0.0};
        for (int l : set)
            if (l != j) prod *= 1.0 - w * std::conj(rs.theta[l]);
        sum += coef[j] * prod * std::exp(rs.theta[j] * r * (x - a));
    }
    return std::exp(cplx{0.0, mu * a}) * sum;
}

cplx multipole_lt(const RootSystem& rs, Crossing dir, int q, cplx lambda, double x,
                  double a) {
    require_side(dir, x, a);
    require_order(rs, dir, q);
    const cplx r = nth_root(lambda, rs.N);
    const auto& set = own_set(rs, dir);
    const auto& coef = own_coef(rs, dir);
    const auto& sym = own_sym(rs, dir);
    cplx sum{0.0, 0.0};
    for (int j : set)
        sum += std::conj(sym[j][q]) * coef[j] * std::exp(rs.theta[j] * r * (x - a));
    return std::pow(lambda, -static_cast<double>(q) / rs.N) * sum;
}

cplx Ilq(const RootSystem& rs, int l, int q, double t, double xi) {
    if (!(t > 0.0)) throw invalid_query("time must be positive");
    if (l < 0 || l >= rs.N || q < 0 || q >= rs.N)
        throw invalid_query("root or order index out of range");
    const cplx th = rs.theta[l];
    if (!((th * xi).real() < 0.0))
        throw invalid_query("contour block needs Re(theta_l xi) < 0");
    const int N = rs.N;

    // Bromwich contour folded onto the rays arg(lambda) = +-pi; on each ray
    // lambda = u^N picks up the phase e^{+-i pi / N} inside the exponential
    // and e^{-+i pi q / N} in front, leaving e^{-t u^N} damping:
    //   I = (N i / 2 pi) [ e^{-i pi q/N} H(+) - e^{+i pi q/N} H(-) ],
    //   H(s) = Int_0^inf u^{N-q-1} e^{-t u^N + theta_l e^{s i pi/N} xi u} du.
    auto half = [&](int sgn) {
        const cplx slope = th * std::polar(1.0, sgn * kPi / N) * xi;
        const double growth = std::max(0.0, slope.real());
        const double osc = std::abs(slope.imag());
        auto f = [&](double u) {
            return std::pow(u, static_cast<double>(N - q - 1)) *
                   std::exp(-t * std::pow(u, static_cast<double>(N)) + slope * u);
        };
        return quad::decaying_quad_c(f, t, N, osc, growth).value;
    };
    const cplx pre = cplx{0.0, static_cast<double>(N)} / (2.0 * kPi);
    return pre * (std::polar(1.0, -kPi * q / N) * half(+1) -
                  std::polar(1.0, +kPi * q / N) * half(-1));
}

double time_profile(const RootSystem& rs, Crossing dir, int q, double t, double xi,
                    double* err_out) {
    if (!(t > 0.0)) throw invalid_query("time must be positive");
    require_order(rs, dir, q);
    require_offset(dir, xi);
    const int N = rs.N;
    const auto& set = own_set(rs, dir);
    const auto& coef = own_coef(rs, dir);
    const auto& sym = own_sym(rs, dir);

    // The two contour halves of each Ilq are complex conjugates after the
    // conjugation-symmetric sum over the crossing set, so the profile reduces
    // to a single real integral:
    //   profile = -(N / pi) Im[ e^{-i pi q/N}
    //       Int_0^inf (sum_j conj(sym[j][q]) coef_j e^{theta_j e^{i pi/N} xi u})
    //       u^{N-q-1} e^{-t u^N} du ].
    std::vector<cplx> w, slope;
    double growth = 0.0, osc = 0.0;
    for (int j : set) {
        w.push_back(std::conj(sym[j][q]) * coef[j]);
        slope.push_back(rs.theta[j] * std::polar(1.0, kPi / N) * xi);
        growth = std::max(growth, slope.back().real());
        osc = std::max(osc, std::abs(slope.back().imag()));
    }
    auto f = [&](double u) {
        cplx s{0.0, 0.0};
        for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * std::exp(slope[i] * u);
        return s * std::pow(u, static_cast<double>(N - q - 1)) *
               std::exp(-t * std::pow(u, static_cast<double>(N)));
    };
    const quad::CResult integral = quad::decaying_quad_c(f, t, N, osc, growth);
    if (err_out) *err_out = (N / kPi) * integral.error;
    return -(N / kPi) * (std::polar(1.0, -kPi * q / N) * integral.value).imag();
}

std::vector<double> time_profile_grid(const RootSystem& rs, Crossing dir, int q, double t,
                                      const std::vector<double>& xi, Backend backend) {
    std::vector<double> out(xi.size(), 0.0);
    std::atomic<bool> failed{false};
    std::exception_ptr eptr;
    parallel_for(backend, static_cast<long long>(xi.size()), [&](long long i) {
        if (failed.load(std::memory_order_relaxed)) return;
        try {
            out[static_cast<std::size_t>(i)] =
                time_profile(rs, dir, q, t, xi[static_cast<std::size_t>(i)]);
        } catch (...) {
            if (!failed.exchange(true)) eptr = std::current_exception();
        }
    });
    if (eptr) std::rethrow_exception(eptr);
    return out;
}

quad::Result integral_time_profile(const RootSystem& rs, Crossing dir, int q, double xi) {
    require_order(rs, dir, q);
    require_offset(dir, xi);
    const int N = rs.N;
    const auto& set = own_set(rs, dir);
    const auto& coef = own_coef(rs, dir);
    const auto& sym = own_sym(rs, dir);

    // Main part on [eps, T] with log-graded panels (the profile lives over
    // many decades in t), then the analytic large-T tail: expanding the
    // integrand of the profile in powers of u and integrating t over (T, inf)
    // termwise gives
    //   Int_T^inf profile dt = -(1/pi) sum_{p > q} Im[e^{i pi (p-q)/N} m_p]
    //       xi^p / p! Gamma((p-q)/N) T^{-(p-q)/N},
    //   m_p = sum_j conj(sym[j][q]) coef_j theta_j^p.
    // The p = q term is real (its coefficient is (-1)^q xi^q/q!), so the
    // series is finite term by term; twelve terms put the truncation error
    // far below the quadrature error.
    const double eps = 1e-6, T = 150.0;
    auto f = [&](double t) { return time_profile(rs, dir, q, t, xi); };
    auto main_part = quad::integrate_log(f, eps, T, 80);

    double tail = 0.0, last = 0.0;
    for (int p = q + 1; p <= q + 12; ++p) {
        cplx m_p{0.0, 0.0};
        for (int j : set)
            m_p += std::conj(sym[j][q]) * coef[j] * std::pow(rs.theta[j], p);
        last = -(1.0 / kPi) * (std::polar(1.0, kPi * (p - q) / N) * m_p).imag() *
               std::pow(xi, p) / factorial(p) * std::tgamma((p - q) / double(N)) *
               std::pow(T, -(p - q) / double(N));
        tail += last;
    }
    const double head_bound = eps * std::abs(f(eps));
    return {main_part.value + tail, main_part.error + std::abs(last) + head_bound,
            main_part.evaluations};
}

double hitting_place_weight(const RootSystem& rs, Crossing dir, int q, double x,
                            double a) {
    require_side(dir, x, a);
    require_order(rs, dir, q);
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(x - a, static_cast<double>(q)) / factorial(q);
}

cplx ft_hitting_place(const RootSystem& rs, Crossing dir, double mu, double x, double a) {
    require_side(dir, x, a);
    const int card = own_card(rs, dir);
    const cplx step = cplx{0.0, mu} * (x - a);
    cplx sum{0.0, 0.0}, pw{1.0, 0.0};
    for (int q = 0; q < card; ++q) {
        sum += pw / factorial(q);
        pw *= step;
    }
    return std::exp(cplx{0.0, mu * a}) * sum;
}

double strong_markov_residual(const RootSystem& rs, Crossing dir, double lambda,
                              double mu, double x, double a) {
    if (!(lambda > 0.0)) throw invalid_query("factorization check needs lambda > 0");
    require_side(dir, x, a);
    const double r = std::pow(lambda, 1.0 / rs.N);
    const cplx imu{0.0, mu};
    cplx near_side{0.0, 0.0}, far_side{0.0, 0.0};
    if (dir == Crossing::upward) {
        for (int j : rs.J)
            near_side += rs.theta[j] * rs.A[j] * std::exp(rs.theta[j] * r * (x - a)) /
                         (rs.theta[j] * r - imu);
        for (int k : rs.K)
            far_side += rs.theta[k] * rs.B[k] / (rs.theta[k] * r - imu);
    } else {
        for (int k : rs.K)
            near_side += rs.theta[k] * rs.B[k] * std::exp(rs.theta[k] * r * (x - a)) /
                         (rs.theta[k] * r - imu);
        for (int j : rs.J)
            far_side += rs.theta[j] * rs.A[j] / (rs.theta[j] * r - imu);
    }
    const cplx resolvent_cut =
        std::exp(imu * a) / lambda * (r * near_side) * (r * far_side);
    const cplx symbol = lambda - static_cast<double>(rs.kappa) * std::pow(imu, rs.N);
    return std::abs(symbol * resolvent_cut - lft_hitting(rs, dir, lambda, mu, x, a));
}

double bvp_residual_hitting(const RootSystem& rs, Crossing dir, double lambda, double mu,
                            double a) {
    if (!(lambda > 0.0)) throw invalid_query("boundary-value check needs lambda > 0");
    const int N = rs.N;
    const double r = std::pow(lambda, 1.0 / N);
    const cplx w = cplx{0.0, mu} / r;
    const auto& set = own_set(rs, dir);
    const auto& coef = own_coef(rs, dir);
    const cplx phase = std::exp(cplx{0.0, mu * a});

    detail::ExpSeries U;
    for (int j : set) {
        cplx prod{1.0, 0.0};
        for (int l : set)
            if (l != j) prod *= 1.0 - w * std::conj(rs.theta[l]);
        U.add(phase * coef[j] * prod * std::exp(-rs.theta[j] * r * a),
              rs.theta[j] * r);
    }

    double res = 0.0;
    auto track = [&](double v) { res = std::max(res, v); };
    // Interior equation kappa U^(N) = lambda U on the starting side.
    const double side = (dir == Crossing::upward) ? -1.0 : +1.0;
    for (double off : {0.37, 1.09, 2.21}) {
        const double x = a + side * off / r;
        track(std::abs(static_cast<double>(rs.kappa) * U.deriv(N, x) -
                       lambda * U.deriv(0, x)));
    }
    // Matching at the level: U^(l)(a) = (i mu)^l e^{i mu a} up to the
    // crossing-set cardinality.
    for (int l = 0; l < own_card(rs, dir); ++l)
        track(std::abs(U.deriv(l, a) - std::pow(cplx{0.0, mu}, l) * phase));
    return res;
}

} // namespace pseudoheat

#include "pseudoheat/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>

namespace pseudoheat::quad {

namespace {

constexpr double kPi = std::numbers::pi;
/// -log of the target envelope at the cutoff (~1e-18).
constexpr double kLogEps = 41.4;

std::atomic<long long> g_budget{std::numeric_limits<long long>::max()};

void charge(long long n) {
    if (g_budget.fetch_sub(n, std::memory_order_relaxed) - n < 0)
        throw budget_exceeded("quadrature evaluation budget exhausted");
}

struct GaussRule {
    std::vector<double> x, w; ///< nodes/weights on [-1, 1]
};

// Nodes by Newton iteration on the Legendre recurrence; standard and exact to
// machine precision for the small orders used here.
GaussRule make_rule(int n) {
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[i] = x;
        r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const GaussRule& rule8() {
    static const GaussRule r = make_rule(8);
    return r;
}
const GaussRule& rule16() {
    static const GaussRule r = make_rule(16);
    return r;
}

// One panel [a,b]: 16-point value plus |I16 - I8| error estimate.
template <class T, class F>
void panel(const F& f, double a, double b, T& value, double& error) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T i16{}, i8{};
    const GaussRule& r16 = rule16();
    const GaussRule& r8 = rule8();
    for (int i = 0; i < 16; ++i) i16 += T(r16.w[i] * h) * f(c + h * r16.x[i]);
    for (int i = 0; i < 8; ++i) i8 += T(r8.w[i] * h) * f(c + h * r8.x[i]);
    value += i16;
    error += std::abs(i16 - i8);
}

template <class T, class F>
void run_panels(const F& f, double a, double b, int panels, T& value, double& error,
                long long& evals) {
    panels = std::max(panels, 1);
    charge(24LL * panels);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) panel<T>(f, a + p * h, a + (p + 1) * h, value, error);
    evals += 24LL * panels;
}

} // namespace

void set_budget(long long n) {
    g_budget.store(n > 0 ? n : std::numeric_limits<long long>::max(),
                   std::memory_order_relaxed);
}

long long remaining_budget() { return g_budget.load(std::memory_order_relaxed); }

Result integrate(const std::function<double(double)>& f, double a, double b, int panels) {
    Result res;
    run_panels<double>(f, a, b, panels, res.value, res.error, res.evaluations);
    return res;
}

CResult integrate_c(const std::function<cplx(double)>& f, double a, double b, int panels) {
    CResult res;
    run_panels<cplx>(f, a, b, panels, res.value, res.error, res.evaluations);
    return res;
}

Result integrate_log(const std::function<double(double)>& f, double a, double b, int panels) {
    if (!(a > 0.0 && b > a)) throw invalid_query("integrate_log requires 0 < a < b");
    auto g = [&f](double s) {
        const double t = std::exp(s);
        return f(t) * t;
    };
    Result res;
    run_panels<double>(g, std::log(a), std::log(b), panels, res.value, res.error,
                       res.evaluations);
    return res;
}

CResult integrate_log_c(const std::function<cplx(double)>& f, double a, double b,
                        int panels) {
    if (!(a > 0.0 && b > a)) throw invalid_query("integrate_log requires 0 < a < b");
    auto g = [&f](double s) {
        const double t = std::exp(s);
        return f(t) * t;
    };
    CResult res;
    run_panels<cplx>(g, std::log(a), std::log(b), panels, res.value, res.error,
                     res.evaluations);
    return res;
}

double decay_cutoff(double decay, int power, double growth) {
    if (!(decay > 0.0) || power < 1)
        throw invalid_query("decaying_quad needs decay > 0 and power >= 1");
    if (growth < 0.0) growth = 0.0;
    if (power == 1 && growth >= decay)
        throw invalid_query("decaying_quad: linear growth term dominates the decay");
    // Solve decay*U^power - growth*U = kLogEps by fixed point; converges since
    // the decay term dominates at infinity.
    double U = std::pow(kLogEps / decay, 1.0 / power);
    for (int it = 0; it < 200; ++it) {
        const double next = std::pow((kLogEps + growth * U) / decay, 1.0 / power);
        if (std::abs(next - U) < 1e-12 * next) {
            U = next;
            break;
        }
        U = next;
    }
    return std::max(U, 1.0);
}

namespace {

int decay_panels(double U, double decay, int power, double osc) {
    // One panel per half oscillation period plus enough panels to resolve the
    // decay scale u* = decay^{-1/power}; floors keep small cases accurate.
    const double per_osc = std::abs(osc) * U / kPi;
    const double per_decay = 4.0 * U * std::pow(decay, 1.0 / power);
    return std::max({16, static_cast<int>(std::ceil(per_osc)),
                     static_cast<int>(std::ceil(per_decay))});
}

} // namespace

Result decaying_quad(const std::function<double(double)>& f, double decay, int power,
                     double osc, double growth) {
    const double U = decay_cutoff(decay, power, growth);
    Result res = integrate(f, 0.0, U, decay_panels(U, decay, power, osc));
    res.error += 1e-18; // truncated tail envelope
    return res;
}

CResult decaying_quad_c(const std::function<cplx(double)>& f, double decay, int power,
                        double osc, double growth) {
    const double U = decay_cutoff(decay, power, growth);
    CResult res = integrate_c(f, 0.0, U, decay_panels(U, decay, power, osc));
    res.error += 1e-18;
    return res;
}

Spline::Spline(double x0, double dx, std::vector<double> y)
    : x0_(x0), dx_(dx), y_(std::move(y)) {
    const std::size_t n = y_.size();
    if (n < 3 || !(dx > 0.0)) throw invalid_query("Spline needs >= 3 uniform samples");
    // Natural spline (m_0 = m_{n-1} = 0): interior rows solve the uniform
    // tridiagonal system [1, 4, 1] m = 6 * second-difference / dx^2, here by
    // the Thomas algorithm.
    m_.assign(n, 0.0);
    std::vector<double> rhs(n, 0.0), cp(n, 0.0), dp(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i)
        rhs[i] = 6.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / (dx_ * dx_);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double a = (i == 1) ? 0.0 : 1.0;
        const double c = (i + 2 == n) ? 0.0 : 1.0;
        const double denom = 4.0 - a * cp[i - 1];
        cp[i] = c / denom;
        dp[i] = (rhs[i] - a * dp[i - 1]) / denom;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m_[i] = dp[i] - cp[i] * m_[i + 1];
        if (i == 1) break;
    }
}

double Spline::operator()(double x) const {
    const std::size_t n = y_.size();
    double u = (x - x0_) / dx_;
    if (u <= 0.0) return y_.front();
    if (u >= double(n - 1)) return y_.back();
    const std::size_t i = static_cast<std::size_t>(u);
    const double a = u - double(i);
    const double b = 1.0 - a;
    return b * y_[i] + a * y_[i + 1] +
           dx_ * dx_ / 6.0 *
               ((b * b * b - b) * m_[i] + (a * a * a - a) * m_[i + 1]);
}

CSpline::CSpline(double x0, double dx, const std::vector<cplx>& y) {
    std::vector<double> re(y.size()), im(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        re[i] = y[i].real();
        im[i] = y[i].imag();
    }
    re_ = Spline(x0, dx, std::move(re));
    im_ = Spline(x0, dx, std::move(im));
}

cplx CSpline::operator()(double x) const { return {re_(x), im_(x)}; }

} // namespace pseudoheat::quad

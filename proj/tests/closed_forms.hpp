/// Hand-expanded low-order closed forms used as golden references.
///
/// Everything here is written directly in real exponentials and trig
/// functions of lambda^{1/N} -- no root systems, no complex coefficient
/// machinery -- so these are independent re-derivations of what the library
/// computes through its generic sums.  Max-side formulas take z >= max(x,y),
/// min-side z <= min(x,y); `mid`/`low` distribution branches refer to the
/// ordering of x and y.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace golden {

using cplx = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;
inline const double kSqrt2 = std::sqrt(2.0);
inline const double kSqrt3 = std::sqrt(3.0);

// --- boundary amplitude functions (order 2, 3+, 3-, 4) -------------------

inline double phi2(double lam, double xi) {
    return std::sqrt(lam) * std::exp(std::sqrt(lam) * xi);
}
inline double psi2(double lam, double xi) {
    return std::sqrt(lam) * std::exp(-std::sqrt(lam) * xi);
}

inline double phi3p(double lam, double xi) {
    const double r = std::cbrt(lam);
    return r * std::exp(r * xi);
}
inline double psi3p(double lam, double xi) {
    const double r = std::cbrt(lam);
    return 2.0 * r / kSqrt3 * std::exp(-0.5 * r * xi) *
           std::sin(0.5 * kSqrt3 * r * xi);
}

inline double phi3m(double lam, double xi) {
    const double r = std::cbrt(lam);
    return -2.0 * r / kSqrt3 * std::exp(0.5 * r * xi) *
           std::sin(0.5 * kSqrt3 * r * xi);
}
inline double psi3m(double lam, double xi) {
    const double r = std::cbrt(lam);
    return r * std::exp(-r * xi);
}

inline double phi4(double lam, double xi) {
    const double w = std::pow(lam, 0.25) / kSqrt2;
    return -kSqrt2 * std::pow(lam, 0.25) * std::exp(w * xi) * std::sin(w * xi);
}
inline double psi4(double lam, double xi) {
    const double w = std::pow(lam, 0.25) / kSqrt2;
    return kSqrt2 * std::pow(lam, 0.25) * std::exp(-w * xi) * std::sin(w * xi);
}

// --- joint (position, running extremum) density transforms ---------------

inline double maxdens2(double lam, double x, double y, double z) {
    return std::exp(std::sqrt(lam) * (x + y - 2.0 * z));
}
inline double mindens2(double lam, double x, double y, double z) {
    return std::exp(std::sqrt(lam) * (2.0 * z - x - y));
}

inline double maxdens3p(double lam, double x, double y, double z) {
    const double r = std::cbrt(lam);
    return 2.0 / (kSqrt3 * r) * std::exp(r * (x + 0.5 * y - 1.5 * z)) *
           std::sin(0.5 * kSqrt3 * r * (z - y));
}
inline double mindens3p(double lam, double x, double y, double z) {
    const double r = std::cbrt(lam);
    return 2.0 / (kSqrt3 * r) * std::exp(r * (1.5 * z - 0.5 * x - y)) *
           std::sin(0.5 * kSqrt3 * r * (x - z));
}

inline double maxdens3m(double lam, double x, double y, double z) {
    const double r = std::cbrt(lam);
    return 2.0 / (kSqrt3 * r) * std::exp(r * (0.5 * x + y - 1.5 * z)) *
           std::sin(0.5 * kSqrt3 * r * (z - x));
}
inline double mindens3m(double lam, double x, double y, double z) {
    const double r = std::cbrt(lam);
    return 2.0 / (kSqrt3 * r) * std::exp(r * (1.5 * z - x - 0.5 * y)) *
           std::sin(0.5 * kSqrt3 * r * (y - z));
}

inline double maxdens4(double lam, double x, double y, double z) {
    const double w = std::pow(lam, 0.25) / kSqrt2;
    return 1.0 / std::sqrt(lam) * std::exp(w * (x + y - 2.0 * z)) *
           (std::cos(w * (x - y)) - std::cos(w * (x + y - 2.0 * z)));
}
inline double mindens4(double lam, double x, double y, double z) {
    const double w = std::pow(lam, 0.25) / kSqrt2;
    return 1.0 / std::sqrt(lam) * std::exp(w * (2.0 * z - x - y)) *
           (std::cos(w * (x - y)) - std::cos(w * (x + y - 2.0 * z)));
}

// --- max-side distribution transforms, mid: y<=x<=z, low: x<=y<=z --------

inline double f2_mid(double lam, double x, double y, double z) {
    const double r = std::sqrt(lam);
    return 0.5 / lam *
           (std::exp(-r * (x - y)) - std::exp(r * (x + y - 2.0 * z)));
}
inline double f2_low(double lam, double x, double y, double z) {
    const double r = std::sqrt(lam);
    return 1.0 / lam -
           0.5 / lam *
               (std::exp(r * (x - y)) + std::exp(r * (x + y - 2.0 * z)));
}

inline double f3p_mid(double lam, double x, double y, double z) {
    const double r = std::cbrt(lam);
    return 2.0 / (3.0 * lam) *
           (std::exp(-0.5 * r * (x - y)) *
                std::cos(0.5 * kSqrt3 * r * (x - y)) -
            std::exp(r * (x + 0.5 * y - 1.5 * z)) *
                std::cos(0.5 * kSqrt3 * r * (z - y)));
}
inline double f3p_low(double lam, double x, double y, double z) {
    const double r = std::cbrt(lam);
    return 1.0 / lam -
           1.0 / (3.0 * lam) *
               (std::exp(r * (x - y)) +
                2.0 * std::exp(r * (x + 0.5 * y - 1.5 * z)) *
                    std::cos(0.5 * kSqrt3 * r * (z - y)));
}

inline double f3m_mid(double lam, double x, double y, double z) {
    const double r = std::cbrt(lam);
    return 1.0 / (3.0 * lam) *
           (std::exp(-r * (x - y)) -
            2.0 * std::exp(r * (0.5 * x + y - 1.5 * z)) *
                std::cos(0.5 * kSqrt3 * r * (x - z) + kPi / 3.0));
}
inline double f3m_low(double lam, double x, double y, double z) {
    const double r = std::cbrt(lam);
    return 1.0 / lam -
           1.0 / (3.0 * lam) *
               (2.0 * std::exp(0.5 * r * (x - y)) *
                    std::cos(0.5 * kSqrt3 * r * (x - y)) +
                2.0 * std::exp(r * (0.5 * x + y - 1.5 * z)) *
                    std::cos(0.5 * kSqrt3 * r * (x - z) + kPi / 3.0));
}

inline double f4_mid(double lam, double x, double y, double z) {
    const double w = std::pow(lam, 0.25) / kSqrt2;
    return 0.5 / lam *
           (std::exp(-w * (x - y)) * std::cos(w * (x - y)) -
            std::exp(w * (x + y - 2.0 * z)) *
                (std::cos(w * (x - y)) - std::sin(w * (x - y)) -
                 std::sin(w * (x + y - 2.0 * z))));
}
inline double f4_low(double lam, double x, double y, double z) {
    const double w = std::pow(lam, 0.25) / kSqrt2;
    return 1.0 / lam -
           0.5 / lam *
               (std::exp(w * (x - y)) * std::cos(w * (x - y)) +
                std::exp(w * (x + y - 2.0 * z)) *
                    (std::cos(w * (x - y)) - std::sin(w * (x - y)) -
                     std::sin(w * (x + y - 2.0 * z))));
}

// --- first-crossing joint transforms E[e^{-lambda tau + i mu X(tau)}] ----

inline cplx hit2_up(double lam, double mu, double x, double a) {
    return std::exp(cplx(std::sqrt(lam) * (x - a), mu * a));
}
inline cplx hit2_down(double lam, double mu, double x, double a) {
    return std::exp(cplx(-std::sqrt(lam) * (x - a), mu * a));
}

inline cplx hit3p_up(double lam, double mu, double x, double a) {
    return std::exp(cplx(std::cbrt(lam) * (x - a), mu * a));
}
inline cplx hit3p_down(double lam, double mu, double x, double a) {
    const double r = std::cbrt(lam);
    const double d = x - a, s = 0.5 * kSqrt3 * r * d;
    return 2.0 / kSqrt3 * std::exp(cplx(-0.5 * r * d, mu * a)) *
           (std::cos(s - kPi / 6.0) + cplx(0.0, mu / r) * std::sin(s));
}

// The mu-term carries a plus sign: it is the mirror image (x -> -x,
// mu -> -mu) of the kappa = +1 downward transform above, and only the plus
// reproduces the place weights 1 + i mu (x - a) as lambda -> 0.
inline cplx hit3m_up(double lam, double mu, double x, double a) {
    const double r = std::cbrt(lam);
    const double d = x - a, s = 0.5 * kSqrt3 * r * d;
    return 2.0 / kSqrt3 * std::exp(cplx(0.5 * r * d, mu * a)) *
           (std::cos(s + kPi / 6.0) + cplx(0.0, mu / r) * std::sin(s));
}
inline cplx hit3m_down(double lam, double mu, double x, double a) {
    return std::exp(cplx(-std::cbrt(lam) * (x - a), mu * a));
}

inline cplx hit4_up(double lam, double mu, double x, double a) {
    const double r = std::pow(lam, 0.25);
    const double d = x - a, s = r * d / kSqrt2;
    return kSqrt2 * std::exp(cplx(s, mu * a)) *
           (std::cos(s + kPi / 4.0) + cplx(0.0, mu / r) * std::sin(s));
}
inline cplx hit4_down(double lam, double mu, double x, double a) {
    const double r = std::pow(lam, 0.25);
    const double d = x - a, s = r * d / kSqrt2;
    return kSqrt2 * std::exp(cplx(-s, mu * a)) *
           (std::cos(s - kPi / 4.0) + cplx(0.0, mu / r) * std::sin(s));
}

} // namespace golden

#pragma once
/**
 * Internal helper: finite sum  constant + sum_i coef[i] e^{rate[i] x}  with
 * analytic differentiation of any order. Both boundary-value residual checks
 * build their candidate solutions as such term lists, so every derivative in
 * those checks is exact (no finite differencing anywhere).
 */

#include <cmath>
#include <complex>
#include <vector>

namespace pseudoheat::detail {

struct ExpSeries {
    std::complex<double> constant{0.0, 0.0};
    std::vector<std::complex<double>> coef, rate;

    void add(std::complex<double> c, std::complex<double> r) {
        coef.push_back(c);
        rate.push_back(r);
    }

    std::complex<double> deriv(int order, double x) const {
        std::complex<double> s =
            (order == 0) ? constant : std::complex<double>{0.0, 0.0};
        for (std::size_t i = 0; i < coef.size(); ++i)
            s += coef[i] * std::pow(rate[i], order) * std::exp(rate[i] * x);
        return s;
    }
};

} // namespace pseudoheat::detail

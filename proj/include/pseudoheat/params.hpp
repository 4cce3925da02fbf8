#pragma once
/**
 * @file params.hpp
 * @brief Problem parameters for the order-N pseudo-heat equation
 *        du/dt = kappa_N d^N u / dx^N.
 *
 * For even N the sign constant is forced, kappa_N = (-1)^{1+N/2}: that is the
 * unique choice making the space-Fourier symbol a pure decay exp(-t u^N).
 * For odd N both signs give a legitimate (signed-kernel) evolution, so kappa
 * is a free +-1 parameter that must be supplied by the caller.
 */

#include <optional>
#include <string>

#include "pseudoheat/errors.hpp"

namespace pseudoheat {

/// Largest supported equation order. Root-system arithmetic stays well
/// conditioned in double precision far beyond this, but the angle spacing
/// pi/N must remain comfortably above rounding noise.
inline constexpr int kMaxOrder = 32;

struct ParamSet {
    int N = 2;     ///< equation order, 2 <= N <= kMaxOrder
    int kappa = 1; ///< sign constant kappa_N (+1 or -1)
};

/// Forced sign for even N: kappa_N = (-1)^{1+N/2}.
inline constexpr int forced_kappa_even(int N) {
    return ((N / 2) % 2 == 0) ? -1 : +1;
}

/**
 * Validate (N, kappa) and return the canonical parameter set.
 *
 * Even N: kappa may be omitted (it is derived) or supplied if it matches the
 * forced value; a conflicting value is rejected. Odd N: kappa is mandatory.
 *
 * @throws invalid_query on any violation.
 */
inline ParamSet make_params(int N, std::optional<int> kappa = std::nullopt) {
    if (N < 2 || N > kMaxOrder)
        throw invalid_query("order N must lie in [2, " + std::to_string(kMaxOrder) +
                            "], got " + std::to_string(N));
    if (N % 2 == 0) {
        const int forced = forced_kappa_even(N);
        if (kappa && *kappa != forced)
            throw invalid_query("kappa is forced to " + std::to_string(forced) +
                                " for even N=" + std::to_string(N));
        return ParamSet{N, forced};
    }
    if (!kappa)
        throw invalid_query("kappa (+1 or -1) is required for odd N=" + std::to_string(N));
    if (*kappa != 1 && *kappa != -1)
        throw invalid_query("kappa must be +1 or -1, got " + std::to_string(*kappa));
    return ParamSet{N, *kappa};
}

} // namespace pseudoheat

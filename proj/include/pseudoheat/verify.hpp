#pragma once
/**
 * @file verify.hpp
 * @brief Named cross-check suite behind the `verify-all` CLI subcommand: the
 *        algebraic identity battery plus Laplace-domain consistency checks
 *        that tie the independent evaluators to one another (multipole
 *        reassembly, strong-Markov factorization, boundary-value residuals,
 *        potential branch matching, extremum duality, small-lambda crossing
 *        place limit).
 *
 * Every check is fast (no time-domain quadrature), deterministic for a fixed
 * seed, and carries its own tolerance.
 */

#include <string>
#include <vector>

#include "pseudoheat/params.hpp"

namespace pseudoheat {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Run the full named suite for one parameter set. The seed drives the
/// randomized spot-check points (same seed, same bytes).
std::vector<CheckResult> verify_all(const ParamSet& ps, unsigned seed = 12345);

bool all_pass(const std::vector<CheckResult>& checks);

} // namespace pseudoheat

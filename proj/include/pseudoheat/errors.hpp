#pragma once
/**
 * @file errors.hpp
 * @brief Exception taxonomy for the pseudoheat library.
 *
 * Every failure mode the library can report maps to one of these types so the
 * CLI can translate them into stable exit codes (invalid_query -> 2, anything
 * else -> 1) and tests can assert on the precise failure class.
 */

#include <stdexcept>
#include <string>

namespace pseudoheat {

/// A structurally invalid request: bad order N, misused kappa flag, empty range, ...
struct invalid_query : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested quantity lies outside the implemented domain
/// (e.g. a time-domain kernel for odd order above 3).
struct unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested integral does not converge absolutely (odd-order total-variation queries).
struct not_absolutely_convergent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iterative scheme failed to reach its tolerance.
struct nonconvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The global quadrature evaluation budget was exhausted.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A lattice grid is too narrow to hold the kernel mass to tolerance.
struct grid_too_narrow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A lattice run was asked for fewer steps than the Laplace horizon requires.
struct horizon_not_covered : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pseudoheat

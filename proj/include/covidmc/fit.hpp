#pragma once

#include <array>
#include <span>
#include <vector>

#include "covidmc/horizon.hpp"
#include "covidmc/matrix.hpp"

namespace covidmc {

/// Which transitions of the one-step matrix may be nonzero.
struct StructureMask {
  std::array<std::array<bool, 6>, 6> allowed{};

  bool at(int row, int col) const { return allowed[row][col]; }
};

/// Validates: every row allows at least one entry and the D row allows only
/// the self-loop. Throws MaskError.
StructureMask make_mask(const std::array<std::array<bool, 6>, 6>& allowed);

struct FitConfig {
  int max_iterations = 10000;       // per start
  double fd_step = 1e-7;            // central-difference step on free entries
  double improvement_tol = 1e-12;   // stop when an accepted step gains less
  int starts = 5;                   // deterministic multistart
  double early_exit_residual = 1e-8;  // stop trying further starts below this
};

struct FitResult {
  StochasticMatrix matrix;
  double residual = 0;             // final sum of squared table deviations
  int iterations = 0;              // of the winning start
  bool converged = false;          // improvement fell below tolerance
  int start_index = 0;             // which start won
  std::vector<double> residual_trace;  // accepted residuals, winning start
};

/// Recovers a one-step matrix from a multi-horizon table by least squares:
/// minimizes sum over horizons n and tracked transitions (a,b) of
/// (P^n(a,b) - table(n,a,b))^2 subject to P row-stochastic and zero outside
/// the mask.
///
/// The solver is a projected Levenberg-Marquardt iteration: central
/// finite-difference Jacobian on the masked entries, steps solved in the
/// per-row sum-zero tangent space, per-row Euclidean projection onto the
/// masked probability simplex whenever a step leaves it, and acceptance only
/// on residual decrease (the accepted residual sequence is nonincreasing).
/// The first start is row-uniform over the mask; further starts perturb it
/// deterministically. Non-convergence is not an error: the result carries the
/// best residual found.
FitResult fit_matrix_from_horizons(const HorizonTable& table,
                                   const StructureMask& mask,
                                   const FitConfig& config = {});

/// Euclidean projection of v onto {x >= 0, sum x = 1, x zero off support},
/// by the sort-based algorithm. Throws EmptySupportError.
std::vector<double> project_to_simplex(std::span<const double> v,
                                       std::span<const bool> support);

}  // namespace covidmc

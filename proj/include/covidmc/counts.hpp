#pragma once

#include <array>

#include "covidmc/findings.hpp"
#include "covidmc/matrix.hpp"

namespace covidmc {

/// Per-origin transition/occupancy counts in the shape of the source's
/// crossed-values table. Cells the source leaves unpublished ("-") are
/// distinct from explicit zeros.
struct CountTable {
  std::array<std::array<long long, 6>, 6> counts{};
  std::array<std::array<bool, 6>, 6> published{};

  void set(State from, State to, long long value) {
    counts[index_of(from)][index_of(to)] = value;
    published[index_of(from)][index_of(to)] = true;
  }
};

/// Frequency estimate of the one-step matrix from a count table.
///
/// Row conventions (D row is always forced to (0,...,0,1)):
///  - The diagonal cell is read as the row's occupancy total; published
///    off-diagonal cells are destination counts over that total. The
///    unexplained remainder goes to the return-to-S transition for rows
///    H, U, I and to the self-loop for rows S, E.
///  - When the published destination counts exceed the stated total (the
///    source's categories overlap), the row falls back to plain frequencies
///    n_ij / sum_j n_ij over all published cells, keeping the diagonal as a
///    self-loop; this is recorded in `notes` when provided.
///
/// Throws NegativeCountError and EmptyRowError (row total 0).
StochasticMatrix mle_from_counts(const CountTable& counts,
                                 Findings* notes = nullptr);

}  // namespace covidmc

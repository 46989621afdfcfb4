#include "covidmc/fit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "covidmc/errors.hpp"
#include "covidmc/simulate.hpp"
#include "lin.hpp"
#include "mat6.hpp"

namespace covidmc {

StructureMask make_mask(const std::array<std::array<bool, 6>, 6>& allowed) {
  for (int i = 0; i < 6; ++i) {
    bool any = false;
    for (int j = 0; j < 6; ++j) any = any || allowed[i][j];
    if (!any) throw MaskError("mask row " + std::to_string(i) + " is empty");
  }
  const int d = index_of(State::D);
  for (int j = 0; j < 6; ++j)
    if (allowed[d][j] != (j == d))
      throw MaskError("mask D row must allow exactly the self-loop");
  StructureMask mask;
  mask.allowed = allowed;
  return mask;
}

std::vector<double> project_to_simplex(std::span<const double> v,
                                       std::span<const bool> support) {
  std::vector<int> idx;
  for (size_t i = 0; i < support.size(); ++i)
    if (support[i]) idx.push_back(static_cast<int>(i));
  if (idx.empty()) throw EmptySupportError();

  // sort-based water-filling: find the largest active set
  std::vector<double> u;
  u.reserve(idx.size());
  for (int i : idx) u.push_back(v[i]);
  std::sort(u.begin(), u.end(), std::greater<>());
  double css = 0.0, theta = 0.0;
  int rho = 0;
  double best_css = 0.0;
  for (size_t j = 0; j < u.size(); ++j) {
    css += u[j];
    if (u[j] + (1.0 - css) / static_cast<double>(j + 1) > 0.0) {
      rho = static_cast<int>(j + 1);
      best_css = css;
    }
  }
  theta = (best_css - 1.0) / rho;

  std::vector<double> out(v.size(), 0.0);
  for (int i : idx) out[i] = std::max(v[i] - theta, 0.0);
  return out;
}

namespace {

struct FreeEntry {
  int row, col;
};

class Objective {
 public:
  Objective(const HorizonTable& table, const StructureMask& mask)
      : table_(table) {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (mask.at(i, j)) free_.push_back({i, j});
  }

  const std::vector<FreeEntry>& free_entries() const { return free_; }
  int n_residuals() const {
    return static_cast<int>(table_.horizons.size()) * 10;
  }

  // residual vector in fixed horizon-major order
  void residuals(const Mat6& x, std::vector<double>& out) const {
    out.clear();
    for (size_t hi = 0; hi < table_.horizons.size(); ++hi) {
      const Mat6 xn = detail::power6(x, table_.horizons[hi]);
      for (int k = 0; k < 10; ++k) {
        const Transition& t = kTrackedTransitions[k];
        out.push_back(xn[index_of(t.from)][index_of(t.to)] -
                      table_.values[hi][k]);
      }
    }
  }

  double value(const Mat6& x) const {
    std::vector<double> r;
    residuals(x, r);
    double f = 0.0;
    for (double v : r) f += v * v;
    return f;
  }

 private:
  const HorizonTable& table_;
  std::vector<FreeEntry> free_;
};

void project_rows_masked(Mat6& x, const StructureMask& mask) {
  for (int i = 0; i < 6; ++i) {
    std::array<bool, 6> support = mask.allowed[i];
    const std::vector<double> projected =
        project_to_simplex(std::span<const double>(x[i].data(), 6),
                           std::span<const bool>(support.data(), 6));
    for (int j = 0; j < 6; ++j) x[i][j] = projected[j];
  }
}

bool any_negative(const Mat6& x) {
  for (const auto& row : x)
    for (double v : row)
      if (v < 0.0) return true;
  return false;
}

Mat6 uniform_start(const StructureMask& mask) {
  Mat6 x{};
  for (int i = 0; i < 6; ++i) {
    int k = 0;
    for (int j = 0; j < 6; ++j) k += mask.at(i, j);
    for (int j = 0; j < 6; ++j)
      if (mask.at(i, j)) x[i][j] = 1.0 / k;
  }
  return x;
}

// Deterministic perturbed starts for the multistart loop.
Mat6 seeded_start(const StructureMask& mask, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Mat6 x{};
  for (int i = 0; i < 6; ++i) {
    double sum = 0.0;
    for (int j = 0; j < 6; ++j)
      if (mask.at(i, j)) {
        x[i][j] = 0.05 + 0.95 * rng.next_double();
        sum += x[i][j];
      }
    for (int j = 0; j < 6; ++j) x[i][j] /= sum;
  }
  return x;
}

struct SingleFit {
  Mat6 x;
  double residual;
  int iterations;
  bool converged;
  std::vector<double> trace;
};

SingleFit fit_single(const Objective& obj, const StructureMask& mask,
                     const Mat6& x0, const FitConfig& cfg) {
  const auto& free = obj.free_entries();
  const int nf = static_cast<int>(free.size());
  const int nr = obj.n_residuals();

  // per-row sum-zero tangent basis: each free entry except the row's last
  // moves against that last entry
  std::vector<std::pair<int, int>> tangent;  // (free index, row-last index)
  {
    int row_start = 0;
    for (int i = 0; i < 6; ++i) {
      int row_end = row_start;
      while (row_end < nf && free[row_end].row == i) ++row_end;
      for (int c = row_start; c + 1 < row_end; ++c)
        tangent.emplace_back(c, row_end - 1);
      row_start = row_end;
    }
  }
  const int nd = static_cast<int>(tangent.size());

  SingleFit out{x0, obj.value(x0), 0, false, {}};
  out.trace.push_back(out.residual);
  std::vector<double> r, rp, rm;
  obj.residuals(out.x, r);

  double lambda = 1e-3;
  std::vector<std::vector<double>> jac(nr, std::vector<double>(nf, 0.0));

  for (int it = 0; it < cfg.max_iterations; ++it) {
    // central finite differences on the free entries
    for (int c = 0; c < nf; ++c) {
      Mat6 xp = out.x, xm = out.x;
      xp[free[c].row][free[c].col] += cfg.fd_step;
      xm[free[c].row][free[c].col] -= cfg.fd_step;
      obj.residuals(xp, rp);
      obj.residuals(xm, rm);
      for (int k = 0; k < nr; ++k)
        jac[k][c] = (rp[k] - rm[k]) / (2.0 * cfg.fd_step);
    }

    // reduce to the tangent space: jt = jac * B, B columns are e_c - e_last
    std::vector<std::vector<double>> jt(nr, std::vector<double>(nd, 0.0));
    for (int k = 0; k < nr; ++k)
      for (int d = 0; d < nd; ++d)
        jt[k][d] = jac[k][tangent[d].first] - jac[k][tangent[d].second];

    // normal equations
    detail::DenseMatrix a(nd, std::vector<double>(nd, 0.0));
    detail::DenseMatrix g(nd, std::vector<double>(1, 0.0));
    for (int d1 = 0; d1 < nd; ++d1) {
      for (int d2 = d1; d2 < nd; ++d2) {
        double s = 0.0;
        for (int k = 0; k < nr; ++k) s += jt[k][d1] * jt[k][d2];
        a[d1][d2] = s;
        a[d2][d1] = s;
      }
      double s = 0.0;
      for (int k = 0; k < nr; ++k) s += jt[k][d1] * r[k];
      g[d1][0] = s;
    }

    bool accepted = false;
    Mat6 x_new{};
    double f_new = 0.0;
    for (int attempt = 0; attempt < 80; ++attempt) {
      detail::DenseMatrix damped = a;
      for (int d = 0; d < nd; ++d) damped[d][d] += lambda;
      detail::DenseMatrix rhs = g;
      for (int d = 0; d < nd; ++d) rhs[d][0] = -rhs[d][0];
      detail::DenseMatrix step;
      if (!detail::solve_dense(damped, rhs, step)) {
        lambda *= 4.0;
        continue;
      }
      Mat6 cand = out.x;
      for (int d = 0; d < nd; ++d) {
        cand[free[tangent[d].first].row][free[tangent[d].first].col] +=
            step[d][0];
        cand[free[tangent[d].second].row][free[tangent[d].second].col] -=
            step[d][0];
      }
      if (any_negative(cand)) project_rows_masked(cand, mask);
      const double f_cand = obj.value(cand);
      if (f_cand < out.residual) {
        accepted = true;
        x_new = cand;
        f_new = f_cand;
        lambda = std::max(lambda / 3.0, 1e-14);
        break;
      }
      lambda *= 4.0;
      if (lambda > 1e14) break;
    }
    if (!accepted) {
      out.converged = true;
      out.iterations = it;
      return out;
    }
    const double improvement = out.residual - f_new;
    out.x = x_new;
    out.residual = f_new;
    out.trace.push_back(f_new);
    obj.residuals(out.x, r);
    out.iterations = it + 1;
    if (improvement < cfg.improvement_tol) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

}  // namespace

FitResult fit_matrix_from_horizons(const HorizonTable& table,
                                   const StructureMask& mask,
                                   const FitConfig& config) {
  validate_horizon_table(table);
  if (table.horizons.empty()) throw Error("horizon table is empty");
  make_mask(mask.allowed);  // re-validate (MaskError on empty rows)

  const Objective obj(table, mask);
  SingleFit best{};
  int best_start = 0;
  bool have_best = false;
  for (int s = 0; s < std::max(config.starts, 1); ++s) {
    const Mat6 x0 = s == 0 ? uniform_start(mask)
                           : seeded_start(mask, static_cast<std::uint64_t>(s));
    SingleFit fit = fit_single(obj, mask, x0, config);
    if (!have_best || fit.residual < best.residual) {
      best = std::move(fit);
      best_start = s;
      have_best = true;
    }
    if (best.residual <= config.early_exit_residual) break;
  }

  // final projection puts rows on the simplex to machine precision; the
  // residual is recomputed so it matches the returned matrix exactly
  Mat6 rows = best.x;
  project_rows_masked(rows, mask);
  FitResult result{make_matrix(rows), obj.value(rows), best.iterations,
                   best.converged, best_start, std::move(best.trace)};
  return result;
}

}  // namespace covidmc

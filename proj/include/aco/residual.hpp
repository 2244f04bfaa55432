#pragma once

#include "aco/series.hpp"

#include <utility>
#include <vector>

namespace aco {

/// Record of a convergence-control-parameter search: the coarse scan over the
/// bracket plus the refined minimizer.
struct ResidualProfile {
    int order = 1;  ///< partial-sum order m (first order only)
    int q = 50;     ///< grid intervals of the discretized residual average
    std::vector<double> h_grid;
    std::vector<double> e_values;
    double h_star = 0.0;
    double e_star = 0.0;
    bool minimum_at_edge = false;  ///< scan minimum sat on a bracket endpoint
};

/// Residual of the governing equation in stretched time for the first-order
/// partial sum: the defect form evaluated with the tau-scaled derivatives and
/// multiplied by Lambda = lambda0 + lambda1. Identically zero in the harmonic
/// limit. `sol` must have been built from `p`.
double residual_delta(const OscillatorParams& p, const SeriesSolution& sol,
                      double tau);

/// Averaged square residual over one period,
///   E(h) = 1/(q+1) * sum_{k=0..q} Delta(2 k pi / q)^2.
/// Both period endpoints are sampled; the mean runs over q+1 points.
double averaged_square_residual(const OscillatorParams& p, double h, int q = 50);

/// Locate the h that minimizes the averaged square residual: a coarse scan of
/// `grid_points` over the bracket followed by golden-section refinement
/// between the scan neighbours. `tol` caps the guaranteed |h - h_star|; the
/// refinement itself runs to ~1e-12 interval width. Deterministic: identical
/// inputs give bit-identical results. A scan minimum on a bracket endpoint is
/// reported through `minimum_at_edge` instead of being refined.
ResidualProfile optimize_h(const OscillatorParams& p,
                           std::pair<double, double> bracket = {1e-6, 1.5},
                           double tol = 1e-6, int q = 50, int grid_points = 61);

}  // namespace aco

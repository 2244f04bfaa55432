#pragma once

#include "aco/rk4.hpp"
#include "aco/series.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aco {

/// Deviation of an analytic approximation from a reference trajectory,
/// sampled at every reference timestamp. rms = sqrt(sum d_i^2 / N).
struct ErrorReport {
    std::size_t n_points = 0;
    double rms = 0.0;
    double max_abs = 0.0;
    std::optional<std::vector<std::pair<double, double>>> pointwise;  ///< (t, deviation)
};

/// Pointwise deviation x_ref(t_i) - x_approx(t_i) over the whole trajectory.
/// The approximation must have been built for the same parameters as the
/// reference run. Throws domain_error on an empty trajectory.
ErrorReport rms_error(const Trajectory& reference, const SeriesSolution& approx,
                      bool keep_pointwise = false);

/// 100 * |omega_ref - omega_approx| / omega_ref. Requires omega_ref > 0.
double percent_frequency_error(double omega_approx, double omega_ref);

/// One row of a parameter sweep. A failing row records the error text and
/// leaves the numeric fields untouched; it never aborts the sweep.
struct SweepRow {
    OscillatorParams params;
    double h_star = 0.0;
    double omega0 = 0.0;
    double omega = 0.0;
    double omega_rk4 = 0.0;
    double rms = 0.0;
    bool ok = false;
    std::string error;
};

/// For each parameter set: tune h, build the solution, integrate the
/// reference, extract its frequency and compute the rms deviation. Rows come
/// back in input order.
std::vector<SweepRow> sweep(const std::vector<OscillatorParams>& grid,
                            double span, double dt);

}  // namespace aco

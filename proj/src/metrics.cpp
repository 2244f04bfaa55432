#include "aco/metrics.hpp"

#include "aco/residual.hpp"

#include <cmath>

namespace aco {

ErrorReport rms_error(const Trajectory& reference, const SeriesSolution& approx,
                      bool keep_pointwise) {
    const std::size_t n = reference.size();
    if (n == 0) throw domain_error("empty trajectory");

    ErrorReport rep;
    std::vector<std::pair<double, double>> pts;
    if (keep_pointwise) pts.reserve(n);
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = reference.time(i);
        const double d = reference.x[i] - eval_displacement(approx, t);
        sum_sq += d * d;
        rep.max_abs = std::max(rep.max_abs, std::abs(d));
        if (keep_pointwise) pts.emplace_back(t, d);
    }
    rep.n_points = n;
    rep.rms = std::sqrt(sum_sq / static_cast<double>(n));
    if (keep_pointwise) rep.pointwise = std::move(pts);
    return rep;
}

double percent_frequency_error(double omega_approx, double omega_ref) {
    if (!(omega_ref > 0.0))
        throw domain_error("reference frequency must be positive");
    return 100.0 * std::abs(omega_ref - omega_approx) / omega_ref;
}

std::vector<SweepRow> sweep(const std::vector<OscillatorParams>& grid,
                            double span, double dt) {
    if (grid.empty()) throw domain_error("sweep needs a non-empty parameter grid");

    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (const OscillatorParams& p : grid) {
        SweepRow row;
        row.params = p;
        try {
            const ResidualProfile prof = optimize_h(p);
            const SeriesSolution sol = build_solution(p, prof.h_star);
            const Trajectory traj = integrate(p, span, dt);
            row.h_star = prof.h_star;
            row.omega0 = aco::omega0(p);
            row.omega = sol.expansion.omega;
            row.omega_rk4 = extract_frequency(traj);
            row.rms = rms_error(traj, sol).rms;
            row.ok = true;
        } catch (const error& e) {
            row.ok = false;
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace aco

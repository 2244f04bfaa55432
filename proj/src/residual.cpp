#include "aco/residual.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aco {

double residual_delta(const OscillatorParams& p, const SeriesSolution& sol,
                      double tau) {
    if (!(sol.params == p))
        throw std::invalid_argument("solution was built for different parameters");
    const TauPoint pt = eval_in_tau(sol, tau);
    const double lt = sol.expansion.lambda0 + sol.expansion.lambda1;
    // tau = t / sqrt(Lambda) scales the defect arguments: v = x'/sqrt(Lambda),
    // acc = x''/Lambda, and the whole defect picks up a factor Lambda.
    return lt * equation_defect(p, pt.x, pt.dx / std::sqrt(lt), pt.d2x / lt);
}

double averaged_square_residual(const OscillatorParams& p, double h, int q) {
    if (q < 2) throw domain_error("q must be at least 2");
    const SeriesSolution sol = build_solution(p, h);
    double sum = 0.0;
    for (int k = 0; k <= q; ++k) {
        const double tau = 2.0 * k * std::numbers::pi / q;
        const double d = residual_delta(p, sol, tau);
        sum += d * d;
    }
    return sum / (q + 1);
}

ResidualProfile optimize_h(const OscillatorParams& p,
                           std::pair<double, double> bracket, double tol, int q,
                           int grid_points) {
    const auto [lo, hi] = bracket;
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw domain_error("bracket must satisfy lo < hi");
    if (!(tol > 0.0)) throw domain_error("tol must be positive");
    if (grid_points < 3) throw domain_error("grid needs at least 3 points");
    if (q < 2) throw domain_error("q must be at least 2");

    ResidualProfile prof;
    prof.q = q;
    prof.h_grid.reserve(grid_points);
    prof.e_values.reserve(grid_points);
    std::size_t best_i = 0;
    for (int i = 0; i < grid_points; ++i) {
        const double hh = lo + (hi - lo) * i / (grid_points - 1);
        prof.h_grid.push_back(hh);
        prof.e_values.push_back(averaged_square_residual(p, hh, q));
        if (prof.e_values.back() < prof.e_values[best_i])
            best_i = prof.e_values.size() - 1;
    }

    double best_h = prof.h_grid[best_i];
    double best_e = prof.e_values[best_i];
    if (best_i == 0 || best_i + 1 == prof.h_grid.size()) {
        prof.minimum_at_edge = true;
        prof.h_star = best_h;
        prof.e_star = best_e;
        return prof;
    }

    double a = prof.h_grid[best_i - 1];
    double b = prof.h_grid[best_i + 1];
    const double width_target = std::min(tol, 1e-12);
    constexpr double invphi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

    auto consider = [&](double hh, double e) {
        if (e < best_e) {
            best_e = e;
            best_h = hh;
        }
    };
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = averaged_square_residual(p, x1, q);
    double f2 = averaged_square_residual(p, x2, q);
    consider(x1, f1);
    consider(x2, f2);
    for (int iter = 0; iter < 200 && (b - a) > width_target; ++iter) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = averaged_square_residual(p, x1, q);
            consider(x1, f1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = averaged_square_residual(p, x2, q);
            consider(x2, f2);
        }
    }

    prof.h_star = best_h;
    prof.e_star = best_e;
    return prof;
}

}  // namespace aco

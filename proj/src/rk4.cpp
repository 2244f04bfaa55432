#include "aco/rk4.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace aco {

namespace {

// Lagrange cubic through the four samples around the sign change in
// [time(i), time(i+1)], root located by bisection.
double crossing_time(const Trajectory& traj, std::size_t i) {
    const double t[4] = {traj.time(i - 1), traj.time(i), traj.time(i + 1),
                         traj.time(i + 2)};
    const double w[4] = {traj.v[i - 1], traj.v[i], traj.v[i + 1], traj.v[i + 2]};
    auto cubic = [&](double tt) {
        double s = 0.0;
        for (int m = 0; m < 4; ++m) {
            double term = w[m];
            for (int j = 0; j < 4; ++j)
                if (j != m) term *= (tt - t[j]) / (t[m] - t[j]);
            s += term;
        }
        return s;
    };
    double lo = t[1];
    double hi = t[2];
    double flo = cubic(lo);
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = cubic(mid);
        if ((flo > 0.0) == (fm > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

Trajectory integrate_from(const OscillatorParams& p, State initial, double t_end,
                          double dt) {
    if (!std::isfinite(t_end) || !(t_end > 0.0))
        throw domain_error("t_end must be positive");
    if (!(dt > 0.0) || dt > 0.1)
        throw domain_error("dt must lie in (0, 0.1]");
    if (!std::isfinite(initial.x) || !std::isfinite(initial.v))
        throw domain_error("initial state must be finite");

    // Guard keeps spans that are exact multiples of dt in real arithmetic at
    // their full sample count.
    const auto steps = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));

    Trajectory traj;
    traj.dt = dt;
    traj.x.reserve(steps + 1);
    traj.v.reserve(steps + 1);
    double x = initial.x;
    double v = initial.v;
    traj.x.push_back(x);
    traj.v.push_back(v);
    for (std::size_t i = 0; i < steps; ++i) {
        try {
            const double k1x = v;
            const double k1v = acceleration(p, {x, v});
            const double k2x = v + 0.5 * dt * k1v;
            const double k2v = acceleration(p, {x + 0.5 * dt * k1x, k2x});
            const double k3x = v + 0.5 * dt * k2v;
            const double k3v = acceleration(p, {x + 0.5 * dt * k2x, k3x});
            const double k4x = v + dt * k3v;
            const double k4v = acceleration(p, {x + dt * k3x, k4x});
            x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
            v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        } catch (const domain_error&) {
            throw integration_blowup(
                i + 1, "integration produced a non-finite state at step " +
                           std::to_string(i + 1));
        }
        if (!std::isfinite(x) || !std::isfinite(v))
            throw integration_blowup(
                i + 1, "integration produced a non-finite state at step " +
                           std::to_string(i + 1));
        traj.x.push_back(x);
        traj.v.push_back(v);
    }
    return traj;
}

Trajectory integrate(const OscillatorParams& p, double t_end, double dt) {
    return integrate_from(p, {p.amplitude, 0.0}, t_end, dt);
}

double extract_frequency(const Trajectory& traj) {
    std::vector<double> crossings;
    const std::size_t n = traj.size();
    for (std::size_t i = 1; i + 2 < n; ++i) {
        if (traj.v[i] > 0.0 && traj.v[i + 1] <= 0.0 && traj.x[i] > 0.0)
            crossings.push_back(crossing_time(traj, i));
    }
    if (crossings.size() < 2)
        throw insufficient_span(
            "frequency extraction needs at least two displacement maxima; "
            "integrate over more oscillation periods");
    const double mean_period =
        (crossings.back() - crossings.front()) / (crossings.size() - 1);
    return 2.0 * std::numbers::pi / mean_period;
}

}  // namespace aco

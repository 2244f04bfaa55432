#pragma once

#include "aco/oscillator.hpp"

#include <cstddef>
#include <vector>

namespace aco {

/// Uniformly sampled trajectory; timestamps are t0 + i * dt by construction.
struct Trajectory {
    double dt = 1e-3;
    double t0 = 0.0;
    std::vector<double> x;
    std::vector<double> v;

    [[nodiscard]] std::size_t size() const { return x.size(); }
    [[nodiscard]] double time(std::size_t i) const { return t0 + i * dt; }
    [[nodiscard]] State state(std::size_t i) const { return {x[i], v[i]}; }
};

/// Classical fixed-step fourth-order Runge-Kutta integration of the governing
/// equation from the oscillator's initial condition (a, 0). Sample count is
/// floor(t_end / dt) + 1. Requires t_end > 0 and 0 < dt <= 0.1 (the scheme
/// loses the trajectory only for much coarser steps, but 0.1 is the validated
/// ceiling). Throws integration_blowup with the failing step index when the
/// state turns non-finite.
Trajectory integrate(const OscillatorParams& p, double t_end, double dt = 1e-3);

/// Same integration from an arbitrary initial state.
Trajectory integrate_from(const OscillatorParams& p, State initial, double t_end,
                          double dt = 1e-3);

/// Angular frequency 2 pi / T where T is the mean spacing of the downward
/// zero crossings of v (the displacement maxima), each crossing located by a
/// local cubic interpolation of v(t). Needs at least two crossings, i.e. a
/// trajectory spanning a few full oscillations; throws insufficient_span
/// otherwise.
double extract_frequency(const Trajectory& traj);

}  // namespace aco

#pragma once

#include "aco/errors.hpp"

namespace aco {

/// Parameters of the autonomous conservative oscillator
///
///   x''(1 + eps x^2 + alpha x^4) + lambda x + eps x x'^2
///     + 2 alpha x^3 x'^2 + beta x^3 + gamma x^5 = 0,
///   x(0) = a,  x'(0) = 0.
///
/// lambda is the sign of the linear stiffness and must be one of -1, 0, 1;
/// the four nonlinear coefficients are finite and non-negative; the
/// amplitude a is finite and strictly positive. Invariants are enforced at
/// construction, so a value of this type is always usable.
struct OscillatorParams {
    int lambda = 1;
    double epsilon = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double amplitude = 1.0;

    /// Unit-amplitude harmonic oscillator.
    OscillatorParams() = default;

    OscillatorParams(int lambda_, double epsilon_, double alpha_, double beta_,
                     double gamma_, double amplitude_);

    /// All four nonlinear coefficients set to the same value.
    static OscillatorParams uniform(double amplitude_, double coefficient,
                                    int lambda_ = 1);

    bool operator==(const OscillatorParams&) const = default;
};

/// Instantaneous state (displacement, velocity).
struct State {
    double x = 0.0;
    double v = 0.0;
};

/// Left side of the governing equation evaluated at (x, v, acc); zero exactly
/// when the triple lies on a solution. The equation lives only here: the
/// integrator and the residual evaluator both derive their view from this
/// single form.
double equation_defect(const OscillatorParams& p, double x, double v, double acc);

/// Acceleration implied by the governing equation. The defect is linear in
/// the acceleration, so this is the defect form solved for x''.
/// Throws domain_error for a non-finite state.
double acceleration(const OscillatorParams& p, const State& s);

/// First integral conserved along exact trajectories:
///   E = v^2 (1 + eps x^2 + alpha x^4) / 2 + lambda x^2 / 2
///     + beta x^4 / 4 + gamma x^6 / 6.
double energy(const OscillatorParams& p, const State& s);

}  // namespace aco

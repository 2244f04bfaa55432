#pragma once

#include "aco/oscillator.hpp"

namespace aco {

/// Frequency expansion expressed through the squared inverse frequency
/// Lambda = 1/omega^2. The first-order frequency is
/// omega = (lambda0 + lambda1)^(-1/2); construction fails when that sum is
/// not positive.
struct FrequencyExpansion {
    double lambda0 = 1.0;
    double lambda1 = 0.0;
    double omega = 1.0;
};

/// The three polynomial groups of the first-order frequency correction,
/// combined as  bracket = c0 - lambda0 * c1 + lambda0^2 * c2.
/// Kept separate so each group can be checked on its own.
struct Lambda1Bracket {
    double c0 = 0.0;  ///< lambda0-independent group
    double c1 = 0.0;  ///< group multiplying lambda0
    double c2 = 0.0;  ///< group multiplying lambda0^2
};

/// First-order analytic displacement
///
///   x(t) = a cos(wt) + c13 (cos wt - cos 3wt) + c15 (cos wt - cos 5wt),
///
/// with w = expansion.omega. Both harmonic-correction coefficients vanish at
/// t = 0, so x(0) = a and x'(0) = 0 hold exactly for every h. c13, c15 and
/// lambda1 are all linear in the convergence-control parameter h.
struct SeriesSolution {
    OscillatorParams params;
    double h = 0.0;
    FrequencyExpansion expansion;
    double c13 = 0.0;
    double c15 = 0.0;
};

/// Partial sum and its first two derivatives in the stretched time
/// tau = omega t.
struct TauPoint {
    double x = 0.0;
    double dx = 0.0;
    double d2x = 0.0;
};

/// Zeroth-order squared inverse frequency, fixed by cancelling the secular
/// tau sin(tau) term of the first-order correction:
///
///   lambda0 = (8 + 3 a^4 alpha + 4 a^2 eps) / (8 lambda + 5 a^4 gamma + 6 a^2 beta).
///
/// Requires lambda = 1 (for lambda <= 0 the expansion frequency can turn
/// non-real); throws unsupported_regime otherwise.
double lambda0(const OscillatorParams& p);

/// Zeroth-order angular frequency, lambda0(p)^(-1/2).
double omega0(const OscillatorParams& p);

/// Bracket groups of the first-order frequency correction.
Lambda1Bracket lambda1_bracket(const OscillatorParams& p);

/// First-order correction to Lambda. Linear in h; zero in the harmonic limit.
/// `lambda0_value` must be lambda0(p).
double lambda1(const OscillatorParams& p, double h, double lambda0_value);

/// Assemble the first-order solution for a given convergence-control
/// parameter. Throws domain_error when lambda0 + lambda1 <= 0.
SeriesSolution build_solution(const OscillatorParams& p, double h);

double eval_displacement(const SeriesSolution& sol, double t);
double eval_velocity(const SeriesSolution& sol, double t);
TauPoint eval_in_tau(const SeriesSolution& sol, double tau);

}  // namespace aco

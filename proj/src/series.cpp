#include "aco/series.hpp"

#include <cmath>

namespace aco {

namespace {

void require_tunable(const OscillatorParams& p) {
    if (p.lambda != 1)
        throw unsupported_regime("analytic expansion requires lambda = 1");
}

}  // namespace

double lambda0(const OscillatorParams& p) {
    require_tunable(p);
    const double a2 = p.amplitude * p.amplitude;
    const double a4 = a2 * a2;
    const double num = 8.0 + 3.0 * a4 * p.alpha + 4.0 * a2 * p.epsilon;
    const double den = 8.0 * p.lambda + 5.0 * a4 * p.gamma + 6.0 * a2 * p.beta;
    if (den <= 0.0)
        throw domain_error("non-positive stiffness combination in lambda0");
    return num / den;
}

double omega0(const OscillatorParams& p) { return 1.0 / std::sqrt(lambda0(p)); }

Lambda1Bracket lambda1_bracket(const OscillatorParams& p) {
    require_tunable(p);
    const double a2 = p.amplitude * p.amplitude;
    const double a4 = a2 * a2;
    const double a6 = a4 * a2;
    Lambda1Bracket b;
    b.c0 = 96.0 * a2 * p.alpha - 15.0 * a6 * p.alpha * p.alpha + 96.0 * p.epsilon -
           12.0 * a4 * p.alpha * p.epsilon;
    b.c1 = 48.0 * p.beta + 64.0 * a2 * p.gamma + 138.0 * a4 * p.alpha * p.beta +
           150.0 * a6 * p.alpha * p.gamma + 144.0 * a2 * p.beta * p.epsilon +
           156.0 * a4 * p.gamma * p.epsilon + 96.0 * a2 * p.alpha * p.lambda +
           96.0 * p.epsilon * p.lambda;
    b.c2 = 72.0 * a2 * p.beta * p.beta + 174.0 * a4 * p.beta * p.gamma +
           105.0 * a6 * p.gamma * p.gamma + 48.0 * p.beta * p.lambda +
           64.0 * a2 * p.gamma * p.lambda;
    return b;
}

double lambda1(const OscillatorParams& p, double h, double lambda0_value) {
    if (!std::isfinite(h)) throw domain_error("h must be finite");
    const Lambda1Bracket b = lambda1_bracket(p);
    const double a2 = p.amplitude * p.amplitude;
    const double a4 = a2 * a2;
    const double den =
        192.0 * (6.0 * a2 * p.beta + 5.0 * a4 * p.gamma + 8.0 * p.lambda);
    if (den == 0.0)
        throw domain_error("zero denominator in first-order frequency correction");
    const double l0 = lambda0_value;
    return a2 * h / den * (b.c0 - l0 * b.c1 + l0 * l0 * b.c2);
}

SeriesSolution build_solution(const OscillatorParams& p, double h) {
    const double l0 = lambda0(p);
    const double l1 = lambda1(p, h, l0);
    const double lt = l0 + l1;
    if (lt <= 0.0)
        throw domain_error("lambda0 + lambda1 must be positive for a real frequency");

    const double a = p.amplitude;
    const double a2 = a * a;
    const double a3 = a2 * a;
    const double a5 = a3 * a2;

    SeriesSolution sol{p, h, FrequencyExpansion{l0, l1, 1.0 / std::sqrt(lt)}, 0.0,
                       0.0};
    sol.c13 = h / 128.0 * (8.0 * p.epsilon * a3 + 7.0 * p.alpha * a5 -
                           4.0 * l0 * p.beta * a3 - 5.0 * p.gamma * l0 * a5);
    sol.c15 = h * a5 / 384.0 * (3.0 * p.alpha - p.gamma * l0);
    return sol;
}

TauPoint eval_in_tau(const SeriesSolution& sol, double tau) {
    const double a = sol.params.amplitude;
    const double c1 = std::cos(tau);
    const double s1 = std::sin(tau);
    const double c3 = std::cos(3.0 * tau);
    const double s3 = std::sin(3.0 * tau);
    const double c5 = std::cos(5.0 * tau);
    const double s5 = std::sin(5.0 * tau);
    TauPoint pt;
    pt.x = a * c1 + sol.c13 * (c1 - c3) + sol.c15 * (c1 - c5);
    pt.dx = -a * s1 + sol.c13 * (-s1 + 3.0 * s3) + sol.c15 * (-s1 + 5.0 * s5);
    pt.d2x = -a * c1 + sol.c13 * (-c1 + 9.0 * c3) + sol.c15 * (-c1 + 25.0 * c5);
    return pt;
}

double eval_displacement(const SeriesSolution& sol, double t) {
    return eval_in_tau(sol, sol.expansion.omega * t).x;
}

double eval_velocity(const SeriesSolution& sol, double t) {
    return sol.expansion.omega * eval_in_tau(sol, sol.expansion.omega * t).dx;
}

}  // namespace aco

#include "aco/oscillator.hpp"

#include <cmath>

namespace aco {

namespace {

void require_coefficient(double value, const char* name) {
    if (!std::isfinite(value) || value < 0.0)
        throw domain_error(std::string(name) + " must be finite and non-negative");
}

}  // namespace

OscillatorParams::OscillatorParams(int lambda_, double epsilon_, double alpha_,
                                   double beta_, double gamma_, double amplitude_)
    : lambda(lambda_),
      epsilon(epsilon_),
      alpha(alpha_),
      beta(beta_),
      gamma(gamma_),
      amplitude(amplitude_) {
    if (lambda < -1 || lambda > 1)
        throw domain_error("lambda must be one of -1, 0, 1");
    require_coefficient(epsilon, "epsilon");
    require_coefficient(alpha, "alpha");
    require_coefficient(beta, "beta");
    require_coefficient(gamma, "gamma");
    if (!std::isfinite(amplitude) || amplitude <= 0.0)
        throw domain_error("amplitude must be finite and positive");
}

OscillatorParams OscillatorParams::uniform(double amplitude_, double coefficient,
                                           int lambda_) {
    return OscillatorParams(lambda_, coefficient, coefficient, coefficient,
                            coefficient, amplitude_);
}

namespace {

// The two pieces of the governing equation,
//   defect = acc * effective_mass + restoring_force;
// everything else in the library is built from this composition.

double effective_mass(const OscillatorParams& p, double x) {
    const double x2 = x * x;
    return 1.0 + p.epsilon * x2 + p.alpha * x2 * x2;
}

double restoring_force(const OscillatorParams& p, double x, double v) {
    const double x2 = x * x;
    const double x3 = x2 * x;
    const double v2 = v * v;
    return p.lambda * x + p.epsilon * x * v2 + 2.0 * p.alpha * x3 * v2 +
           p.beta * x3 + p.gamma * x2 * x3;
}

}  // namespace

double equation_defect(const OscillatorParams& p, double x, double v, double acc) {
    return acc * effective_mass(p, x) + restoring_force(p, x, v);
}

double acceleration(const OscillatorParams& p, const State& s) {
    if (!std::isfinite(s.x) || !std::isfinite(s.v))
        throw domain_error("state must be finite");
    return -restoring_force(p, s.x, s.v) / effective_mass(p, s.x);
}

double energy(const OscillatorParams& p, const State& s) {
    if (!std::isfinite(s.x) || !std::isfinite(s.v))
        throw domain_error("state must be finite");
    const double x2 = s.x * s.x;
    const double x4 = x2 * x2;
    return 0.5 * s.v * s.v * (1.0 + p.epsilon * x2 + p.alpha * x4) +
           0.5 * p.lambda * x2 + 0.25 * p.beta * x4 + p.gamma / 6.0 * x4 * x2;
}

}  // namespace aco

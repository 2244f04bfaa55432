#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aco {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation.
struct domain_error : error {
    using error::error;
};

/// Parameter regime the analytic expansion does not cover (lambda != 1).
struct unsupported_regime : domain_error {
    using domain_error::domain_error;
};

/// Time integration produced a non-finite state.
struct integration_blowup : error {
    integration_blowup(std::size_t step, const std::string& what_arg)
        : error(what_arg), failed_step(step) {}

    std::size_t failed_step;
};

/// Trajectory too short for the requested analysis.
struct insufficient_span : error {
    using error::error;
};

}  // namespace aco

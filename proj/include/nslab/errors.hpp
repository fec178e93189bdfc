#pragma once

#include <stdexcept>
#include <string>

namespace nslab {

/// Raised when a time step produces non-finite samples. Carries the step index
/// so partially collected monitor records can be attributed.
struct blow_up_error : std::runtime_error {
    long step_index;
    double t;
    blow_up_error(long step, double time)
        : std::runtime_error("solution became non-finite at step " + std::to_string(step) +
                             " (t = " + std::to_string(time) + ")"),
          step_index(step),
          t(time) {}
};

/// Raised when an inequality-lab sample is constant along an axis whose
/// derivative enters with a positive exponent.
struct degenerate_input_error : std::invalid_argument {
    long sample_index;  // -1 when not produced inside a family run
    explicit degenerate_input_error(const std::string& what, long sample = -1)
        : std::invalid_argument(what), sample_index(sample) {}
};

struct io_error : std::runtime_error {
    std::string path;
    io_error(const std::string& what, std::string p)
        : std::runtime_error(what + ": " + p), path(std::move(p)) {}
};

}  // namespace nslab

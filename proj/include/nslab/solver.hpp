#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "nslab/field.hpp"

namespace nslab {

struct SolverState {
    double t = 0.0;
    VectorField u;
    double nu = 1.0;
    double dt = 1e-3;
    long step_index = 0;
};

enum class InitKind { TaylorGreen, RandomDivfree, SingleMode, File };

InitKind init_kind_from_string(const std::string& s);
std::string to_string(InitKind k);

struct SolverConfig {
    int grid_n = 32;
    double dt = 1e-3;
    double t_end = 1.0;
    double nu = 1.0;
    InitKind init = InitKind::TaylorGreen;
    std::uint64_t seed = 0;
    double amplitude = 1.0;
    double slope = -2.0;       // spectral slope for random initial data
    bool dealias = true;
    int stride = 1;            // monitor sampling interval in steps
    std::string field_file;    // initial data path when init == File

    void validate() const;
};

/// Advection term -P[(u . grad) u]: products in real space, derivatives
/// spectral, 2/3-rule dealiased (when enabled), then Leray-projected.
VectorField nonlinear_rhs(const VectorField& u, bool dealias = true);

/// One classical RK4 step with the viscous term integrated exactly by the
/// factor exp(-nu |k|^2 dt). Throws blow_up_error when the new state is
/// non-finite.
SolverState step(const SolverState& state, bool dealias = true);

struct TrajectorySummary {
    long steps = 0;
    double t_final = 0.0;
};

/// Build the initial state for a config (Leray projection applied to file
/// input) and emit a CFL advisory on stderr when dt looks large.
SolverState initial_state(const SolverConfig& config);

/// Step from t = 0 to t_end, invoking `hook` on the initial state, on every
/// stride-th step, and on the final step. Blow-up propagates; records the
/// hook has already collected stay with the caller.
TrajectorySummary run(const SolverConfig& config,
                      const std::function<void(const SolverState&)>& hook);

}  // namespace nslab

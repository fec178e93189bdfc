#include "nslab/solver.hpp"

#include <array>
#include <cmath>
#include <iostream>
#include <vector>

#include "nslab/errors.hpp"
#include "nslab/field_io.hpp"
#include "nslab/initial_fields.hpp"
#include "nslab/spectral.hpp"

namespace nslab {

namespace {

using Spec3 = std::array<SpectralField, 3>;

Spec3 to_spectral(const VectorField& u) {
    return {forward_transform(u.u1), forward_transform(u.u2), forward_transform(u.u3)};
}

VectorField to_real(const Spec3& c) {
    VectorField u(c[0].grid);
    u.u1 = inverse_transform(c[0]);
    u.u2 = inverse_transform(c[1]);
    u.u3 = inverse_transform(c[2]);
    return u;
}

// Spectral advection term -M P F[(u~ . grad) u~] with u~ the masked state.
Spec3 nonlinear_spectral(const Spec3& c, bool dealias) {
    const Grid3& g = c[0].grid;
    Spec3 masked = c;
    if (dealias)
        for (auto& m : masked) dealias_inplace(m);

    std::array<ScalarField, 3> u;
    for (int j = 0; j < 3; ++j) u[j] = inverse_transform(masked[j]);

    // w_j = sum_i u_i d_i u_j, derivatives spectral, product pointwise
    std::array<ScalarField, 3> w;
    for (int j = 0; j < 3; ++j) {
        w[j] = ScalarField(g);
        for (int i = 0; i < 3; ++i) {
            SpectralField d = masked[j];
            derivative_inplace(d, i + 1);
            const ScalarField dij = inverse_transform(d);
            for (std::size_t m = 0; m < w[j].values.size(); ++m)
                w[j].values[m] += u[i].values[m] * dij.values[m];
        }
    }

    Spec3 out{forward_transform(w[0]), forward_transform(w[1]), forward_transform(w[2])};
    if (dealias)
        for (auto& o : out) dealias_inplace(o);
    leray_project_inplace(out[0], out[1], out[2]);
    for (auto& o : out)
        for (auto& v : o.coeff) v = -v;
    return out;
}

// exp(-nu |k|^2 h) per mode; the Nyquist wavenumber enters with magnitude n/2.
std::vector<double> viscous_factor(const Grid3& g, double nu, double h) {
    std::vector<double> e(g.size());
    std::size_t idx = 0;
    for (int j3 = 0; j3 < g.n3; ++j3) {
        const double k3 = wavenumber(j3, g.n3);
        for (int j2 = 0; j2 < g.n2; ++j2) {
            const double k2 = wavenumber(j2, g.n2);
            for (int j1 = 0; j1 < g.n1; ++j1, ++idx) {
                const double k1 = wavenumber(j1, g.n1);
                e[idx] = std::exp(-nu * (k1 * k1 + k2 * k2 + k3 * k3) * h);
            }
        }
    }
    return e;
}

void axpy(Spec3& y, double a, const Spec3& x) {
    for (int j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < y[j].coeff.size(); ++i) y[j].coeff[i] += a * x[j].coeff[i];
}

void scale_by(Spec3& y, const std::vector<double>& e) {
    for (int j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < y[j].coeff.size(); ++i) y[j].coeff[i] *= e[i];
}

}  // namespace

InitKind init_kind_from_string(const std::string& s) {
    if (s == "taylor-green") return InitKind::TaylorGreen;
    if (s == "random" || s == "random-divfree") return InitKind::RandomDivfree;
    if (s == "single-mode") return InitKind::SingleMode;
    if (s == "file") return InitKind::File;
    throw std::invalid_argument("unknown init kind: " + s);
}

std::string to_string(InitKind k) {
    switch (k) {
        case InitKind::TaylorGreen: return "taylor-green";
        case InitKind::RandomDivfree: return "random";
        case InitKind::SingleMode: return "single-mode";
        case InitKind::File: return "file";
    }
    return "?";
}

void SolverConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(t_end >= dt)) throw std::invalid_argument("t_end must be at least dt");
    if (!(nu > 0.0)) throw std::invalid_argument("nu must be positive");
    if (stride < 1) throw std::invalid_argument("stride must be >= 1");
    if (init == InitKind::File && field_file.empty())
        throw std::invalid_argument("init=file requires a field file path");
    (void)Grid3(grid_n);
}

VectorField nonlinear_rhs(const VectorField& u, bool dealias) {
    require_finite(u, "nonlinear_rhs");
    return to_real(nonlinear_spectral(to_spectral(u), dealias));
}

SolverState step(const SolverState& state, bool dealias) {
    require_finite(state.u, "step");
    const double h = state.dt;
    const Grid3& g = state.u.grid;
    const std::vector<double> e_full = viscous_factor(g, state.nu, h);
    const std::vector<double> e_half = viscous_factor(g, state.nu, 0.5 * h);

    const Spec3 c = to_spectral(state.u);

    auto advance = [&]() {
        const Spec3 f1 = nonlinear_spectral(c, dealias);

        Spec3 u2 = c;  // E_half (c + h/2 f1)
        axpy(u2, 0.5 * h, f1);
        scale_by(u2, e_half);
        const Spec3 f2 = nonlinear_spectral(u2, dealias);

        Spec3 u3 = c;  // E_half c + h/2 f2
        scale_by(u3, e_half);
        axpy(u3, 0.5 * h, f2);
        const Spec3 f3 = nonlinear_spectral(u3, dealias);

        Spec3 u4 = c;  // E_full c + h E_half f3
        scale_by(u4, e_full);
        {
            Spec3 t = f3;
            scale_by(t, e_half);
            axpy(u4, h, t);
        }
        const Spec3 f4 = nonlinear_spectral(u4, dealias);

        // c' = E c + h/6 (E f1 + 2 E_half (f2 + f3) + f4)
        Spec3 next = c;
        scale_by(next, e_full);
        {
            Spec3 t = f1;
            scale_by(t, e_full);
            axpy(next, h / 6.0, t);
        }
        {
            Spec3 t = f2;
            axpy(t, 1.0, f3);
            scale_by(t, e_half);
            axpy(next, h / 3.0, t);
        }
        axpy(next, h / 6.0, f4);
        return to_real(next);
    };

    SolverState out;
    out.nu = state.nu;
    out.dt = state.dt;
    out.step_index = state.step_index + 1;
    out.t = static_cast<double>(out.step_index) * state.dt;
    try {
        out.u = advance();
    } catch (const std::invalid_argument&) {
        // the input state was finite, so a non-finite intermediate is overflow
        // of the dynamics, not a caller error
        throw blow_up_error(out.step_index, out.t);
    }
    if (!all_finite(out.u)) throw blow_up_error(out.step_index, out.t);
    return out;
}

SolverState initial_state(const SolverConfig& config) {
    config.validate();
    const Grid3 grid(config.grid_n);
    VectorField u0;
    switch (config.init) {
        case InitKind::TaylorGreen: u0 = taylor_green(grid, config.amplitude); break;
        case InitKind::SingleMode: u0 = single_mode(grid, config.amplitude); break;
        case InitKind::RandomDivfree:
            u0 = random_divfree(grid, config.seed, config.slope, config.amplitude);
            break;
        case InitKind::File: {
            u0 = read_vector_field(config.field_file);
            if (!(u0.grid == grid))
                throw std::invalid_argument("field file grid does not match --grid");
            u0 = leray_project(u0);  // idempotent on already-solenoidal data
            break;
        }
    }
    const double umax = max_abs(u0);
    if (umax > 0.0 && config.dt > 0.5 * grid.min_spacing() / umax) {
        std::cerr << "warning: dt = " << config.dt << " exceeds the CFL advisory "
                  << 0.5 * grid.min_spacing() / umax << " (max |u0| = " << umax << ")\n";
    }
    return SolverState{0.0, std::move(u0), config.nu, config.dt, 0};
}

TrajectorySummary run(const SolverConfig& config,
                      const std::function<void(const SolverState&)>& hook) {
    SolverState state = initial_state(config);
    const long nsteps = static_cast<long>(std::ceil(config.t_end / config.dt - 1e-9));
    if (hook) hook(state);
    for (long k = 1; k <= nsteps; ++k) {
        state = step(state, config.dealias);
        if (hook && (k % config.stride == 0 || k == nsteps)) hook(state);
    }
    return TrajectorySummary{nsteps, state.t};
}

}  // namespace nslab

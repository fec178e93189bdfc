#pragma once

#include <vector>

#include "nslab/field.hpp"
#include "nslab/mixed_norm.hpp"
#include "nslab/solver.hpp"

namespace nslab {

/// One time slice of every tracked quantity. The first 16 fields are the CSV
/// schema, in order; the remaining fields are kept for summaries and checks
/// but are not emitted per row.
struct MonitorRecord {
    double t = 0.0;
    double energy = 0.0;        // ||u||_L2^2
    double grad_sq = 0.0;       // ||grad u||_L2^2
    double d3u_sq = 0.0;        // ||d3 u||_L2^2
    double grad_d3u_sq = 0.0;   // ||grad d3 u||_L2^2
    double mixed = 0.0;         // mixed_norm(|d3 u|, p, q, r)
    double beta = 0.0;
    double integrand = 0.0;     // mixed^beta / (1 + ln(||d3 u|| + e)); mixed itself in sup mode
    double cumulative = 0.0;    // trapezoid integral, or running sup in sup mode
    double F = 0.0;             // ln(||d3 u||_L2^2 + e)
    double trilinear = 0.0;     // -int d3u . grad u . d3u
    double h1_trilinear = 0.0;  // int u . grad u . lap u
    double audit24_a = 0.0;
    double audit24_b = 0.0;
    double audit210_lhs = 0.0;
    double audit210_rhs = 0.0;

    // not part of the CSV schema
    double audit24_c = 0.0;       // constant-bearing bound, reported only
    double audit210_lemma = 0.0;  // constant-bearing bound, reported only
    bool audit24_ok = true;
    bool audit210_ok = true;
    double diss_cumulative = 0.0;  // trapezoid of 2 nu ||grad u||^2
};

/// Integrand of the regularity criterion at one instant. Requires a finite
/// beta; on the boundary tuple (1/p+1/q+1/r = 1) throws std::domain_error
/// directing callers to sup-mode reporting.
double criterion_integrand(const VectorField& u, const MixedExponents& exps);

/// Recompute the running trapezoid integral of `integrand` over the sample
/// times, in place. Rejects non-monotone times.
void accumulate(std::vector<MonitorRecord>& records);

/// -sum_{i,j} int (d3 u_i)(d_i u_j)(d3 u_j) dx by quadrature.
double trilinear_d3(const VectorField& u);

struct Audit24Row {
    double a = 0.0;  // |trilinear_d3|
    double b = 0.0;  // mixed(|d3u|; p,q,r) * mixed(|d3u|; conjugates) * ||grad u||
    double c = 0.0;  // Lemma-substituted bound with ||d_i d3 u|| powers (constant-bearing)
    bool holder_ok = true;  // a <= b within 1e-10 relative slack
};
Audit24Row audit_chain_24(const VectorField& u, const MixedExponents& exps);

struct Audit210Row {
    double h1_trilinear = 0.0;
    double lhs = 0.0;            // ||grad u||_L3^3
    double rhs = 0.0;            // ||grad u||_L2^{3/2} ||grad u||_L6^{3/2}
    double lemma_product = 0.0;  // ||grad u||^{3/2} prod ||grad d_i u||^{1/2} (constant-bearing)
    bool interp_ok = true;       // lhs <= rhs within 1e-10 relative slack
};
Audit210Row audit_chain_210(const VectorField& u);

/// (E_{n+1} - E_n)/(2 dt) + nu * avg(grad_sq): the sampled defect of the
/// energy identity.
double energy_residual(const MonitorRecord& r0, const MonitorRecord& r1, double dt, double nu);

struct EnergyInequality {
    bool holds = true;
    double slack = 0.0;  // E(0) - E(t) - 2 nu int ||grad u||^2
};
/// Checks E(t) + 2 nu int_0^t ||grad u||^2 <= E(0) with 1e-6 relative slack.
EnergyInequality energy_inequality_check(const MonitorRecord& rec, const MonitorRecord& initial);

/// Sequential record builder driven by the solver hook. On the beta = inf
/// boundary the integrand column holds the mixed norm itself and `cumulative`
/// its running sup (sup-mode reporting); both pathways keep `cumulative`
/// non-decreasing.
class Monitor {
public:
    Monitor(MixedExponents exps, double nu);

    void observe(const SolverState& state);

    const std::vector<MonitorRecord>& records() const { return records_; }
    const MixedExponents& exponents() const { return exps_; }
    bool sup_mode() const { return exps_.boundary(); }
    double nu() const { return nu_; }

    int audit24_failures() const { return audit24_fail_; }
    int audit210_failures() const { return audit210_fail_; }
    int energy_inequality_failures() const { return energy_fail_; }
    double final_cumulative() const;
    double max_integrand() const;

private:
    MixedExponents exps_;
    double nu_;
    std::vector<MonitorRecord> records_;
    int audit24_fail_ = 0;
    int audit210_fail_ = 0;
    int energy_fail_ = 0;
};

}  // namespace nslab

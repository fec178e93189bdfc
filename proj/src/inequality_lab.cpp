#include "nslab/inequality_lab.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "nslab/errors.hpp"
#include "nslab/mixed_norm.hpp"
#include "nslab/norms.hpp"
#include "nslab/spectral.hpp"

namespace nslab {

namespace {

constexpr double kDegenerateTol = 1e-13;

void check_ge_one(double e, const char* name) {
    if (std::isnan(e) || std::isinf(e) || !(e >= 1.0))
        throw std::invalid_argument(std::string(name) + " must be a finite real >= 1");
}

std::string family_label(const char* lemma, const TestFunctionSpec& spec,
                         std::initializer_list<double> exps) {
    std::ostringstream os;
    os << lemma << "[" << to_string(spec.kind);
    for (double e : exps) {
        os << ",";
        if (std::isinf(e))
            os << "inf";
        else
            os << e;
    }
    os << "]";
    return os.str();
}

template <typename RatioFn>
RatioReport run_family_impl(std::string label, const TestFunctionSpec& spec, int samples,
                            const std::vector<int>& grids, RatioFn&& ratio_fn) {
    if (samples < 1) throw std::invalid_argument("run_family: samples must be >= 1");
    if (grids.empty()) throw std::invalid_argument("run_family: need at least one grid");
    RatioReport report;
    report.family = std::move(label);
    report.samples = samples;
    report.grids = grids;
    report.sup_per_grid.assign(grids.size(), 0.0);
    for (int s = 0; s < samples; ++s) {
        const TestFunction fn = make_test_function(spec, static_cast<std::uint64_t>(s));
        for (std::size_t gi = 0; gi < grids.size(); ++gi) {
            const Grid3 grid(grids[gi]);
            const ScalarField f = sample_on_grid(fn, grid);
            RatioSample row;
            row.sample = s;
            row.grid_n = grids[gi];
            try {
                ratio_fn(f, row);
            } catch (const degenerate_input_error& e) {
                throw degenerate_input_error(
                    std::string(e.what()) + " (sample " + std::to_string(s) + ")", s);
            }
            report.rows.push_back(row);
            report.sup_per_grid[gi] = std::max(report.sup_per_grid[gi], row.ratio);
            report.sup = std::max(report.sup, row.ratio);
        }
    }
    if (grids.size() > 1 && report.sup_per_grid.front() > 0.0) {
        report.drift = std::abs(report.sup_per_grid.back() - report.sup_per_grid.front()) /
                       report.sup_per_grid.front();
    }
    return report;
}

}  // namespace

Lemma2Exponents::Lemma2Exponents(double theta, double lambda, double kappa)
    : theta_(theta), lambda_(lambda), kappa_(kappa) {
    check_ge_one(theta, "theta");
    check_ge_one(lambda, "lambda");
    check_ge_one(kappa, "kappa");
    const double s = 1.0 / theta + 1.0 / lambda + 1.0 / kappa;
    if (!(s > 1.0 + 1e-12))
        throw std::invalid_argument("Lemma2Exponents: 1/theta + 1/lambda + 1/kappa must exceed 1");
    mu_ = 3.0 / (s - 1.0);
}

double lemma1_ratio(const ScalarField& f, double p, double q, double r) {
    // beta_of validates the exponent range, boundary (s = 1) included.
    (void)beta_of(p, q, r);
    const double s = 1.0 / p + 1.0 / q + 1.0 / r;

    const auto conj = conjugate_exponents(p, q, r);
    const double lhs = mixed_norm(f, conj[0], conj[1], conj[2]);

    const double nf = l2_norm(f);
    if (nf == 0.0) throw degenerate_input_error("lemma1_ratio: f is identically zero");
    const std::array<double, 3> exps{1.0 / p, 1.0 / q, 1.0 / r};
    double rhs = std::pow(nf, 1.0 - s);
    for (int axis = 1; axis <= 3; ++axis) {
        if (exps[axis - 1] == 0.0) continue;  // infinite exponent: factor is 1
        const double dn = l2_norm(spectral_derivative(f, axis));
        if (dn < kDegenerateTol * nf)
            throw degenerate_input_error("lemma1_ratio: f is constant along axis " +
                                         std::to_string(axis));
        rhs *= std::pow(dn, exps[axis - 1]);
    }
    return lhs / rhs;
}

double lemma2_ratio(const ScalarField& phi, const Lemma2Exponents& exps) {
    const double lhs = lp_norm(phi, exps.mu());
    if (lhs == 0.0) throw degenerate_input_error("lemma2_ratio: phi is identically zero");
    const std::array<double, 3> es{exps.theta(), exps.lambda(), exps.kappa()};
    double rhs = 1.0;
    for (int axis = 1; axis <= 3; ++axis) {
        const double dn = lp_norm(spectral_derivative(phi, axis), es[axis - 1]);
        if (dn < kDegenerateTol * lhs)
            throw degenerate_input_error("lemma2_ratio: phi is constant along axis " +
                                         std::to_string(axis));
        rhs *= std::cbrt(dn);
    }
    return lhs / rhs;
}

RatioReport run_family_lemma1(const TestFunctionSpec& spec, double p, double q, double r,
                              int samples, const std::vector<int>& grids) {
    return run_family_impl(family_label("lemma1", spec, {p, q, r}), spec, samples, grids,
                           [&](const ScalarField& f, RatioSample& row) {
                               row.ratio = lemma1_ratio(f, p, q, r);
                               const auto conj = conjugate_exponents(p, q, r);
                               row.lhs = mixed_norm(f, conj[0], conj[1], conj[2]);
                               row.rhs = row.lhs / row.ratio;
                           });
}

RatioReport run_family_lemma2(const TestFunctionSpec& spec, const Lemma2Exponents& exps,
                              int samples, const std::vector<int>& grids) {
    return run_family_impl(
        family_label("lemma2", spec, {exps.theta(), exps.lambda(), exps.kappa()}), spec,
        samples, grids, [&](const ScalarField& f, RatioSample& row) {
            row.ratio = lemma2_ratio(f, exps);
            row.lhs = lp_norm(f, exps.mu());
            row.rhs = row.lhs / row.ratio;
        });
}

}  // namespace nslab

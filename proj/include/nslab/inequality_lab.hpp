#pragma once

#include <string>
#include <vector>

#include "nslab/field.hpp"
#include "nslab/test_functions.hpp"

namespace nslab {

/// Exponents (theta, lambda, kappa) with mu from 1 + 3/mu = 1/theta + 1/lambda + 1/kappa.
/// Requires theta, lambda, kappa >= 1 and 1/theta + 1/lambda + 1/kappa > 1.
class Lemma2Exponents {
public:
    Lemma2Exponents(double theta, double lambda, double kappa);

    double theta() const { return theta_; }
    double lambda() const { return lambda_; }
    double kappa() const { return kappa_; }
    double mu() const { return mu_; }

private:
    double theta_, lambda_, kappa_, mu_;
};

/// Ratio of the anisotropic embedding: mixed_norm(f; 2p/(p-2), 2q/(q-2), 2r/(r-2))
/// over ||d1 f||^(1/p) ||d2 f||^(1/q) ||d3 f||^(1/r) ||f||^(1-1/p-1/q-1/r), all L2.
/// Derivatives are spectral. Throws degenerate_input_error when a derivative
/// factor with positive exponent vanishes (f constant along that axis).
double lemma1_ratio(const ScalarField& f, double p, double q, double r);

/// Ratio ||phi||_{L^mu} / prod ||d_i phi||_{L^{theta/lambda/kappa}}^{1/3}.
double lemma2_ratio(const ScalarField& phi, const Lemma2Exponents& exps);

struct RatioSample {
    int sample;
    int grid_n;
    double lhs;
    double rhs;
    double ratio;
};

/// Per-family empirical record of inequality ratios. `sup` is the largest
/// ratio over all samples and grids (an empirical lower bound for the
/// inequality constant); `drift` compares the per-grid sups of the coarsest
/// and finest grids.
struct RatioReport {
    std::string family;
    int samples = 0;
    std::vector<int> grids;
    std::vector<RatioSample> rows;      // ordered by (sample, grid)
    std::vector<double> sup_per_grid;   // aligned with `grids`
    double sup = 0.0;
    double drift = 0.0;
};

RatioReport run_family_lemma1(const TestFunctionSpec& spec, double p, double q, double r,
                              int samples, const std::vector<int>& grids);

RatioReport run_family_lemma2(const TestFunctionSpec& spec, const Lemma2Exponents& exps,
                              int samples, const std::vector<int>& grids);

}  // namespace nslab

#pragma once

#include <complex>
#include <vector>

#include "nslab/field.hpp"
#include "nslab/grid.hpp"

namespace nslab {

/// Fourier coefficients c_k over k in Z^3 with |k_i| <= n_i/2, stored on the
/// same x1-fastest layout as sample arrays (coefficient index j_i maps to
/// wavenumber j_i for j_i <= n_i/2 and j_i - n_i above). Normalized so that
/// f(x) = sum_k c_k exp(i k.x).
struct SpectralField {
    Grid3 grid;
    std::vector<std::complex<double>> coeff;

    SpectralField() = default;
    explicit SpectralField(const Grid3& g) : grid(g), coeff(g.size(), {0.0, 0.0}) {}

    std::complex<double>& at(int j1, int j2, int j3) { return coeff[grid.index(j1, j2, j3)]; }
    const std::complex<double>& at(int j1, int j2, int j3) const {
        return coeff[grid.index(j1, j2, j3)];
    }
};

/// Wavenumber for coefficient index j on an axis with n samples.
inline int wavenumber(int j, int n) { return j <= n / 2 ? j : j - n; }

/// Largest wavenumber kept by the 2/3-rule mask: the biggest k with 3k <= n-1,
/// so that quadratic products of masked fields are alias-free on the kept modes.
inline int dealias_limit(int n) { return (n - 1) / 3; }

SpectralField forward_transform(const ScalarField& f);
ScalarField inverse_transform(const SpectralField& c);

/// Multiply by i*k_axis; the Nyquist plane of that axis is zeroed.
void derivative_inplace(SpectralField& c, int axis);

/// Multiply by -|k|^2 with per-axis Nyquist planes zeroed, matching the
/// composition of two derivative_inplace calls per axis.
void laplacian_inplace(SpectralField& c);

/// Zero every mode with |k_i| > dealias_limit(n_i) on any axis.
void dealias_inplace(SpectralField& c);

/// In-place Leray projection c -= k (k.c)/|k|^2; the k = 0 mode is untouched.
void leray_project_inplace(SpectralField& c1, SpectralField& c2, SpectralField& c3);

/// d f / d x_axis via the spectral rule, axis in {1,2,3}.
ScalarField spectral_derivative(const ScalarField& f, int axis);

ScalarField divergence(const VectorField& u);
VectorField leray_project(const VectorField& u);

/// L2 norm of the coefficient array under the box measure,
/// sqrt((2*pi)^3 * sum |c_k|^2); equals the quadrature L2 norm by Parseval.
double spectral_l2(const SpectralField& c);

/// Max Hermitian-symmetry defect |c(-k) - conj(c(k))| over all modes.
double hermitian_defect(const SpectralField& c);

}  // namespace nslab

#include "nslab/initial_fields.hpp"

#include <cmath>
#include <stdexcept>

#include "nslab/rng.hpp"
#include "nslab/spectral.hpp"

namespace nslab {

VectorField taylor_green(const Grid3& grid, double amplitude) {
    if (amplitude == 0.0) throw std::invalid_argument("taylor_green: amplitude must be nonzero");
    VectorField u(grid);
    std::size_t idx = 0;
    for (int i3 = 0; i3 < grid.n3; ++i3) {
        const double c3 = std::cos(grid.x3(i3));
        for (int i2 = 0; i2 < grid.n2; ++i2) {
            const double s2 = std::sin(grid.x2(i2));
            const double c2 = std::cos(grid.x2(i2));
            for (int i1 = 0; i1 < grid.n1; ++i1, ++idx) {
                const double s1 = std::sin(grid.x1(i1));
                const double c1 = std::cos(grid.x1(i1));
                u.u1.values[idx] = amplitude * s1 * c2 * c3;
                u.u2.values[idx] = -amplitude * c1 * s2 * c3;
                u.u3.values[idx] = 0.0;
            }
        }
    }
    return u;
}

VectorField single_mode(const Grid3& grid, double amplitude) {
    VectorField u(grid);
    std::size_t idx = 0;
    for (int i3 = 0; i3 < grid.n3; ++i3)
        for (int i2 = 0; i2 < grid.n2; ++i2)
            for (int i1 = 0; i1 < grid.n1; ++i1, ++idx)
                u.u3.values[idx] = amplitude * std::sin(grid.x1(i1));
    return u;
}

VectorField random_divfree(const Grid3& grid, std::uint64_t seed, double slope,
                           double amplitude) {
    Rng rng(seed);
    const int b1 = std::max(1, grid.n1 / 4);
    const int b2 = std::max(1, grid.n2 / 4);
    const int b3 = std::max(1, grid.n3 / 4);

    SpectralField c1(grid), c2(grid), c3(grid);
    // Fill one half-space and mirror, so the coefficients are exactly Hermitian
    // and the inverse transform is real to machine precision. Iteration order
    // is fixed by the (k3, k2, k1) loops, making the draw fully deterministic.
    for (int k3 = -b3; k3 <= b3; ++k3) {
        for (int k2 = -b2; k2 <= b2; ++k2) {
            for (int k1 = -b1; k1 <= b1; ++k1) {
                if (k3 < 0) continue;
                if (k3 == 0 && k2 < 0) continue;
                if (k3 == 0 && k2 == 0 && k1 <= 0) continue;  // k = 0 stays zero: mean-free
                const double kmag = std::sqrt(double(k1 * k1 + k2 * k2 + k3 * k3));
                const double mag = std::pow(kmag, slope);
                const std::complex<double> a1(mag * rng.normal(), mag * rng.normal());
                const std::complex<double> a2(mag * rng.normal(), mag * rng.normal());
                const std::complex<double> a3(mag * rng.normal(), mag * rng.normal());
                const int j1 = (k1 + grid.n1) % grid.n1;
                const int j2 = (k2 + grid.n2) % grid.n2;
                const int j3 = (k3 + grid.n3) % grid.n3;
                const int m1 = (grid.n1 - j1) % grid.n1;
                const int m2 = (grid.n2 - j2) % grid.n2;
                const int m3 = (grid.n3 - j3) % grid.n3;
                c1.at(j1, j2, j3) = a1;
                c2.at(j1, j2, j3) = a2;
                c3.at(j1, j2, j3) = a3;
                c1.at(m1, m2, m3) = std::conj(a1);
                c2.at(m1, m2, m3) = std::conj(a2);
                c3.at(m1, m2, m3) = std::conj(a3);
            }
        }
    }
    leray_project_inplace(c1, c2, c3);

    VectorField u(grid);
    u.u1 = inverse_transform(c1);
    u.u2 = inverse_transform(c2);
    u.u3 = inverse_transform(c3);
    const double scale = rms(u);
    if (scale > 0.0) {
        const double s = amplitude / scale;
        for (std::size_t i = 0; i < u.u1.values.size(); ++i) {
            u.u1.values[i] *= s;
            u.u2.values[i] *= s;
            u.u3.values[i] *= s;
        }
    }
    return u;
}

}  // namespace nslab

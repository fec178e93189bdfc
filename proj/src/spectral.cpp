#include "nslab/spectral.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <tuple>

namespace nslab {

namespace {

// One forward/backward plan pair per grid shape, with persistent aligned
// buffers. FFTW_ESTIMATE keeps plan selection deterministic across runs.
// Plan creation and the shared buffers are not thread-safe; all callers in
// this project are single-threaded (see README).
struct PlanSet {
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    std::size_t n = 0;

    PlanSet(const PlanSet&) = delete;
    PlanSet& operator=(const PlanSet&) = delete;

    explicit PlanSet(const Grid3& g) : n(g.size()) {
        in = fftw_alloc_complex(n);
        out = fftw_alloc_complex(n);
        // x1 is the fastest-varying index, so it is FFTW's last dimension.
        fwd = fftw_plan_dft_3d(g.n3, g.n2, g.n1, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_3d(g.n3, g.n2, g.n1, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~PlanSet() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(in);
        fftw_free(out);
    }
};

PlanSet& plans_for(const Grid3& g) {
    static std::map<std::tuple<int, int, int>, PlanSet> cache;
    auto key = std::make_tuple(g.n1, g.n2, g.n3);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.try_emplace(key, g).first;
    return it->second;
}

}  // namespace

SpectralField forward_transform(const ScalarField& f) {
    require_finite(f, "forward_transform");
    PlanSet& ps = plans_for(f.grid);
    for (std::size_t i = 0; i < ps.n; ++i) {
        ps.in[i][0] = f.values[i];
        ps.in[i][1] = 0.0;
    }
    fftw_execute(ps.fwd);
    SpectralField c(f.grid);
    const double scale = 1.0 / static_cast<double>(ps.n);
    for (std::size_t i = 0; i < ps.n; ++i)
        c.coeff[i] = {ps.out[i][0] * scale, ps.out[i][1] * scale};
    return c;
}

ScalarField inverse_transform(const SpectralField& c) {
    PlanSet& ps = plans_for(c.grid);
    for (std::size_t i = 0; i < ps.n; ++i) {
        ps.in[i][0] = c.coeff[i].real();
        ps.in[i][1] = c.coeff[i].imag();
    }
    fftw_execute(ps.bwd);
    // Imaginary residue (roundoff for Hermitian inputs) is discarded.
    ScalarField f(c.grid);
    for (std::size_t i = 0; i < ps.n; ++i) f.values[i] = ps.out[i][0];
    return f;
}

void derivative_inplace(SpectralField& c, int axis) {
    if (axis < 1 || axis > 3)
        throw std::invalid_argument("derivative: axis must be 1, 2 or 3");
    const Grid3& g = c.grid;
    std::size_t idx = 0;
    for (int j3 = 0; j3 < g.n3; ++j3) {
        const int k3 = wavenumber(j3, g.n3);
        for (int j2 = 0; j2 < g.n2; ++j2) {
            const int k2 = wavenumber(j2, g.n2);
            for (int j1 = 0; j1 < g.n1; ++j1, ++idx) {
                const int k1 = wavenumber(j1, g.n1);
                int k = axis == 1 ? k1 : (axis == 2 ? k2 : k3);
                const int n = axis == 1 ? g.n1 : (axis == 2 ? g.n2 : g.n3);
                const int j = axis == 1 ? j1 : (axis == 2 ? j2 : j3);
                if (j == n / 2) k = 0;  // Nyquist zeroed under odd derivatives
                const std::complex<double> v = c.coeff[idx];
                c.coeff[idx] = {-static_cast<double>(k) * v.imag(),
                                static_cast<double>(k) * v.real()};
            }
        }
    }
}

void laplacian_inplace(SpectralField& c) {
    const Grid3& g = c.grid;
    std::size_t idx = 0;
    for (int j3 = 0; j3 < g.n3; ++j3) {
        const double k3 = j3 == g.n3 / 2 ? 0.0 : wavenumber(j3, g.n3);
        for (int j2 = 0; j2 < g.n2; ++j2) {
            const double k2 = j2 == g.n2 / 2 ? 0.0 : wavenumber(j2, g.n2);
            for (int j1 = 0; j1 < g.n1; ++j1, ++idx) {
                const double k1 = j1 == g.n1 / 2 ? 0.0 : wavenumber(j1, g.n1);
                c.coeff[idx] *= -(k1 * k1 + k2 * k2 + k3 * k3);
            }
        }
    }
}

void dealias_inplace(SpectralField& c) {
    const Grid3& g = c.grid;
    const int m1 = dealias_limit(g.n1);
    const int m2 = dealias_limit(g.n2);
    const int m3 = dealias_limit(g.n3);
    std::size_t idx = 0;
    for (int j3 = 0; j3 < g.n3; ++j3) {
        const bool cut3 = std::abs(wavenumber(j3, g.n3)) > m3;
        for (int j2 = 0; j2 < g.n2; ++j2) {
            const bool cut23 = cut3 || std::abs(wavenumber(j2, g.n2)) > m2;
            for (int j1 = 0; j1 < g.n1; ++j1, ++idx) {
                if (cut23 || std::abs(wavenumber(j1, g.n1)) > m1) c.coeff[idx] = {0.0, 0.0};
            }
        }
    }
}

void leray_project_inplace(SpectralField& c1, SpectralField& c2, SpectralField& c3) {
    const Grid3& g = c1.grid;
    if (!(c2.grid == g) || !(c3.grid == g))
        throw std::invalid_argument("leray_project: component grids differ");
    // Nyquist wavenumbers are zeroed, as in the derivative rule: the Nyquist
    // sign is not representable on both Hermitian partners, and a projector
    // that differs between partners would break the symmetry of real fields.
    std::size_t idx = 0;
    for (int j3 = 0; j3 < g.n3; ++j3) {
        const double k3 = j3 == g.n3 / 2 ? 0.0 : wavenumber(j3, g.n3);
        for (int j2 = 0; j2 < g.n2; ++j2) {
            const double k2 = j2 == g.n2 / 2 ? 0.0 : wavenumber(j2, g.n2);
            for (int j1 = 0; j1 < g.n1; ++j1, ++idx) {
                const double k1 = j1 == g.n1 / 2 ? 0.0 : wavenumber(j1, g.n1);
                const double ksq = k1 * k1 + k2 * k2 + k3 * k3;
                if (ksq == 0.0) continue;  // mean mode passes through
                const std::complex<double> kdotc =
                    (k1 * c1.coeff[idx] + k2 * c2.coeff[idx] + k3 * c3.coeff[idx]) / ksq;
                c1.coeff[idx] -= k1 * kdotc;
                c2.coeff[idx] -= k2 * kdotc;
                c3.coeff[idx] -= k3 * kdotc;
            }
        }
    }
}

ScalarField spectral_derivative(const ScalarField& f, int axis) {
    require_finite(f, "spectral_derivative");
    SpectralField c = forward_transform(f);
    derivative_inplace(c, axis);
    return inverse_transform(c);
}

ScalarField divergence(const VectorField& u) {
    require_finite(u, "divergence");
    SpectralField c1 = forward_transform(u.u1);
    SpectralField c2 = forward_transform(u.u2);
    SpectralField c3 = forward_transform(u.u3);
    derivative_inplace(c1, 1);
    derivative_inplace(c2, 2);
    derivative_inplace(c3, 3);
    for (std::size_t i = 0; i < c1.coeff.size(); ++i) c1.coeff[i] += c2.coeff[i] + c3.coeff[i];
    return inverse_transform(c1);
}

VectorField leray_project(const VectorField& u) {
    require_finite(u, "leray_project");
    SpectralField c1 = forward_transform(u.u1);
    SpectralField c2 = forward_transform(u.u2);
    SpectralField c3 = forward_transform(u.u3);
    leray_project_inplace(c1, c2, c3);
    VectorField out(u.grid);
    out.u1 = inverse_transform(c1);
    out.u2 = inverse_transform(c2);
    out.u3 = inverse_transform(c3);
    return out;
}

double spectral_l2(const SpectralField& c) {
    double s = 0.0;
    for (const auto& v : c.coeff) s += std::norm(v);
    return std::sqrt(kTwoPi * kTwoPi * kTwoPi * s);
}

double hermitian_defect(const SpectralField& c) {
    const Grid3& g = c.grid;
    double worst = 0.0;
    for (int j3 = 0; j3 < g.n3; ++j3) {
        const int m3 = (g.n3 - j3) % g.n3;
        for (int j2 = 0; j2 < g.n2; ++j2) {
            const int m2 = (g.n2 - j2) % g.n2;
            for (int j1 = 0; j1 < g.n1; ++j1) {
                const int m1 = (g.n1 - j1) % g.n1;
                const std::complex<double> d =
                    c.at(m1, m2, m3) - std::conj(c.at(j1, j2, j3));
                worst = std::max(worst, std::abs(d));
            }
        }
    }
    return worst;
}

}  // namespace nslab

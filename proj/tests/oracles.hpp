// Independent oracles for the test suites: verbatim nested-loop norm
// definitions, a brute-force spectral convolution for the advection term,
// finite differences, and axis-relabeling helpers. Everything here computes
// from first principles and stays off the library's optimized paths.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "nslab/field.hpp"
#include "nslab/grid.hpp"
#include "nslab/rng.hpp"
#include "nslab/spectral.hpp"

namespace oracles {

using nslab::Grid3;
using nslab::ScalarField;
using nslab::VectorField;

inline double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

inline ScalarField random_scalar_field(const Grid3& g, std::uint64_t seed) {
    nslab::Rng rng(seed);
    ScalarField f(g);
    for (auto& v : f.values) v = rng.uniform(-1.0, 1.0);
    return f;
}

// Quadrature of |f|^2 by explicit nested loops.
inline double quadrature_sq(const ScalarField& f) {
    const Grid3& g = f.grid;
    double s = 0.0;
    for (int i3 = 0; i3 < g.n3; ++i3)
        for (int i2 = 0; i2 < g.n2; ++i2)
            for (int i1 = 0; i1 < g.n1; ++i1) {
                const double v = f(i1, i2, i3);
                s += v * v;
            }
    return s * g.h1() * g.h2() * g.h3();
}

inline double l2(const ScalarField& f) { return std::sqrt(quadrature_sq(f)); }

// L^s norm, brute force; s = inf as grid max.
inline double lp(const ScalarField& f, double s) {
    if (std::isinf(s)) {
        double m = 0.0;
        for (double v : f.values) m = std::max(m, std::abs(v));
        return m;
    }
    const Grid3& g = f.grid;
    double acc = 0.0;
    for (int i3 = 0; i3 < g.n3; ++i3)
        for (int i2 = 0; i2 < g.n2; ++i2)
            for (int i1 = 0; i1 < g.n1; ++i1) acc += std::pow(std::abs(f(i1, i2, i3)), s);
    return std::pow(acc * g.h1() * g.h2() * g.h3(), 1.0 / s);
}

// Verbatim nested reduction of the anisotropic norm definition: the L^p
// reduction over every x1 line into a 2D array, then L^q over x2 into a 1D
// array, then L^r over x3.
inline double mixed(const ScalarField& f, double p, double q, double r) {
    const Grid3& g = f.grid;
    std::vector<std::vector<double>> lines(g.n3, std::vector<double>(g.n2, 0.0));
    for (int i3 = 0; i3 < g.n3; ++i3) {
        for (int i2 = 0; i2 < g.n2; ++i2) {
            if (std::isinf(p)) {
                double m = 0.0;
                for (int i1 = 0; i1 < g.n1; ++i1) m = std::max(m, std::abs(f(i1, i2, i3)));
                lines[i3][i2] = m;
            } else {
                double acc = 0.0;
                for (int i1 = 0; i1 < g.n1; ++i1) acc += std::pow(std::abs(f(i1, i2, i3)), p);
                lines[i3][i2] = std::pow(acc * g.h1(), 1.0 / p);
            }
        }
    }
    std::vector<double> planes(g.n3, 0.0);
    for (int i3 = 0; i3 < g.n3; ++i3) {
        if (std::isinf(q)) {
            double m = 0.0;
            for (int i2 = 0; i2 < g.n2; ++i2) m = std::max(m, lines[i3][i2]);
            planes[i3] = m;
        } else {
            double acc = 0.0;
            for (int i2 = 0; i2 < g.n2; ++i2) acc += std::pow(lines[i3][i2], q);
            planes[i3] = std::pow(acc * g.h2(), 1.0 / q);
        }
    }
    if (std::isinf(r)) {
        double m = 0.0;
        for (int i3 = 0; i3 < g.n3; ++i3) m = std::max(m, planes[i3]);
        return m;
    }
    double acc = 0.0;
    for (int i3 = 0; i3 < g.n3; ++i3) acc += std::pow(planes[i3], r);
    return std::pow(acc * g.h3(), 1.0 / r);
}

// 4th-order centered finite difference along an axis, periodic wrap.
inline ScalarField fd4_derivative(const ScalarField& f, int axis) {
    const Grid3& g = f.grid;
    ScalarField out(g);
    const int n = axis == 1 ? g.n1 : (axis == 2 ? g.n2 : g.n3);
    const double h = nslab::kTwoPi / n;
    auto sample = [&](int i1, int i2, int i3, int off) {
        int j1 = i1, j2 = i2, j3 = i3;
        int* ji = axis == 1 ? &j1 : (axis == 2 ? &j2 : &j3);
        *ji = ((*ji + off) % n + n) % n;
        return f(j1, j2, j3);
    };
    for (int i3 = 0; i3 < g.n3; ++i3)
        for (int i2 = 0; i2 < g.n2; ++i2)
            for (int i1 = 0; i1 < g.n1; ++i1)
                out(i1, i2, i3) = (-sample(i1, i2, i3, 2) + 8.0 * sample(i1, i2, i3, 1) -
                                   8.0 * sample(i1, i2, i3, -1) + sample(i1, i2, i3, -2)) /
                                  (12.0 * h);
    return out;
}

// Axis relabeling (x1 <-> x2). For vectors the components swap too, so a
// relabeled solenoidal field stays solenoidal.
inline ScalarField relabel12(const ScalarField& f) {
    const Grid3& g = f.grid;
    ScalarField out(Grid3(g.n2, g.n1, g.n3));
    for (int i3 = 0; i3 < g.n3; ++i3)
        for (int i2 = 0; i2 < g.n2; ++i2)
            for (int i1 = 0; i1 < g.n1; ++i1) out(i2, i1, i3) = f(i1, i2, i3);
    return out;
}

inline VectorField relabel12(const VectorField& u) {
    VectorField out(Grid3(u.grid.n2, u.grid.n1, u.grid.n3));
    out.u1 = relabel12(u.u2);
    out.u2 = relabel12(u.u1);
    out.u3 = relabel12(u.u3);
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force spectral advection. Coefficients come from a direct DFT sum,
// the quadratic term from a literal (non-circular) convolution over the
// dealias-masked mode set, and the result is evaluated back on the grid by
// direct trigonometric summation. No FFT anywhere.
// ---------------------------------------------------------------------------
class DirectAdvection {
public:
    explicit DirectAdvection(const Grid3& g)
        : g_(g),
          b1_(nslab::dealias_limit(g.n1)),
          b2_(nslab::dealias_limit(g.n2)),
          b3_(nslab::dealias_limit(g.n3)),
          d1_(2 * b1_ + 1),
          d2_(2 * b2_ + 1),
          d3_(2 * b3_ + 1) {}

    VectorField rhs(const VectorField& u) const {
        std::array<Modes, 3> uh{dft(u.u1), dft(u.u2), dft(u.u3)};
        std::array<Modes, 3> wh;
        for (auto& w : wh) w.assign(d1_ * d2_ * d3_, {0.0, 0.0});

        // w_j(k) = sum_{k' + k'' = k} sum_i u_i(k') * (i k''_i) * u_j(k'')
        for (int a3 = -b3_; a3 <= b3_; ++a3)
            for (int a2 = -b2_; a2 <= b2_; ++a2)
                for (int a1 = -b1_; a1 <= b1_; ++a1)
                    for (int c3 = -b3_; c3 <= b3_; ++c3)
                        for (int c2 = -b2_; c2 <= b2_; ++c2)
                            for (int c1 = -b1_; c1 <= b1_; ++c1) {
                                const int k1 = a1 + c1, k2 = a2 + c2, k3 = a3 + c3;
                                if (std::abs(k1) > b1_ || std::abs(k2) > b2_ ||
                                    std::abs(k3) > b3_)
                                    continue;
                                const std::complex<double> grad_factor =
                                    uh[0][at(a1, a2, a3)] * std::complex<double>(0, c1) +
                                    uh[1][at(a1, a2, a3)] * std::complex<double>(0, c2) +
                                    uh[2][at(a1, a2, a3)] * std::complex<double>(0, c3);
                                for (int j = 0; j < 3; ++j)
                                    wh[j][at(k1, k2, k3)] += grad_factor * uh[j][at(c1, c2, c3)];
                            }

        // Leray projection and sign, then back to the grid.
        for (int k3 = -b3_; k3 <= b3_; ++k3)
            for (int k2 = -b2_; k2 <= b2_; ++k2)
                for (int k1 = -b1_; k1 <= b1_; ++k1) {
                    const double ksq = double(k1 * k1 + k2 * k2 + k3 * k3);
                    const std::size_t i = at(k1, k2, k3);
                    if (ksq > 0.0) {
                        const std::complex<double> kd =
                            (double(k1) * wh[0][i] + double(k2) * wh[1][i] +
                             double(k3) * wh[2][i]) /
                            ksq;
                        wh[0][i] -= double(k1) * kd;
                        wh[1][i] -= double(k2) * kd;
                        wh[2][i] -= double(k3) * kd;
                    }
                    for (int j = 0; j < 3; ++j) wh[j][i] = -wh[j][i];
                }

        VectorField out(g_);
        out.u1 = evaluate(wh[0]);
        out.u2 = evaluate(wh[1]);
        out.u3 = evaluate(wh[2]);
        return out;
    }

private:
    using Modes = std::vector<std::complex<double>>;

    std::size_t at(int k1, int k2, int k3) const {
        return static_cast<std::size_t>(k1 + b1_) +
               static_cast<std::size_t>(d1_) *
                   (static_cast<std::size_t>(k2 + b2_) +
                    static_cast<std::size_t>(d2_) * static_cast<std::size_t>(k3 + b3_));
    }

    Modes dft(const ScalarField& f) const {
        Modes m(d1_ * d2_ * d3_, {0.0, 0.0});
        const double scale = 1.0 / static_cast<double>(g_.size());
        for (int k3 = -b3_; k3 <= b3_; ++k3)
            for (int k2 = -b2_; k2 <= b2_; ++k2)
                for (int k1 = -b1_; k1 <= b1_; ++k1) {
                    std::complex<double> acc{0.0, 0.0};
                    for (int i3 = 0; i3 < g_.n3; ++i3)
                        for (int i2 = 0; i2 < g_.n2; ++i2)
                            for (int i1 = 0; i1 < g_.n1; ++i1) {
                                const double phase =
                                    k1 * g_.x1(i1) + k2 * g_.x2(i2) + k3 * g_.x3(i3);
                                acc += f(i1, i2, i3) *
                                       std::complex<double>(std::cos(phase), -std::sin(phase));
                            }
                    m[at(k1, k2, k3)] = acc * scale;
                }
        return m;
    }

    ScalarField evaluate(const Modes& m) const {
        ScalarField f(g_);
        for (int i3 = 0; i3 < g_.n3; ++i3)
            for (int i2 = 0; i2 < g_.n2; ++i2)
                for (int i1 = 0; i1 < g_.n1; ++i1) {
                    std::complex<double> acc{0.0, 0.0};
                    for (int k3 = -b3_; k3 <= b3_; ++k3)
                        for (int k2 = -b2_; k2 <= b2_; ++k2)
                            for (int k1 = -b1_; k1 <= b1_; ++k1) {
                                const double phase =
                                    k1 * g_.x1(i1) + k2 * g_.x2(i2) + k3 * g_.x3(i3);
                                acc += m[at(k1, k2, k3)] *
                                       std::complex<double>(std::cos(phase), std::sin(phase));
                            }
                    f(i1, i2, i3) = acc.real();
                }
        return f;
    }

    Grid3 g_;
    int b1_, b2_, b3_;
    int d1_, d2_, d3_;
};

}  // namespace oracles

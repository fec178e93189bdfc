#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nslab/grid.hpp"

namespace nslab {

/// Real-valued samples on a Grid3, x1-fastest order.
struct ScalarField {
    Grid3 grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid3& g) : grid(g), values(g.size(), 0.0) {}

    double& operator()(int i1, int i2, int i3) { return values[grid.index(i1, i2, i3)]; }
    double operator()(int i1, int i2, int i3) const { return values[grid.index(i1, i2, i3)]; }
};

/// Three-component velocity-style field. Divergence-free only after leray_project.
struct VectorField {
    Grid3 grid;
    ScalarField u1, u2, u3;

    VectorField() = default;
    explicit VectorField(const Grid3& g) : grid(g), u1(g), u2(g), u3(g) {}

    ScalarField& component(int j) {
        switch (j) {
            case 1: return u1;
            case 2: return u2;
            case 3: return u3;
        }
        throw std::invalid_argument("VectorField: component index must be 1, 2 or 3");
    }
    const ScalarField& component(int j) const {
        return const_cast<VectorField*>(this)->component(j);
    }
};

inline bool all_finite(const ScalarField& f) {
    for (double v : f.values)
        if (!std::isfinite(v)) return false;
    return true;
}

inline bool all_finite(const VectorField& u) {
    return all_finite(u.u1) && all_finite(u.u2) && all_finite(u.u3);
}

inline void require_finite(const ScalarField& f, const char* op) {
    if (!all_finite(f))
        throw std::invalid_argument(std::string(op) + ": input field has non-finite samples");
}

inline void require_finite(const VectorField& u, const char* op) {
    if (!all_finite(u))
        throw std::invalid_argument(std::string(op) + ": input field has non-finite samples");
}

inline double max_abs(const ScalarField& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

/// Pointwise Euclidean magnitude of the three components.
inline ScalarField magnitude(const VectorField& u) {
    ScalarField m(u.grid);
    for (std::size_t i = 0; i < m.values.size(); ++i) {
        const double a = u.u1.values[i];
        const double b = u.u2.values[i];
        const double c = u.u3.values[i];
        m.values[i] = std::sqrt(a * a + b * b + c * c);
    }
    return m;
}

inline double max_abs(const VectorField& u) { return max_abs(magnitude(u)); }

/// Root-mean-square of the pointwise magnitude over all samples.
inline double rms(const VectorField& u) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.u1.values.size(); ++i) {
        s += u.u1.values[i] * u.u1.values[i] + u.u2.values[i] * u.u2.values[i] +
             u.u3.values[i] * u.u3.values[i];
    }
    return std::sqrt(s / static_cast<double>(u.grid.size()));
}

inline double rms(const ScalarField& f) {
    double s = 0.0;
    for (double v : f.values) s += v * v;
    return std::sqrt(s / static_cast<double>(f.grid.size()));
}

}  // namespace nslab

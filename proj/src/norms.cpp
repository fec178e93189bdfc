#include "nslab/norms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nslab {

double l2_norm(const ScalarField& f) {
    require_finite(f, "l2_norm");
    double s = 0.0;
    for (double v : f.values) s += v * v;
    return std::sqrt(s * f.grid.cell_volume());
}

double l2_norm(const VectorField& u) {
    require_finite(u, "l2_norm");
    double s = 0.0;
    for (std::size_t i = 0; i < u.u1.values.size(); ++i) {
        s += u.u1.values[i] * u.u1.values[i] + u.u2.values[i] * u.u2.values[i] +
             u.u3.values[i] * u.u3.values[i];
    }
    return std::sqrt(s * u.grid.cell_volume());
}

double lp_norm(const ScalarField& f, double s) {
    require_finite(f, "lp_norm");
    if (std::isinf(s)) return max_abs(f);
    if (!(s >= 1.0)) throw std::invalid_argument("lp_norm: exponent must be >= 1 or inf");
    double acc = 0.0;
    if (s == 2.0) {
        for (double v : f.values) acc += v * v;
    } else {
        for (double v : f.values) acc += std::pow(std::abs(v), s);
    }
    return std::pow(acc * f.grid.cell_volume(), 1.0 / s);
}

}  // namespace nslab

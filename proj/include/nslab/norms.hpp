#pragma once

#include "nslab/field.hpp"

namespace nslab {

/// Rectangle-rule L2 norm, sqrt(sum |f|^2 h1 h2 h3).
double l2_norm(const ScalarField& f);

/// Vector L2 norm with the components summed under the square root.
double l2_norm(const VectorField& u);

/// Quadrature L^s norm for s in [1, inf]; s = inf is the grid max of |f|.
double lp_norm(const ScalarField& f, double s);

}  // namespace nslab

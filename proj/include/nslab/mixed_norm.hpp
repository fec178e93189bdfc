#pragma once

#include <array>

#include "nslab/field.hpp"

namespace nslab {

/// Anisotropic norm || || ||f||_{L^p_x1} ||_{L^q_x2} ||_{L^r_x3}: an L^p
/// reduction along x1 lines, then L^q across x2, then L^r across x3.
/// Exponents lie in (0, inf]; an infinite exponent takes the max over that
/// axis's samples. Finite reductions use the rectangle rule.
double mixed_norm(const ScalarField& f, double p, double q, double r);

/// Per-axis map p -> 2p/(p-2) for p in (2, inf]; infinity maps to 2.
std::array<double, 3> conjugate_exponents(double p, double q, double r);
double conjugate_exponent(double p);

struct Beta {
    double value;   // inf on the boundary 1/p+1/q+1/r = 1
    bool boundary;  // true when the time exponent degenerates to sup-in-time
};

/// Time exponent from 2/beta + 1/p + 1/q + 1/r = 1. Requires p,q,r in (2, inf]
/// and 1/p+1/q+1/r <= 1 (tolerance 1e-12 on the boundary).
Beta beta_of(double p, double q, double r);

/// Validated (p, q, r, beta) tuple for the regularity criterion.
class MixedExponents {
public:
    MixedExponents(double p, double q, double r);

    double p() const { return p_; }
    double q() const { return q_; }
    double r() const { return r_; }
    double inv_sum() const { return s_; }
    double beta() const { return beta_; }
    bool boundary() const { return boundary_; }

private:
    double p_, q_, r_, s_, beta_;
    bool boundary_;
};

}  // namespace nslab

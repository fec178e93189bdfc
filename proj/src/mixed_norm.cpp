#include "nslab/mixed_norm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nslab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBoundaryTol = 1e-12;  // classifies 1/p+1/q+1/r = 1

void check_positive(double e, const char* name) {
    if (std::isinf(e) && e > 0) return;
    if (!(e > 0.0) || std::isnan(e))
        throw std::invalid_argument(std::string("mixed_norm: exponent ") + name +
                                    " must be positive or inf");
}

// |v|^p with fast paths for the common small integer exponents.
inline double pow_abs(double v, double p) {
    const double a = std::abs(v);
    if (p == 2.0) return a * a;
    if (p == 3.0) return a * a * a;
    if (p == 4.0) {
        const double s = a * a;
        return s * s;
    }
    if (p == 6.0) {
        const double s = a * a;
        return s * s * s;
    }
    return std::pow(a, p);
}

void check_criterion_exponent(double e, const char* name) {
    if (std::isnan(e) || (!std::isinf(e) && !(e > 2.0)))
        throw std::invalid_argument(std::string(name) +
                                    " must exceed 2 (or be inf), got " + std::to_string(e));
}

}  // namespace

double mixed_norm(const ScalarField& f, double p, double q, double r) {
    require_finite(f, "mixed_norm");
    check_positive(p, "p");
    check_positive(q, "q");
    check_positive(r, "r");

    const Grid3& g = f.grid;
    const bool pinf = std::isinf(p);
    const bool qinf = std::isinf(q);
    const bool rinf = std::isinf(r);
    const double* v = f.values.data();

    double outer = 0.0;  // max when r = inf, else sum of plane^r * h3
    std::size_t idx = 0;
    for (int i3 = 0; i3 < g.n3; ++i3) {
        double plane = 0.0;
        for (int i2 = 0; i2 < g.n2; ++i2) {
            double line = 0.0;
            if (pinf) {
                for (int i1 = 0; i1 < g.n1; ++i1, ++idx) line = std::max(line, std::abs(v[idx]));
            } else {
                for (int i1 = 0; i1 < g.n1; ++i1, ++idx) line += pow_abs(v[idx], p);
                line = std::pow(line * g.h1(), 1.0 / p);
            }
            if (qinf)
                plane = std::max(plane, line);
            else
                plane += pow_abs(line, q);
        }
        if (!qinf) plane = std::pow(plane * g.h2(), 1.0 / q);
        if (rinf)
            outer = std::max(outer, plane);
        else
            outer += pow_abs(plane, r);
    }
    if (!rinf) outer = std::pow(outer * g.h3(), 1.0 / r);
    return outer;
}

double conjugate_exponent(double p) {
    if (std::isinf(p) && p > 0) return 2.0;
    if (std::isnan(p) || !(p > 2.0))
        throw std::invalid_argument("conjugate_exponent: p must exceed 2, got " +
                                    std::to_string(p));
    return 2.0 * p / (p - 2.0);
}

std::array<double, 3> conjugate_exponents(double p, double q, double r) {
    return {conjugate_exponent(p), conjugate_exponent(q), conjugate_exponent(r)};
}

Beta beta_of(double p, double q, double r) {
    check_criterion_exponent(p, "p");
    check_criterion_exponent(q, "q");
    check_criterion_exponent(r, "r");
    const double s = 1.0 / p + 1.0 / q + 1.0 / r;
    if (s > 1.0 + kBoundaryTol)
        throw std::invalid_argument("beta_of: 1/p + 1/q + 1/r = " + std::to_string(s) +
                                    " exceeds 1");
    if (std::abs(s - 1.0) <= kBoundaryTol) return {kInf, true};
    return {2.0 / (1.0 - s), false};
}

MixedExponents::MixedExponents(double p, double q, double r) : p_(p), q_(q), r_(r) {
    const Beta b = beta_of(p, q, r);
    s_ = 1.0 / p + 1.0 / q + 1.0 / r;
    beta_ = b.value;
    boundary_ = b.boundary;
}

}  // namespace nslab

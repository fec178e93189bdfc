#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "nslab/initial_fields.hpp"
#include "nslab/monitor.hpp"
#include "nslab/norms.hpp"
#include "nslab/solver.hpp"
#include "nslab/spectral.hpp"
#include "oracles.hpp"

using namespace nslab;
using oracles::rel_err;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kE = std::numbers::e;
}  // namespace

TEST_CASE("criterion integrand") {
    const Grid3 g(16);
    const MixedExponents all_inf(kInf, kInf, kInf);
    SUBCASE("zero field gives zero") {
        CHECK(criterion_integrand(VectorField(g), all_inf) == 0.0);
    }
    SUBCASE("x3-independent field gives zero despite nonzero u") {
        const VectorField u = single_mode(g, 2.0);
        CHECK(criterion_integrand(u, all_inf) <= 1e-13);
    }
    SUBCASE("Taylor-Green matches direct grid evaluation") {
        // d3 of Taylor-Green: (-A sin x1 cos x2 sin x3, A cos x1 sin x2 sin x3, 0);
        // evaluate max magnitude and the L2 norm from the analytic formulas.
        const Grid3 g32(32);
        const double A = 1.0;
        double maxmag = 0.0, sumsq = 0.0;
        for (int i3 = 0; i3 < g32.n3; ++i3)
            for (int i2 = 0; i2 < g32.n2; ++i2)
                for (int i1 = 0; i1 < g32.n1; ++i1) {
                    const double a =
                        -A * std::sin(g32.x1(i1)) * std::cos(g32.x2(i2)) * std::sin(g32.x3(i3));
                    const double b =
                        A * std::cos(g32.x1(i1)) * std::sin(g32.x2(i2)) * std::sin(g32.x3(i3));
                    const double mag = std::sqrt(a * a + b * b);
                    maxmag = std::max(maxmag, mag);
                    sumsq += a * a + b * b;
                }
        const double d3_l2 = std::sqrt(sumsq * g32.cell_volume());
        const double want = maxmag * maxmag / (1.0 + std::log(d3_l2 + kE));  // beta = 2
        const double got = criterion_integrand(taylor_green(g32, A), all_inf);
        CHECK(rel_err(got, want) <= 1e-12);
    }
    SUBCASE("boundary tuple raises a directing error") {
        CHECK_THROWS_AS(criterion_integrand(taylor_green(g, 1.0), MixedExponents(3, 3, 3)),
                        std::domain_error);
    }
}

TEST_CASE("accumulate") {
    auto rec = [](double t, double v) {
        MonitorRecord r;
        r.t = t;
        r.integrand = v;
        return r;
    };
    SUBCASE("constant integrand integrates exactly") {
        std::vector<MonitorRecord> rs{rec(0.0, 3.0), rec(0.25, 3.0), rec(0.5, 3.0),
                                      rec(2.0, 3.0)};
        accumulate(rs);
        CHECK(std::abs(rs.back().cumulative - 3.0 * 2.0) <= 1e-14);
        for (std::size_t i = 1; i < rs.size(); ++i)
            CHECK(rs[i].cumulative >= rs[i - 1].cumulative);
    }
    SUBCASE("single record integrates to zero") {
        std::vector<MonitorRecord> rs{rec(0.0, 7.0)};
        accumulate(rs);
        CHECK(rs[0].cumulative == 0.0);
    }
    SUBCASE("linear integrand is exact") {
        std::vector<MonitorRecord> rs;
        for (int i = 0; i <= 10; ++i) rs.push_back(rec(0.1 * i, 2.0 * 0.1 * i + 1.0));
        accumulate(rs);
        CHECK(std::abs(rs.back().cumulative - (1.0 + 1.0)) <= 1e-14);  // int (2t+1) over [0,1]
    }
    SUBCASE("non-monotone times rejected") {
        std::vector<MonitorRecord> rs{rec(0.0, 1.0), rec(0.2, 1.0), rec(0.1, 1.0)};
        CHECK_THROWS_AS(accumulate(rs), std::invalid_argument);
    }
}

TEST_CASE("trilinear_d3") {
    const Grid3 g(8);
    SUBCASE("zero and x3-independent fields give zero") {
        CHECK(trilinear_d3(VectorField(g)) == 0.0);
        CHECK(std::abs(trilinear_d3(single_mode(g, 3.0))) <= 1e-12);
    }
    SUBCASE("matches a nested-loop sum over spectral derivative fields") {
        for (std::uint64_t seed : {11u, 12u, 13u}) {
            const VectorField u = random_divfree(g, seed);
            ScalarField du[3][3];
            for (int axis = 1; axis <= 3; ++axis)
                for (int j = 1; j <= 3; ++j)
                    du[axis - 1][j - 1] = spectral_derivative(u.component(j), axis);
            double acc = 0.0;
            for (int i3 = 0; i3 < g.n3; ++i3)
                for (int i2 = 0; i2 < g.n2; ++i2)
                    for (int i1 = 0; i1 < g.n1; ++i1)
                        for (int i = 0; i < 3; ++i)
                            for (int j = 0; j < 3; ++j)
                                acc += du[2][i](i1, i2, i3) * du[i][j](i1, i2, i3) *
                                       du[2][j](i1, i2, i3);
            const double want = -acc * g.cell_volume();
            CHECK(rel_err(trilinear_d3(u), want) <= 1e-13);
        }
    }
}

TEST_CASE("audit of the trilinear Holder chain") {
    SUBCASE("no d3 variation: all entries zero, assertion holds") {
        const Audit24Row row = audit_chain_24(single_mode(Grid3(8), 1.0), MixedExponents(4, 4, 4));
        CHECK(row.a <= 1e-12);
        CHECK(row.b <= 1e-10);
        CHECK(row.holder_ok);
    }
    SUBCASE("Taylor-Green at (4,4,4)") {
        const Audit24Row row = audit_chain_24(taylor_green(Grid3(32), 1.0), MixedExponents(4, 4, 4));
        CHECK(row.holder_ok);
        CHECK(row.a > 0.0);
        CHECK(std::isfinite(row.c));
        CHECK(row.c > 0.0);
    }
    SUBCASE("random fields, several seeds and exponent tuples") {
        const Grid3 g(16);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const VectorField u = random_divfree(g, seed);
            for (auto [p, q, r] :
                 {std::array<double, 3>{4, 4, 4}, {kInf, kInf, kInf}, {4, 3.5, 8}}) {
                const Audit24Row row = audit_chain_24(u, MixedExponents(p, q, r));
                CHECK(row.holder_ok);
                CHECK(std::isfinite(row.b));
            }
        }
    }
}

TEST_CASE("audit of the H1 interpolation chain") {
    SUBCASE("zero field") {
        const Audit210Row row = audit_chain_210(VectorField(Grid3(8)));
        CHECK(row.lhs == 0.0);
        CHECK(row.rhs == 0.0);
        CHECK(row.interp_ok);
    }
    SUBCASE("single mode: both sides match closed forms") {
        // grad u has the single entry d1 u3 = cos x1, so |grad u| = |cos x1|.
        const Grid3 g(64);
        const Audit210Row row = audit_chain_210(single_mode(g, 1.0));
        const double box = std::pow(kTwoPi, 3);
        const double lhs_exact = kTwoPi * kTwoPi * (8.0 / 3.0);  // int |cos|^3
        const double rhs_exact = std::pow(box / 2.0, 0.75) * std::pow(box * 5.0 / 16.0, 0.25);
        CHECK(rel_err(row.lhs, lhs_exact) <= 1e-3);   // |cos|^3 is only C^2
        CHECK(rel_err(row.rhs, rhs_exact) <= 1e-12);  // band-limited moments are exact
        CHECK(row.interp_ok);
    }
    SUBCASE("random fields") {
        const Grid3 g(16);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const Audit210Row row = audit_chain_210(random_divfree(g, seed));
            CHECK(row.interp_ok);
            CHECK(std::isfinite(row.lemma_product));
            CHECK(row.lemma_product > 0.0);
        }
    }
}

TEST_CASE("energy residual and energy inequality on a single-mode run") {
    SolverConfig cfg;
    cfg.grid_n = 16;
    cfg.dt = 1e-3;
    cfg.t_end = 0.05;
    cfg.init = InitKind::SingleMode;
    Monitor monitor(MixedExponents(kInf, kInf, kInf), cfg.nu);
    run(cfg, [&](const SolverState& s) { monitor.observe(s); });
    const auto& recs = monitor.records();
    REQUIRE(recs.size() >= 2);
    for (std::size_t i = 1; i < recs.size(); ++i) {
        const double res = energy_residual(recs[i - 1], recs[i], cfg.dt, cfg.nu);
        CHECK(std::abs(res) <= 1e-6 * recs[i].grad_sq);
        const EnergyInequality ei = energy_inequality_check(recs[i], recs.front());
        CHECK(ei.holds);
    }
    // exact decay makes the inequality an equality up to time-quadrature error
    const EnergyInequality last = energy_inequality_check(recs.back(), recs.front());
    CHECK(std::abs(last.slack) <= 1e-6 * recs.front().energy);
    CHECK(monitor.energy_inequality_failures() == 0);
}

TEST_CASE("stationary zero trajectory has zero residual") {
    MonitorRecord a, b;
    a.t = 0.0;
    b.t = 1.0;
    CHECK(energy_residual(a, b, 1.0, 1.0) == 0.0);
    const EnergyInequality ei = energy_inequality_check(b, a);
    CHECK(ei.holds);
    CHECK(ei.slack == 0.0);
}

TEST_CASE("monitor records on a short Taylor-Green run") {
    SolverConfig cfg;
    cfg.grid_n = 16;
    cfg.dt = 2e-3;
    cfg.t_end = 0.05;
    cfg.init = InitKind::TaylorGreen;
    Monitor monitor(MixedExponents(4, 4, 4), cfg.nu);
    run(cfg, [&](const SolverState& s) { monitor.observe(s); });
    const auto& recs = monitor.records();
    REQUIRE(recs.size() == 26);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const MonitorRecord& r = recs[i];
        CHECK(std::isfinite(r.mixed));
        CHECK(r.integrand >= 0.0);
        CHECK(r.F >= 1.0);
        if (i > 0) CHECK(r.cumulative >= recs[i - 1].cumulative);
        CHECK(r.audit24_ok);
        CHECK(r.audit210_ok);
    }
    CHECK(monitor.audit24_failures() == 0);
    CHECK(monitor.audit210_failures() == 0);
    CHECK(monitor.final_cumulative() > 0.0);
    CHECK(monitor.max_integrand() > 0.0);
}

TEST_CASE("F equals 1 exactly when d3 u vanishes") {
    Monitor monitor(MixedExponents(kInf, kInf, kInf), 1.0);
    monitor.observe(SolverState{0.0, single_mode(Grid3(8), 1.0), 1.0, 1e-3, 0});
    CHECK(monitor.records()[0].F == doctest::Approx(1.0).epsilon(1e-12));
    monitor.observe(SolverState{1e-3, VectorField(Grid3(8)), 1.0, 1e-3, 1});
    CHECK(monitor.records()[1].F == 1.0);
}

TEST_CASE("sup-mode reporting on the boundary tuple") {
    SolverConfig cfg;
    cfg.grid_n = 16;
    cfg.dt = 2e-3;
    cfg.t_end = 0.02;
    cfg.init = InitKind::TaylorGreen;
    Monitor monitor(MixedExponents(3, 3, 3), cfg.nu);
    CHECK(monitor.sup_mode());
    run(cfg, [&](const SolverState& s) { monitor.observe(s); });
    const auto& recs = monitor.records();
    double sup = 0.0;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i].integrand == recs[i].mixed);  // the tracked quantity is the norm
        sup = std::max(sup, recs[i].integrand);
        CHECK(recs[i].cumulative == sup);  // running sup, still non-decreasing
        CHECK(std::isinf(recs[i].beta));
    }
}

TEST_CASE("criterion integrand commutes with axis relabeling in symmetric cases") {
    const Grid3 g(16);
    const VectorField u = random_divfree(g, 5);
    const VectorField v = oracles::relabel12(u);
    for (auto [p, q, r] : {std::array<double, 3>{kInf, kInf, 6}, {4, 4, 4}, {kInf, kInf, kInf}}) {
        const MixedExponents e(p, q, r);
        const MixedExponents swapped(q, p, r);
        const double a = criterion_integrand(u, e);
        const double b = criterion_integrand(v, swapped);
        CHECK(rel_err(b, a) <= 1e-12);
    }
}

TEST_CASE("monitor rejects non-increasing sample times") {
    Monitor monitor(MixedExponents(kInf, kInf, kInf), 1.0);
    monitor.observe(SolverState{0.1, taylor_green(Grid3(8), 1.0), 1.0, 1e-3, 0});
    CHECK_THROWS_AS(monitor.observe(SolverState{0.1, taylor_green(Grid3(8), 1.0), 1.0, 1e-3, 0}),
                    std::invalid_argument);
}

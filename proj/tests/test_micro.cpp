#include <doctest.h>

#include <cmath>

#include "dicke/micro.hpp"

using namespace dicke;
using namespace dicke::micro;

namespace {

ModelParams params_n(int n, double lam = 1.5) {
    ModelParams p;
    p.n_atoms = n;
    p.lambda = lam;
    return p;
}

std::vector<double> grid(double lo, double hi, double step) {
    std::vector<double> g;
    for (double e = lo; e <= hi + 0.5 * step; e += step) g.push_back(e);
    return g;
}

}  // namespace

TEST_CASE("support boundaries") {
    const FullModel model(params_n(1000));
    const double n = 1000.0;
    const double floor_per_n = -(1.5 * 1.5 + 1.0 / (16.0 * 1.5 * 1.5));
    CHECK(model.energy_floor() == doctest::Approx(n * floor_per_n));
    // below the deepest sector's ground state: empty support
    CHECK(model.dos_full((floor_per_n - 0.01) * n) == -std::numeric_limits<double>::infinity());
    CHECK(std::isfinite(model.dos_full((floor_per_n + 0.01) * n)));
    CHECK(std::isfinite(model.dos_full(0.5 * n)));
    // analytic lower x edge: subcritical sectors reach E/N = -x
    CHECK(model.support_lower_x(-0.05 * n) == doctest::Approx(0.05).epsilon(1e-12));
    // supercritical region: inverted deformed-ground relation
    const double x = model.support_lower_x(-1.0 * n);
    CHECK(-(4.0 * 1.5 * 1.5 * x * x + 1.0 / (16.0 * 1.5 * 1.5)) == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("aggregated temperature is positive and monotonically decreasing") {
    const FullModel model(params_n(10000));
    const auto g = grid(-2.0, -0.02, 0.02);
    const ThermoCurve c = model.curve_serial(g);
    for (std::size_t k = 1; k + 1 < g.size(); ++k) {
        CHECK(c.beta[k] > 0.0);
        // decreasing up to a sub-percent finite-size wiggle at the critical
        // energy precursor
        if (k > 1) CHECK(c.beta[k] < c.beta[k - 1] * 1.01);
    }
}

TEST_CASE("jz vanishes for positive energies, plateaus below the critical energy") {
    const FullModel model(params_n(100000));
    const double n = 100000.0;
    CHECK(std::abs(model.jz_full(0.3 * n)) < 5e-3);
    // approximately flat region Jz/N ~ -1/18 below E_c
    for (double e : {-1.5, -0.8, -0.3}) {
        CHECK(model.jz_full(e * n) == doctest::Approx(-1.0 / 18.0).epsilon(0.08));
    }
}

TEST_CASE("jx order parameter: zero above E_c, branch symmetric below") {
    const FullModel model(params_n(100000));
    const double n = 100000.0;
    CHECK(std::abs(model.jx_full(-0.02 * n, sector::Branch::plus)) < 1e-3);
    const double deep = model.jx_full(-1.5 * n, sector::Branch::plus);
    CHECK(deep > 0.1);
    CHECK(model.jx_full(-1.5 * n, sector::Branch::minus) == doctest::Approx(-deep).epsilon(1e-14));
    // continuous vanishing toward E_c
    CHECK(model.jx_full(-0.5 * n, sector::Branch::plus) < deep);
    CHECK(model.jx_full(-0.09 * n, sector::Branch::plus) <
          model.jx_full(-0.5 * n, sector::Branch::plus));
}

TEST_CASE("beta curve is smooth through per-sector critical energies") {
    // second finite difference of beta stays bounded under refinement: the
    // per-sector logarithmic spikes wash out in the aggregate
    const ModelParams p = params_n(10000);
    const FullModel model(p);
    auto max_second_diff = [&](double h) {
        const auto g = grid(-1.2, -0.3, h);
        const ThermoCurve c = model.curve_serial(g);
        double m = 0.0;
        for (std::size_t k = 2; k + 2 < g.size(); ++k)
            m = std::max(m, std::abs(c.beta[k + 1] - 2.0 * c.beta[k] + c.beta[k - 1]) / (h * h));
        return m;
    };
    const double coarse = max_second_diff(0.02);
    const double fine = max_second_diff(0.01);
    CHECK(fine < 4.0 * coarse + 1.0);
    CHECK(fine < 50.0);
}

TEST_CASE("beta tends to zero as E/N approaches zero from below") {
    const FullModel model(params_n(10000));
    const auto g = grid(-0.4, -0.005, 0.005);
    const ThermoCurve c = model.curve_serial(g);
    CHECK(c.beta[g.size() - 2] < 0.05);
    CHECK(c.beta[1] > c.beta[g.size() - 2]);
}

TEST_CASE("lowest-sector comparison mode") {
    const ModelParams p = params_n(100000);
    const FullModel first_order(p, {}, {}, DosMode::lowest_sector);
    const FullModel full(p);
    const double n = p.n_atoms;
    // deep in the broken phase the lowest accessible sector dominates: the
    // first-order observables should track the full integral
    for (double e : {-1.5, -0.8}) {
        const MicroPoint a = first_order.point(e * n);
        const MicroPoint b = full.point(e * n);
        CHECK(a.jz_per_n == doctest::Approx(b.jz_per_n).epsilon(0.15));
        CHECK(a.jx_plus_per_n == doctest::Approx(b.jx_plus_per_n).epsilon(0.15));
    }
    // exact plateau value in the supercritical window
    CHECK(first_order.point(-1.0 * n).jz_per_n == doctest::Approx(-1.0 / 18.0).epsilon(1e-10));
}

TEST_CASE("serial and OpenMP curves agree exactly") {
    const FullModel model(params_n(3000));
    const auto g = grid(-1.8, 0.2, 0.05);
    const ThermoCurve a = model.curve_serial(g);
    const ThermoCurve b = model.curve_omp(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
        CHECK((std::isnan(a.beta[k]) ? std::isnan(b.beta[k]) : a.beta[k] == b.beta[k]));
        CHECK(a.jz_per_n[k] == b.jz_per_n[k]);
        CHECK(a.jx_plus_per_n[k] == b.jx_plus_per_n[k]);
        CHECK(a.jx_minus_per_n[k] == -a.jx_plus_per_n[k]);
    }
}

TEST_CASE("dos converges under node refinement") {
    const ModelParams p = params_n(10000);
    const FullModel coarse(p, XQuadSpec{16, 30});
    const FullModel fine(p, XQuadSpec{32, 50});
    for (double e : {-1.2, -0.4, -0.05}) {
        const double a = coarse.dos_full(e * p.n_atoms);
        const double b = fine.dos_full(e * p.n_atoms);
        CHECK(a == doctest::Approx(b).epsilon(1e-6));
    }
}

TEST_CASE("micro_beta_full finite differences") {
    const std::vector<double> e{0.0, 1.0, 2.0, 3.0};
    const std::vector<double> lr{0.0, 2.0, 4.0, 6.0};
    const auto beta = micro_beta_full(e, lr);
    for (double b : beta) CHECK(b == doctest::Approx(2.0));
    CHECK_THROWS_AS(micro_beta_full(e, {0.0, 1.0}), std::invalid_argument);
}

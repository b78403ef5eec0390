#include <doctest.h>

#include <cmath>

#include "dicke/model.hpp"

using namespace dicke;

TEST_CASE("parameter validation") {
    ModelParams p;
    CHECK_NOTHROW(p.validate());
    p.omega = 0.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = ModelParams{};
    p.omega0 = -1.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = ModelParams{};
    p.lambda = -0.1;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = ModelParams{};
    p.n_atoms = 0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = ModelParams{};
    p.epsilon = -1e-9;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
}

TEST_CASE("sector id invariants") {
    CHECK_THROWS_AS(SectorId(100, 101), std::domain_error);
    CHECK_THROWS_AS(SectorId(100, -2), std::domain_error);
    CHECK_THROWS_AS(SectorId(100, 51), std::domain_error);  // parity mismatch
    CHECK_NOTHROW(SectorId(101, 51));                       // half-integer j for odd N
    const SectorId s(100, 50);
    CHECK(s.j() == doctest::Approx(25.0));
    CHECK(s.x() == doctest::Approx(0.25));
    CHECK(SectorId::max_sector(100).j() == doctest::Approx(50.0));
}

TEST_CASE("effective coupling") {
    ModelParams p;
    p.lambda = 1.5;
    p.n_atoms = 100;
    CHECK(effective_coupling(p, SectorId(100, 100)) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(effective_coupling(p, SectorId(100, 50)) == doctest::Approx(1.060660).epsilon(1e-6));
    CHECK(effective_coupling(p, SectorId(100, 0)) == doctest::Approx(0.0));
}

TEST_CASE("per-sector critical coupling") {
    ModelParams p;
    p.n_atoms = 100;
    CHECK(critical_coupling_sector(p, SectorId(100, 100)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(critical_coupling_sector(p, SectorId(100, 50)) ==
          doctest::Approx(0.707107).epsilon(1e-6));
    CHECK_THROWS_WITH_AS(critical_coupling_sector(p, SectorId(100, 0)),
                         doctest::Contains("no ESQPT"), std::domain_error);
}

TEST_CASE("sector critical energies") {
    CHECK(sector_critical_energies(SectorId(100, 100)).first == doctest::Approx(-50.0));
    CHECK(sector_critical_energies(SectorId(100, 100)).second == doctest::Approx(50.0));
    const auto [ec, es] = sector_critical_energies(SectorId(100, 50));
    CHECK(ec == doctest::Approx(-25.0));
    CHECK(es == doctest::Approx(25.0));
    CHECK(sector_critical_energies(SectorId(100, 0)).first == doctest::Approx(0.0));
    CHECK(sector_critical_energies(SectorId(100, 0)).second == doctest::Approx(0.0));
}

TEST_CASE("supercriticality criterion consistent across j") {
    ModelParams p;
    p.lambda = 1.5;
    p.n_atoms = 100;
    for (int tj = 2; tj <= 100; tj += 2) {
        const SectorId s(100, tj);
        const bool eff_super = effective_coupling(p, s) > 0.5 * std::sqrt(p.omega * p.omega0);
        const bool lam_super = p.lambda > critical_coupling_sector(p, s);
        CHECK(eff_super == lam_super);
    }
}

TEST_CASE("critical energies scale linearly in j") {
    const auto a = sector_critical_energies(SectorId(100, 20));
    const auto b = sector_critical_energies(SectorId(100, 40));
    CHECK(b.first == doctest::Approx(2.0 * a.first));
    CHECK(b.second == doctest::Approx(2.0 * a.second));
}

TEST_CASE("unit frequency guard") {
    ModelParams p;
    CHECK_NOTHROW(require_unit_frequencies(p));
    p.omega = 1.1;
    CHECK_THROWS_AS(require_unit_frequencies(p), std::domain_error);
}

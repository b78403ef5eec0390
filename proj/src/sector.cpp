#include "dicke/sector.hpp"

#include <cmath>
#include <limits>

#include "dicke/quadrature.hpp"

namespace dicke::sector {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// (2/pi) acos of the clamped square-root weight. The un-clamped argument
// equals 1 exactly at the turning points, so the weight vanishes there.
inline double weight(double y, double e, double lam) {
    const double denom = 2.0 * lam * lam * (1.0 - y * y);
    if (denom <= 0.0) return 0.0;
    double u = (y - e) / denom;
    if (u <= 0.0) return 1.0;  // full rotation accessible
    if (u >= 1.0) return 0.0;
    return (2.0 / M_PI) * std::acos(std::sqrt(u));
}

struct Integrals {
    double i0 = 0.0;  // \int w dy
    double i1 = 0.0;  // \int y w dy
    double i2 = 0.0;  // \int (1 - y^2) w dy
    double i3 = 0.0;  // \int sqrt(1 - y^2) w dy
};

Integrals acos_integrals(double lo, double hi, double e, double lam, const SectorTol& tol) {
    Integrals out;
    if (!(hi > lo)) return out;
    auto f = [e, lam](double y) -> std::array<double, 4> {
        const double w = weight(y, e, lam);
        const double r2 = std::max(0.0, 1.0 - y * y);
        return {w, y * w, r2 * w, std::sqrt(r2) * w};
    };
    const auto v = quad::adaptive_multi<4>(f, lo, hi, tol.abs_tol, tol.rel_tol);
    out.i0 = v[0];
    out.i1 = v[1];
    out.i2 = v[2];
    out.i3 = v[3];
    return out;
}

}  // namespace

double ground_energy_reduced(double lam) {
    if (lam <= 0.5) return -1.0;
    return -(2.0 * lam * lam + 1.0 / (8.0 * lam * lam));
}

TurningPoints turning_points_reduced(double e, double lam) {
    if (!(lam > 0.0)) throw std::domain_error("turning points require lambda > 0");
    double disc = 1.0 + 8.0 * e * lam * lam + 16.0 * std::pow(lam, 4);
    if (disc < 0.0) {
        if (disc < -1e-12)
            throw std::domain_error("energy below classical ground state of the sector");
        disc = 0.0;  // rounding at the degenerate ground-state root
    }
    const double s = std::sqrt(disc);
    TurningPoints tp;
    tp.y_minus = -(1.0 + s) / (4.0 * lam * lam);
    // y+ written to avoid cancellation when s ~ 1
    tp.y_plus = (2.0 * e + 4.0 * lam * lam) / (1.0 + s);
    return tp;
}

SectorPoint sector_point(double e, double lam, const SectorTol& tol) {
    SectorPoint p;
    const double e_gs = ground_energy_reduced(lam);
    if (e < e_gs) {
        p.rho_over_j = 0.0;
        p.jz_over_j = kNaN;
        p.jx_plus_over_j = kNaN;
        p.jx_bloch_over_j = kNaN;
        return p;
    }
    if (e > 1.0) {
        p.rho_over_j = 2.0;
        p.jz_over_j = 0.0;
        p.jx_plus_over_j = 0.0;
        return p;
    }
    if (!(lam > 0.0)) {
        // free-spin limit: uniform band on [-1, e]
        p.rho_over_j = e + 1.0;
        p.jz_over_j = (e + 1.0) > 0.0 ? 0.5 * (e - 1.0) : kNaN;
        p.jx_plus_over_j = 0.0;
        return p;
    }
    const TurningPoints tp = turning_points_reduced(e, lam);
    if (e >= -1.0) {
        // full rotations on [-1, e], partial ones on [e, y+]
        const Integrals in = acos_integrals(e, tp.y_plus, e, lam, tol);
        p.rho_over_j = (e + 1.0) + in.i0;
        p.jz_over_j = p.rho_over_j > 0.0 ? (0.5 * (e * e - 1.0) + in.i1) / p.rho_over_j : kNaN;
        p.jx_plus_over_j = 0.0;
        return p;
    }
    // deformed phase below the sector ESQPT: a single disjoint well
    const Integrals in = acos_integrals(tp.y_minus, tp.y_plus, e, lam, tol);
    p.rho_over_j = in.i0;
    if (in.i0 > 0.0) {
        p.jz_over_j = in.i1 / in.i0;
        p.jx_plus_over_j = in.i2 / in.i0;
        p.jx_bloch_over_j = in.i3 / in.i0;
    } else {
        p.jz_over_j = kNaN;
        p.jx_plus_over_j = kNaN;
        p.jx_bloch_over_j = kNaN;
    }
    return p;
}

namespace {

double reduced_energy(double energy, const SectorId& sector) {
    if (sector.twice_j() == 0)
        throw std::domain_error("j = 0 sector has no semiclassical observables");
    return energy / sector.j();
}

}  // namespace

TurningPoints turning_points(double energy, const SectorId& sector, const ModelParams& params) {
    require_unit_frequencies(params);
    const double lam = effective_coupling(params, sector);
    return turning_points_reduced(reduced_energy(energy, sector), lam);
}

double dos_sector(double energy, const SectorId& sector, const ModelParams& params,
                  const SectorTol& tol) {
    require_unit_frequencies(params);
    if (sector.twice_j() == 0) return 0.0;
    const double lam = effective_coupling(params, sector);
    return sector.j() * sector_point(energy / sector.j(), lam, tol).rho_over_j;
}

double jz_sector(double energy, const SectorId& sector, const ModelParams& params,
                 const SectorTol& tol) {
    require_unit_frequencies(params);
    const double lam = effective_coupling(params, sector);
    const double e = reduced_energy(energy, sector);
    if (e < ground_energy_reduced(lam))
        throw std::domain_error("energy below classical ground state of the sector");
    return sector_point(e, lam, tol).jz_over_j;
}

double jx_sector(double energy, const SectorId& sector, const ModelParams& params,
                 Branch branch, const SectorTol& tol) {
    require_unit_frequencies(params);
    const double lam = effective_coupling(params, sector);
    const double e = reduced_energy(energy, sector);
    if (e >= -1.0) return 0.0;
    if (e < ground_energy_reduced(lam))
        throw std::domain_error("energy below classical ground state of the sector");
    const double v = sector_point(e, lam, tol).jx_plus_over_j;
    return branch == Branch::plus ? v : -v;
}

std::vector<double> micro_beta_sector(const SectorCurve& curve) {
    const std::size_t n = curve.e_over_j.size();
    const double j = curve.sector.j();
    std::vector<double> beta(n, kNaN);
    auto log_rho = [&](std::size_t k) {
        return curve.rho[k] > 0.0 ? std::log(curve.rho[k]) : kNaN;
    };
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t a = k > 0 ? k - 1 : k;
        std::size_t b = k + 1 < n ? k + 1 : k;
        if (a == b) continue;
        const double la = log_rho(a);
        const double lb = log_rho(b);
        const double dE = j * (curve.e_over_j[b] - curve.e_over_j[a]);
        if (std::isfinite(la) && std::isfinite(lb) && dE > 0.0) beta[k] = (lb - la) / dE;
    }
    return beta;
}

namespace {

SectorCurve sweep(const ModelParams& params, const SectorId& sector,
                  const std::vector<double>& grid, const SectorTol& tol, bool parallel) {
    require_unit_frequencies(params);
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (!(grid[k] > grid[k - 1]))
            throw std::invalid_argument("energy grid must be strictly increasing");
    const double lam = effective_coupling(params, sector);
    const double j = sector.j();
    SectorCurve c{sector, grid, {}, {}, {}, {}};
    const std::size_t n = grid.size();
    c.rho.resize(n);
    c.jz_over_j.resize(n);
    c.jx_plus_over_j.resize(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long k = 0; k < static_cast<long>(n); ++k) {
        const SectorPoint p = sector_point(grid[k], lam, tol);
        c.rho[k] = j * p.rho_over_j;
        c.jz_over_j[k] = p.jz_over_j;
        c.jx_plus_over_j[k] = p.jx_plus_over_j;
    }
    c.beta = micro_beta_sector(c);
    return c;
}

}  // namespace

SectorCurve sector_curve_serial(const ModelParams& params, const SectorId& sector,
                                const std::vector<double>& grid, const SectorTol& tol) {
    return sweep(params, sector, grid, tol, false);
}

SectorCurve sector_curve_omp(const ModelParams& params, const SectorId& sector,
                             const std::vector<double>& grid, const SectorTol& tol) {
    return sweep(params, sector, grid, tol, true);
}

}  // namespace dicke::sector

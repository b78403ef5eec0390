#ifndef DICKE_SECTOR_HPP
#define DICKE_SECTOR_HPP

#include <vector>

#include "dicke/model.hpp"

namespace dicke::sector {

// Classical turning points of the atomic inversion y = Jz/j at fixed energy.
struct TurningPoints {
    double y_minus;
    double y_plus;
};

enum class Branch { plus, minus };

// Quadrature tolerances for the acos integrals.
struct SectorTol {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
};

// All reduced-coordinate quantities below depend on the sector only through
// e = E/j and the sector coupling lam. The public operations pass
// lam = effective_coupling(params, sector), which equals params.lambda for
// the j = N/2 sector.

TurningPoints turning_points_reduced(double e, double lam);

// rho(E,j)/j, Jz/j, Jx(+)/j at reduced energy e. rho_over_j is 0 below the
// sector ground energy; jz/jx carry NaN where undefined (e below ground).
// jx_plus_over_j averages the transverse weight (1 - y^2); jx_bloch_over_j
// averages the Bloch-sphere radius sqrt(1 - y^2), the variant under which the
// full-model microcanonical aggregate coincides with the canonical order
// parameter (used by the ensemble-comparison paths).
struct SectorPoint {
    double rho_over_j = 0.0;
    double jz_over_j = 0.0;
    double jx_plus_over_j = 0.0;
    double jx_bloch_over_j = 0.0;
};

SectorPoint sector_point(double e, double lam, const SectorTol& tol = {});

// Reduced ground energy: -(2 lam^2 + 1/(8 lam^2)) in the deformed phase
// (lam > 1/2), -1 otherwise.
double ground_energy_reduced(double lam);

// Public per-sector operations (absolute energies; omega = omega0 = 1 only).
TurningPoints turning_points(double energy, const SectorId& sector, const ModelParams& params);
double dos_sector(double energy, const SectorId& sector, const ModelParams& params,
                  const SectorTol& tol = {});
double jz_sector(double energy, const SectorId& sector, const ModelParams& params,
                 const SectorTol& tol = {});
double jx_sector(double energy, const SectorId& sector, const ModelParams& params,
                 Branch branch, const SectorTol& tol = {});

// Tabulated observables of one sector over an E/j grid.
struct SectorCurve {
    SectorId sector;
    std::vector<double> e_over_j;  // strictly increasing
    std::vector<double> rho;
    std::vector<double> jz_over_j;
    std::vector<double> jx_plus_over_j;
    std::vector<double> beta;
};

// beta = d log rho / dE from central differences on the curve's own grid;
// NaN where a stencil point has rho <= 0.
std::vector<double> micro_beta_sector(const SectorCurve& curve);

// Grid sweep; the _omp variant evaluates grid points in parallel and is
// point-for-point identical to the serial reference.
SectorCurve sector_curve_serial(const ModelParams& params, const SectorId& sector,
                                const std::vector<double>& e_over_j_grid,
                                const SectorTol& tol = {});
SectorCurve sector_curve_omp(const ModelParams& params, const SectorId& sector,
                             const std::vector<double>& e_over_j_grid,
                             const SectorTol& tol = {});

}  // namespace dicke::sector

#endif

#ifndef DICKE_MICRO_HPP
#define DICKE_MICRO_HPP

#include <string>
#include <vector>

#include "dicke/model.hpp"
#include "dicke/sector.hpp"

namespace dicke::micro {

enum class Ensemble { micro, canonical, laplace };

std::string ensemble_name(Ensemble e);

// Full-model observables tabulated over E/N.
struct ThermoCurve {
    Ensemble ensemble = Ensemble::micro;
    int n_atoms = 0;
    std::vector<double> e_per_n;
    std::vector<double> beta;
    std::vector<double> jz_per_n;
    std::vector<double> jx_plus_per_n;
    std::vector<double> jx_minus_per_n;
};

// x-quadrature layout: Gauss-Legendre panels, geometrically refined toward
// the lower support edge in the substituted variable t = sqrt(x - x_low).
struct XQuadSpec {
    int nodes_per_panel = 24;
    int num_panels = 40;  // 41 panels including the innermost stub; >= 512 nodes
};

enum class DosMode {
    full_integral,   // default: integral over all sectors at finite N
    lowest_sector,   // comparison mode: lowest accessible sector only
};

struct MicroPoint {
    double log_rho;       // -inf marks empty support
    double jz_per_n;      // NaN where undefined
    double jx_plus_per_n; // branch=+; branch=- is its negative. Aggregated
                          // with the Bloch-sphere weight sqrt(1-y^2), under
                          // which the microcanonical and canonical order
                          // parameters coincide in the thermodynamic limit.
};

class FullModel {
  public:
    explicit FullModel(const ModelParams& params, XQuadSpec quad = {},
                       sector::SectorTol tol = {}, DosMode mode = DosMode::full_integral);

    const ModelParams& params() const { return params_; }

    // Lower edge of the accessible x = j/N range at this energy (analytic).
    double support_lower_x(double energy) const;
    // Global classical ground energy (deepest sector, j = N/2).
    double energy_floor() const;

    MicroPoint point(double energy) const;
    double dos_full(double energy) const;  // log density
    double jz_full(double energy) const;
    double jx_full(double energy, sector::Branch branch) const;

    ThermoCurve curve_serial(const std::vector<double>& e_per_n_grid) const;
    ThermoCurve curve_omp(const std::vector<double>& e_per_n_grid) const;

  private:
    ThermoCurve curve(const std::vector<double>& grid, bool parallel) const;

    ModelParams params_;
    XQuadSpec quad_;
    sector::SectorTol tol_;
    DosMode mode_;
    std::vector<double> gl_nodes_;
    std::vector<double> gl_weights_;
};

// beta = d log rho / dE by central differences (one-sided at the ends);
// NaN where a stencil value is not finite.
std::vector<double> micro_beta_full(const std::vector<double>& energies,
                                    const std::vector<double>& log_rho);

}  // namespace dicke::micro

#endif

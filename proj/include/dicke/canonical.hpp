#ifndef DICKE_CANONICAL_HPP
#define DICKE_CANONICAL_HPP

#include <functional>
#include <vector>

#include "dicke/model.hpp"

namespace dicke::canonical {

// Saddle point of the Laplace evaluation of log Z.
struct LaplaceState {
    double beta = 0.0;
    double y0 = 0.0;  // maximizer of Psi; positive representative when broken
    double psi_value = 0.0;
    double psi_second = 0.0;  // Psi''(y0) < 0
    bool broken = false;      // nontrivial saddle +-y0
    bool near_critical = false;  // |Psi''| below curvature floor
};

struct CriticalPoint {
    double beta_c;
    double e_c_per_atom;
    double jz_c_per_atom;
};

struct Observables {
    double e_per_n;
    double jz_per_n;
    double jx_per_n;
};

enum class EpsilonMode { zero, limit_plus };

// Psi(y) = -beta omega y^2 + log 2cosh[(beta/2) sqrt(omega0^2 + (eps+4 lambda y)^2)]
double psi(double y, double beta, const ModelParams& params, double epsilon = 0.0);
double psi_prime(double y, double beta, const ModelParams& params, double epsilon = 0.0);
double psi_second(double y, double beta, const ModelParams& params, double epsilon = 0.0);

// log Z restricted to the j = N/2 sector, finite N (m-sum in closed form,
// single Gaussian-weighted integral).
double partition_jmax(const ModelParams& params, double beta);

// log Z of the full model at finite N (2^N cosh^N integrand, log domain).
double partition_full(const ModelParams& params, double beta, double epsilon = 0.0);

LaplaceState laplace_maximize(double beta, const ModelParams& params, double epsilon = 0.0);

// Root z > 1 of tanh(beta omega0 z / 2) = (omega omega0 / 4 lambda^2) z.
double solve_gap_equation(double beta, const ModelParams& params);

// beta_c = (2/omega0) atanh(omega omega0 / 4 lambda^2) plus the critical
// energy and Jz per atom from the trivial-saddle envelope. Throws when
// lambda <= sqrt(omega omega0)/2.
CriticalPoint critical_beta(const ModelParams& params);

// Thermodynamic-limit observables at the saddle. limit_plus evaluates at
// epsilon = 1e-6, 1e-7, 1e-8 and extrapolates to 0 (thermodynamic limit
// first, then the field limit), which resolves the broken-symmetry Jx.
Observables laplace_observables(double beta, const ModelParams& params,
                                EpsilonMode mode = EpsilonMode::zero);

// Inverse of the monotone map beta -> E/N given by laplace_observables.
double laplace_beta_of_energy(double e_per_n, const ModelParams& params);

// <E> = -d log Z/d beta and <Jz> = -(1/beta) d log Z/d omega0 by central
// differences with step-halving verification. Throws if the derivative
// estimate is unstable.
std::vector<double> energy_canonical(const std::function<double(double)>& log_z_of_beta,
                                     const std::vector<double>& beta_grid, double step = 1e-4);
std::vector<double> jz_canonical(const std::function<double(double)>& log_z_of_omega0,
                                 double beta, const std::vector<double>& omega0_grid,
                                 double step = 1e-4);

}  // namespace dicke::canonical

#endif

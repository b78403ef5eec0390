#ifndef DICKE_SCALING_HPP
#define DICKE_SCALING_HPP

#include <vector>

#include "dicke/micro.hpp"

namespace dicke::scaling {

// Least-squares straight line through (log N, log delta).
struct PowerLawFit {
    double alpha;      // delta ~ amplitude * N^{-alpha}
    double amplitude;
    double alpha_stderr;
    double rms;
    std::vector<double> residuals;  // log-domain, per point
};

struct JzPrecursor {
    double e_c_per_n;  // location of the Jz/N minimum
    double jz_min;     // value at the minimum
};

// Location and depth of the finite-N dip of Jz/N near the critical energy.
// Grid scan over [e_lo, e_hi] followed by quadratic refinement.
JzPrecursor find_precursor_jz(const ModelParams& params, double e_lo = -0.30,
                              double e_hi = -0.005, double e_step = 2.5e-3);

// Smallest E/N where the + branch of Jx/N drops below the threshold,
// refined by bisection.
double find_precursor_jx(const ModelParams& params, double threshold = 0.01,
                         double e_lo = -0.30, double e_hi = -0.005, double e_step = 2.5e-3);

PowerLawFit fit_powerlaw(const std::vector<double>& n_values,
                         const std::vector<double>& deltas);

struct ScalingRow {
    int n_atoms;
    double delta_e_jz;   // |E_c^{(N)} - E_c| / N from the Jz dip
    double delta_e_jx;   // same from the Jx threshold crossing
    double delta_jz;     // |Jz_min^{(N)} - Jz_c| / N
};

// Default N ladder {1e3, 3e3, 1e4, 3e4, 1e5}; reference critical values from
// the closed-form canonical analysis.
std::vector<ScalingRow> scaling_table(const ModelParams& base,
                                      const std::vector<int>& n_ladder,
                                      double jx_threshold = 0.01);

std::vector<int> default_n_ladder();

}  // namespace dicke::scaling

#endif
